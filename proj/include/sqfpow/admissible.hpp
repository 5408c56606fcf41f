#ifndef SQFPOW_ADMISSIBLE_HPP
#define SQFPOW_ADMISSIBLE_HPP

#include <map>
#include <string>
#include <vector>

#include "sqfpow/betti.hpp"
#include "sqfpow/powers.hpp"

namespace sqfpow {

/// A checkable witness for adm^F / ind: the set C with its partition, the
/// per-part F-numbers, and the achieved score |C| - sum nu_F(H[C_i]).
struct AdmissibleCertificate {
    VertexSet C;
    std::vector<VertexSet> parts;
    std::vector<int> part_nu;
    PowerKind kind = PowerKind::SquarefreeSymbolic;
    int k = 0;
    int score = 0;

    std::string to_json() const;
    static AdmissibleCertificate from_json(const std::string& text);
};

struct CertificateCheck {
    bool ok = false;
    /// 1..4: the first violated admissibility condition; 0 when valid;
    /// negative codes flag structural problems (bad partition / wrong
    /// nu / wrong score).
    int violated_condition = 0;
    std::string detail;
};

/// Re-checks every condition from scratch: the partition structure, each
/// part inducing an edge (1), edges of H[C] staying inside parts (2), the
/// F-number window (3), per-part principality on the full part support (4),
/// and the recorded nu values and score.
CertificateCheck validate_certificate(const AdmissibleCertificate& cert, const Hypergraph& h);

struct AdmResult {
    int value = 0;
    AdmissibleCertificate certificate;
};

/// Maximum score over all k-admissible F-sets, with a witness. Ties are
/// broken toward the lexicographically smallest C and then the fewest
/// parts. Requires 1 <= k <= nu_F(h, kind).
AdmResult adm_number(const Hypergraph& h, int k, PowerKind kind);

/// The k-admissible independence number ind(g, k) = max alpha(G[C]) over
/// k-admissible sets, computed through the beta/alpha phrasing and
/// cross-checked against the generic adm path (a mismatch is an internal
/// error). Requires 1 <= k <= beta(g).
AdmResult ind_number(const Hypergraph& g, int k);

/// Scans all C in one pass and answers adm for every k; used by campaigns.
class AdmissibleAnalyzer {
public:
    AdmissibleAnalyzer(const Hypergraph& h, PowerKind kind);

    int nu() const { return nu_; }
    AdmResult adm(int k) const;

private:
    struct SubsetData {
        VertexSet C;
        std::vector<VertexSet> components;
        int nu_sum = 0;
        bool all_principal = false;
    };

    const Hypergraph h_;
    PowerKind kind_;
    int nu_ = 0;
    std::vector<SubsetData> subsets_;
};

struct LowerBoundReport {
    int k = 0;
    PowerKind kind = PowerKind::SquarefreeSymbolic;
    int reg = 0;
    int adm = 0;
    int slack = 0;  // reg - (adm + k), >= 0 by the lower-bound theorem
    AdmissibleCertificate certificate;
};

/// Computes reg(F(h,k)) and adm^F(h,k) and reports the slack.
LowerBoundReport lower_bound_check(const Hypergraph& h, int k, PowerKind kind,
                                   const BettiOptions& opts = {});

}  // namespace sqfpow

#endif  // SQFPOW_ADMISSIBLE_HPP
