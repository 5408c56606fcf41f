#ifndef SQFPOW_POWERS_HPP
#define SQFPOW_POWERS_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sqfpow/hypergraph.hpp"
#include "sqfpow/sqf_ideal.hpp"

namespace sqfpow {

/// The two concrete squarefree-power-like functions. For the ordinary kind
/// the F-number is the matching number; for the symbolic kind it is the
/// vertex cover number (= ht of the edge ideal).
enum class PowerKind { SquarefreeOrdinary, SquarefreeSymbolic };

std::string to_string(PowerKind kind);
std::optional<PowerKind> power_kind_from_string(const std::string& s);

/// I(H)^[k]: generated by the unions of k-matchings. k = 0 gives the unit
/// ideal; zero iff k exceeds the matching number.
SqfIdeal sqf_power(const Hypergraph& h, int k);

/// I(H)^{k}: squarefree monomials meeting every minimal vertex cover in at
/// least k vertices, as a minimal generating antichain. k <= 0 gives the
/// unit ideal; zero iff k exceeds the cover number.
SqfIdeal sqf_symbolic_power(const Hypergraph& h, int k);

/// Independent oracle for the same ideal: squarefree part of the
/// intersection of k-th powers of the minimal cover primes, via GenIdeal
/// arithmetic. Never shares code with sqf_symbolic_power.
SqfIdeal sqf_symbolic_power_oracle(const Hypergraph& h, int k);

SqfIdeal power_of_kind(const Hypergraph& h, int k, PowerKind kind);

/// Largest k with a nonzero power. Asserts the combinatorial identity
/// (matching number resp. cover number); a mismatch is an internal error.
int nu_F(const Hypergraph& h, PowerKind kind);

/// Whether F(H, nu_F(H)) is the principal ideal on the full vertex set.
/// For the symbolic kind this is decided both by the minimal-vertex-cover
/// criterion and by direct generator comparison; the two must agree.
bool is_principal_full_support(const Hypergraph& h, PowerKind kind);

/// A decreasing sequence I_0 = R ⊇ I_1 ⊇ ... of squarefree ideals in one
/// universe, with I_1 proper nonzero, materialized through its first zero.
class Filtration {
public:
    static Filtration from_power_kind(const Hypergraph& h, PowerKind kind);
    /// Validates the filtration conditions; the list should end with (or be
    /// padded to) the zero ideal.
    static Filtration from_ideals(std::vector<SqfIdeal> ideals);

    int universe_size() const { return universe_; }
    /// I_i; the zero ideal for any i beyond the stored prefix.
    const SqfIdeal& ideal(int i) const;
    /// nu = largest i with I_i nonzero.
    int nu() const { return nu_; }
    /// Union of generator supports over all levels.
    VertexSet support() const;

private:
    Filtration(int universe, std::vector<SqfIdeal> ideals, int nu);

    int universe_ = 0;
    std::vector<SqfIdeal> ideals_;  // indices 0..nu_
    SqfIdeal zero_;
    int nu_ = 0;
};

/// Q_n = sum of I_{n-i} J_i over the truncated window
/// max{0, n - nu(I)} <= i <= min{n, nu(J)}. The two filtrations must live
/// in the same universe with disjoint variable supports. For n beyond
/// nu(I) + nu(J) the window is empty and the zero ideal is returned.
SqfIdeal mixed_sum(const Filtration& fa, const Filtration& fb, int n);

/// Embed two filtrations on separate universes into their disjoint union.
std::pair<Filtration, Filtration> embed_disjoint(const Filtration& fa, const Filtration& fb);

struct DelConditionStep {
    int k = 0;
    bool holds = false;
    /// A generator of del*(I_k) outside I_{k-1}, when the step fails.
    std::optional<VertexSet> violation;
};

struct DelConditionReport {
    std::vector<DelConditionStep> steps;  // k = 1 .. nu
    bool all_hold = true;
};

/// del*(I_k) ⊆ I_{k-1} for each step: the sufficient criterion for the
/// inclusions to be Tor-vanishing. Only the containment is recorded; Tor
/// itself is never computed.
DelConditionReport check_del_condition(const Filtration& f);

/// Provider abstraction so the axiom checker can be pointed at a
/// deliberately corrupted function in tests.
using PowerProvider = std::function<SqfIdeal(const Hypergraph&, int)>;

PowerProvider provider_of_kind(PowerKind kind);

struct AxiomViolation {
    char axiom = '?';          // 'a', 'b', 'c' or 'd'
    std::string description;   // minimal witness, human-readable
};

struct AxiomReport {
    bool all_hold = true;
    std::vector<AxiomViolation> violations;
    int checks_run = 0;
};

/// Verifies the four squarefree-power-like axioms on a sample set:
/// (a) F(H,0) unit, F(H,1) = I(H), generators inside K[V(H)];
/// (b) del* F(H,k) ⊆ F(H,k-1);
/// (c) restriction to any induced sub-hypergraph;
/// (d) the disjoint-union convolution formula, on pairs drawn from the
///     sample while the combined universe fits.
AxiomReport check_splf_axioms(const std::vector<Hypergraph>& samples, const PowerProvider& f,
                              int max_pair_universe = 12);

AxiomReport check_splf_axioms(const std::vector<Hypergraph>& samples, PowerKind kind,
                              int max_pair_universe = 12);

}  // namespace sqfpow

#endif  // SQFPOW_POWERS_HPP
