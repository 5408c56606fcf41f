#ifndef SQFPOW_BETTI_HPP
#define SQFPOW_BETTI_HPP

#include <map>
#include <string>
#include <utility>

#include "sqfpow/homology.hpp"
#include "sqfpow/powers.hpp"
#include "sqfpow/sqf_ideal.hpp"

namespace sqfpow {

/// Whether a table records Betti numbers of S/a or of the ideal a itself.
/// The two differ by the homological shift beta_{i,s}(a) = beta_{i+1,s}(S/a).
enum class BettiLevel { QuotientModule, Ideal };

struct BettiTable {
    BettiLevel level = BettiLevel::QuotientModule;
    int universe = 0;
    /// (homological index, multidegree bitmask) -> rank; only nonzero ranks
    /// are stored.
    std::map<std::pair<int, std::uint64_t>, long long> entries;

    long long at(int i, VertexSet s) const {
        auto it = entries.find({i, s.bits()});
        return it == entries.end() ? 0 : it->second;
    }

    /// Coarse N-graded view: (i, total degree) -> summed rank.
    std::map<std::pair<int, int>, long long> coarse() const;

    std::string to_json() const;
};

struct BettiOptions {
    FieldChoice field = FieldChoice::rationals();
    /// Universes beyond this raise BudgetError (2^n complexes per degree).
    int universe_cap = 12;
    Deadline deadline = Deadline::none();
};

/// Multigraded Betti table of S/a via reduced homology of the restricted
/// Stanley-Reisner complex (Hochster). Only multidegrees in the lcm lattice
/// of the generators are visited; for the quotient table this includes the
/// empty multidegree carrying beta_0(S/a) = 1.
/// Sentinels: the zero ideal gives an empty table; the unit ideal gives the
/// table of the unit module, a single entry (0, empty) -> 1.
BettiTable betti_table(const SqfIdeal& a, const BettiOptions& opts = {});

/// Independent second route: ideal-level table from reduced homology of the
/// upper Koszul subcomplex { tau ⊆ sigma : x_{sigma - tau} ∈ a }. Must agree
/// with betti_table entrywise after the index shift.
BettiTable betti_table_koszul(const SqfIdeal& a, const BettiOptions& opts = {});

/// Entrywise agreement of a quotient-level and an ideal-level table under
/// the standard shift (the quotient's (0, empty) entry is structural).
bool tables_agree(const BettiTable& quotient_table, const BettiTable& ideal_table);

/// Castelnuovo-Mumford regularity max{ j - i : beta_{i,j}(a) != 0 } of the
/// ideal; 0 for both the zero ideal and the unit ideal.
int regularity(const SqfIdeal& a, const BettiOptions& opts = {});

struct IndexWindow {
    int lo = 0;
    int hi = -1;  // empty when hi < lo
    bool empty() const { return hi < lo; }
};

struct MixedSumRegularityReport {
    int n = 0;
    int reg_direct = 0;
    /// Theorem value computed over both displayed index windows.
    int formula_first = 0;
    int formula_second = 0;
    IndexWindow first_i, first_j, second_i, second_j;
    bool del_condition_ok = false;
    bool equal = false;
};

/// Direct reg(Q_n) against the Tor-vanishing mixed-sum formula, evaluated
/// over both displayed forms of the index windows. Requires both
/// filtrations to satisfy the del* criterion.
MixedSumRegularityReport verify_mixed_sum_regularity(const Filtration& fa, const Filtration& fb,
                                                     int n, const BettiOptions& opts = {});

}  // namespace sqfpow

#endif  // SQFPOW_BETTI_HPP
