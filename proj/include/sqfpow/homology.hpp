#ifndef SQFPOW_HOMOLOGY_HPP
#define SQFPOW_HOMOLOGY_HPP

#include <chrono>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sqfpow/vertex_set.hpp"

namespace sqfpow {

/// Coefficient field for homology ranks. The paper works over an arbitrary
/// field; rationals (exact integer arithmetic) are the default, prime
/// fields are offered for speed and characteristic probes.
struct FieldChoice {
    enum class Kind { Rationals, Prime };
    Kind kind = Kind::Rationals;
    int p = 0;

    static FieldChoice rationals() { return FieldChoice{Kind::Rationals, 0}; }
    static FieldChoice prime(int p);

    bool operator==(const FieldChoice&) const = default;
    std::string to_string() const;
    /// Accepts "q", "gf2", "gf3", "gf<p>".
    static std::optional<FieldChoice> parse(const std::string& s);
};

/// Thrown when a configured cost guard (time or size) trips.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Optional wall-clock deadline threaded through the expensive loops.
struct Deadline {
    std::optional<std::chrono::steady_clock::time_point> at;

    static Deadline none() { return Deadline{}; }
    static Deadline after_ms(long long ms) {
        return Deadline{std::chrono::steady_clock::now() + std::chrono::milliseconds(ms)};
    }

    void check(const char* where) const {
        if (at && std::chrono::steady_clock::now() > *at)
            throw BudgetError(std::string("time budget exceeded in ") + where);
    }
};

/// Exact rank of a small integer matrix: fraction-free (Bareiss) elimination
/// over big integers for the rationals, modular elimination for GF(p).
long long matrix_rank(const std::vector<std::vector<int>>& m, const FieldChoice& field,
                      const Deadline& deadline = Deadline::none());

/// Reduced simplicial homology ranks of the complex
///   { tau ⊆ sigma : is_face(tau) }
/// (faces are required to be downward closed by the caller). Entry c of the
/// result is dim H~_{c-1}, i.e. homology is indexed by face cardinality.
/// Conventions: the void complex (no faces) has no homology at all; the
/// empty complex {∅} has H~_{-1} of rank 1.
std::vector<long long> reduced_homology_by_card(VertexSet sigma,
                                                const std::function<bool(VertexSet)>& is_face,
                                                const FieldChoice& field,
                                                const Deadline& deadline = Deadline::none());

}  // namespace sqfpow

#endif  // SQFPOW_HOMOLOGY_HPP
