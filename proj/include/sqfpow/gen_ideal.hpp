#ifndef SQFPOW_GEN_IDEAL_HPP
#define SQFPOW_GEN_IDEAL_HPP

#include <cstdint>
#include <vector>

#include "sqfpow/sqf_ideal.hpp"

namespace sqfpow {

/// Hard cap on a single exponent; the symbolic-power oracle never needs
/// exponents beyond k <= n.
inline constexpr int kMaxExponent = 255;

/// Exponent-vector monomial. Exists only to back the GenIdeal oracle.
class GenMonomial {
public:
    GenMonomial() = default;
    explicit GenMonomial(int n_vars) : e_(static_cast<std::size_t>(n_vars), 0) {}
    explicit GenMonomial(std::vector<std::uint8_t> exponents) : e_(std::move(exponents)) {}

    static GenMonomial squarefree(int n_vars, VertexSet support) {
        GenMonomial m(n_vars);
        support.for_each([&](int v) { m.e_[static_cast<std::size_t>(v)] = 1; });
        return m;
    }

    int n_vars() const { return static_cast<int>(e_.size()); }
    int exponent(int v) const { return e_[static_cast<std::size_t>(v)]; }
    const std::vector<std::uint8_t>& exponents() const { return e_; }

    int degree() const;
    bool divides(const GenMonomial& other) const;
    bool is_squarefree() const;
    VertexSet support() const;

    GenMonomial lcm(const GenMonomial& other) const;
    GenMonomial times(const GenMonomial& other) const;  // throws past kMaxExponent

    bool operator==(const GenMonomial&) const = default;
    auto operator<=>(const GenMonomial&) const = default;

private:
    std::vector<std::uint8_t> e_;
};

/// A monomial ideal given by its divisibility-minimal generator list.
/// Oracle-only arithmetic: intersection, power, squarefree part.
class GenIdeal {
public:
    GenIdeal() = default;

    static GenIdeal zero(int n_vars) { return GenIdeal(n_vars, {}); }
    static GenIdeal from_gens(int n_vars, std::vector<GenMonomial> gens) {
        return GenIdeal(n_vars, std::move(gens));
    }
    static GenIdeal from_sqf(const SqfIdeal& a);
    /// The variable prime ideal (x_v : v in c).
    static GenIdeal variable_prime(int n_vars, VertexSet c);

    int n_vars() const { return n_; }
    const std::vector<GenMonomial>& gens() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }

    bool contains(const GenMonomial& m) const;
    bool operator==(const GenIdeal&) const = default;

private:
    GenIdeal(int n_vars, std::vector<GenMonomial> gens);

    int n_ = 0;
    std::vector<GenMonomial> gens_;
};

/// Cost guard for intermediate generator lists in oracle arithmetic.
inline constexpr std::size_t kDefaultGenBudget = 1'000'000;

GenIdeal gen_intersect(const GenIdeal& a, const GenIdeal& b,
                       std::size_t budget = kDefaultGenBudget);
GenIdeal gen_product(const GenIdeal& a, const GenIdeal& b,
                     std::size_t budget = kDefaultGenBudget);
GenIdeal gen_power(const GenIdeal& a, int k, std::size_t budget = kDefaultGenBudget);

/// Ideal generated by the squarefree minimal generators.
SqfIdeal sqf_part(const GenIdeal& a);

}  // namespace sqfpow

#endif  // SQFPOW_GEN_IDEAL_HPP
