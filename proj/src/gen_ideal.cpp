#include "sqfpow/gen_ideal.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sqfpow {

int GenMonomial::degree() const {
    return std::accumulate(e_.begin(), e_.end(), 0,
                           [](int acc, std::uint8_t x) { return acc + static_cast<int>(x); });
}

bool GenMonomial::divides(const GenMonomial& other) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > other.e_[i]) return false;
    return true;
}

bool GenMonomial::is_squarefree() const {
    return std::all_of(e_.begin(), e_.end(), [](std::uint8_t x) { return x <= 1; });
}

VertexSet GenMonomial::support() const {
    VertexSet s;
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > 0) s.add(static_cast<int>(i));
    return s;
}

GenMonomial GenMonomial::lcm(const GenMonomial& other) const {
    std::vector<std::uint8_t> e(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) e[i] = std::max(e_[i], other.e_[i]);
    return GenMonomial(std::move(e));
}

GenMonomial GenMonomial::times(const GenMonomial& other) const {
    std::vector<std::uint8_t> e(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) {
        int v = static_cast<int>(e_[i]) + static_cast<int>(other.e_[i]);
        if (v > kMaxExponent) throw std::overflow_error("GenMonomial: exponent cap exceeded");
        e[i] = static_cast<std::uint8_t>(v);
    }
    return GenMonomial(std::move(e));
}

namespace {

std::vector<GenMonomial> divisibility_minimalize(std::vector<GenMonomial> gens) {
    std::sort(gens.begin(), gens.end(), [](const GenMonomial& a, const GenMonomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.exponents() < b.exponents();
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<GenMonomial> out;
    for (const GenMonomial& g : gens) {
        bool dominated = false;
        for (const GenMonomial& kept : out) {
            if (kept.divides(g)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) out.push_back(g);
    }
    return out;
}

}  // namespace

GenIdeal::GenIdeal(int n_vars, std::vector<GenMonomial> gens) : n_(n_vars) {
    for (const GenMonomial& g : gens)
        if (g.n_vars() != n_vars) throw std::invalid_argument("GenIdeal: variable count mismatch");
    gens_ = divisibility_minimalize(std::move(gens));
}

GenIdeal GenIdeal::from_sqf(const SqfIdeal& a) {
    std::vector<GenMonomial> gens;
    gens.reserve(a.gens().size());
    for (VertexSet g : a.gens()) gens.push_back(GenMonomial::squarefree(a.universe_size(), g));
    return GenIdeal(a.universe_size(), std::move(gens));
}

GenIdeal GenIdeal::variable_prime(int n_vars, VertexSet c) {
    std::vector<GenMonomial> gens;
    c.for_each([&](int v) { gens.push_back(GenMonomial::squarefree(n_vars, VertexSet::single(v))); });
    return GenIdeal(n_vars, std::move(gens));
}

bool GenIdeal::contains(const GenMonomial& m) const {
    for (const GenMonomial& g : gens_)
        if (g.divides(m)) return true;
    return false;
}

GenIdeal gen_intersect(const GenIdeal& a, const GenIdeal& b, std::size_t budget) {
    if (a.n_vars() != b.n_vars()) throw std::invalid_argument("gen_intersect: universe mismatch");
    std::size_t pairs = a.gens().size() * b.gens().size();
    if (pairs > budget) throw std::runtime_error("gen_intersect: generator budget exceeded");
    std::vector<GenMonomial> gens;
    gens.reserve(pairs);
    for (const GenMonomial& ga : a.gens())
        for (const GenMonomial& gb : b.gens()) gens.push_back(ga.lcm(gb));
    return GenIdeal::from_gens(a.n_vars(), std::move(gens));
}

GenIdeal gen_product(const GenIdeal& a, const GenIdeal& b, std::size_t budget) {
    if (a.n_vars() != b.n_vars()) throw std::invalid_argument("gen_product: universe mismatch");
    std::size_t pairs = a.gens().size() * b.gens().size();
    if (pairs > budget) throw std::runtime_error("gen_product: generator budget exceeded");
    std::vector<GenMonomial> gens;
    gens.reserve(pairs);
    for (const GenMonomial& ga : a.gens())
        for (const GenMonomial& gb : b.gens()) gens.push_back(ga.times(gb));
    return GenIdeal::from_gens(a.n_vars(), std::move(gens));
}

GenIdeal gen_power(const GenIdeal& a, int k, std::size_t budget) {
    if (k < 1) throw std::invalid_argument("gen_power: k must be >= 1");
    GenIdeal acc = a;
    for (int i = 1; i < k; ++i) acc = gen_product(acc, a, budget);
    return acc;
}

SqfIdeal sqf_part(const GenIdeal& a) {
    std::vector<VertexSet> gens;
    for (const GenMonomial& g : a.gens())
        if (g.is_squarefree()) gens.push_back(g.support());
    return SqfIdeal::from_gens(a.n_vars(), std::move(gens));
}

}  // namespace sqfpow
