#include "sqfpow/sqf_ideal.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace sqfpow {

namespace {

std::vector<VertexSet> minimalize(std::vector<VertexSet> gens) {
    // A generator list containing the empty support generates the ring.
    for (VertexSet g : gens)
        if (g.empty()) return {VertexSet{}};
    std::sort(gens.begin(), gens.end(), [](VertexSet a, VertexSet b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.bits() < b.bits();
    });
    std::vector<VertexSet> out;
    for (VertexSet g : gens) {
        bool dominated = false;
        for (VertexSet kept : out) {
            if (kept.subset_of(g)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) out.push_back(g);
    }
    std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) { return a.bits() < b.bits(); });
    return out;
}

}  // namespace

SqfIdeal::SqfIdeal(int universe_size, std::vector<VertexSet> gens) : n_(universe_size) {
    if (universe_size < 0 || universe_size > kMaxUniverse)
        throw std::invalid_argument("SqfIdeal: universe size must be in [0,64]");
    const VertexSet universe = VertexSet::full(universe_size);
    for (VertexSet g : gens)
        if (!g.subset_of(universe)) throw std::invalid_argument("SqfIdeal: generator outside universe");
    gens_ = minimalize(std::move(gens));
}

VertexSet SqfIdeal::support() const {
    VertexSet s;
    for (VertexSet g : gens_) s |= g;
    return s;
}

bool SqfIdeal::contains_monomial(VertexSet m) const {
    for (VertexSet g : gens_)
        if (g.subset_of(m)) return true;
    return false;
}

int SqfIdeal::delta_min_degree() const {
    if (is_zero()) return kDeltaInfinity;
    int best = kDeltaInfinity;
    for (VertexSet g : gens_) best = std::min(best, g.size());
    return best;
}

void check_same_universe(const SqfIdeal& a, const SqfIdeal& b) {
    if (a.universe_size() != b.universe_size())
        throw std::invalid_argument("SqfIdeal: universe mismatch");
}

SqfIdeal sum(const SqfIdeal& a, const SqfIdeal& b) {
    check_same_universe(a, b);
    std::vector<VertexSet> gens = a.gens_;
    gens.insert(gens.end(), b.gens_.begin(), b.gens_.end());
    return SqfIdeal(a.n_, std::move(gens));
}

SqfIdeal product(const SqfIdeal& a, const SqfIdeal& b) {
    check_same_universe(a, b);
    if (a.is_zero() || b.is_zero()) return SqfIdeal::zero(a.n_);
    if (a.support().intersects(b.support()))
        throw std::invalid_argument(
            "SqfIdeal::product: generator supports overlap; use the GenIdeal oracle");
    std::vector<VertexSet> gens;
    gens.reserve(a.gens_.size() * b.gens_.size());
    for (VertexSet ga : a.gens_)
        for (VertexSet gb : b.gens_) gens.push_back(ga | gb);
    return SqfIdeal(a.n_, std::move(gens));
}

SqfIdeal intersect(const SqfIdeal& a, const SqfIdeal& b) {
    check_same_universe(a, b);
    std::vector<VertexSet> gens;
    gens.reserve(a.gens_.size() * b.gens_.size());
    for (VertexSet ga : a.gens_)
        for (VertexSet gb : b.gens_) gens.push_back(ga | gb);
    return SqfIdeal(a.n_, std::move(gens));
}

SqfIdeal colon(const SqfIdeal& a, VertexSet m) {
    std::vector<VertexSet> gens;
    gens.reserve(a.gens_.size());
    for (VertexSet g : a.gens_) gens.push_back(g - m);
    return SqfIdeal(a.n_, std::move(gens));
}

SqfIdeal restrict_to(const SqfIdeal& a, VertexSet m) {
    std::vector<VertexSet> gens;
    for (VertexSet g : a.gens_)
        if (g.subset_of(m)) gens.push_back(g);
    return SqfIdeal(a.n_, std::move(gens));
}

SqfIdeal del_star(const SqfIdeal& a) {
    if (a.is_zero() || a.is_unit())
        throw std::invalid_argument("del_star: undefined for the zero and unit ideals");
    std::vector<VertexSet> gens;
    for (VertexSet g : a.gens_) {
        g.for_each([&](int v) {
            VertexSet reduced = g;
            reduced.remove(v);
            gens.push_back(reduced);
        });
    }
    return SqfIdeal(a.n_, std::move(gens));
}

SqfIdeal SqfIdeal::embed(int new_universe, const std::vector<int>& new_index_of_old) const {
    std::vector<VertexSet> gens;
    gens.reserve(gens_.size());
    for (VertexSet g : gens_) {
        VertexSet mapped;
        g.for_each([&](int v) { mapped.add(new_index_of_old.at(static_cast<std::size_t>(v))); });
        gens.push_back(mapped);
    }
    return SqfIdeal(new_universe, std::move(gens));
}

std::string SqfIdeal::to_json() const {
    nlohmann::json j;
    j["n"] = n_;
    j["gens"] = nlohmann::json::array();
    for (VertexSet g : gens_) j["gens"].push_back(g.to_vector());
    return j.dump();
}

SqfIdeal SqfIdeal::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    int n = j.at("n").get<int>();
    std::vector<VertexSet> gens;
    for (const auto& g : j.at("gens")) {
        VertexSet s;
        for (const auto& v : g) s.add(v.get<int>());
        gens.push_back(s);
    }
    return SqfIdeal(n, std::move(gens));
}

}  // namespace sqfpow
