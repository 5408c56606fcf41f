#include "sqfpow/homology.hpp"

#include <algorithm>
#include <map>

#include <gmpxx.h>

namespace sqfpow {

FieldChoice FieldChoice::prime(int p) {
    if (p < 2) throw std::invalid_argument("FieldChoice: characteristic must be >= 2");
    for (int d = 2; static_cast<long long>(d) * d <= p; ++d)
        if (p % d == 0) throw std::invalid_argument("FieldChoice: characteristic must be prime");
    return FieldChoice{Kind::Prime, p};
}

std::string FieldChoice::to_string() const {
    return kind == Kind::Rationals ? "q" : "gf" + std::to_string(p);
}

std::optional<FieldChoice> FieldChoice::parse(const std::string& s) {
    if (s == "q" || s == "Q" || s == "rationals") return rationals();
    if (s.rfind("gf", 0) == 0) {
        try {
            return prime(std::stoi(s.substr(2)));
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }
    return std::nullopt;
}

namespace {

long long rank_bareiss(const std::vector<std::vector<int>>& input, const Deadline& deadline) {
    const std::size_t rows = input.size();
    const std::size_t cols = rows == 0 ? 0 : input[0].size();
    if (rows == 0 || cols == 0) return 0;
    std::vector<std::vector<mpz_class>> m(rows, std::vector<mpz_class>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m[i][j] = input[i][j];

    std::size_t r = 0;
    mpz_class prev = 1;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        deadline.check("matrix_rank");
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                // Fraction-free update; the division by the previous pivot
                // is exact (Bareiss).
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return static_cast<long long>(r);
}

long long mod_inverse(long long a, long long p) {
    long long result = 1, base = a % p, e = p - 2;
    while (e > 0) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return result;
}

long long rank_mod_p(const std::vector<std::vector<int>>& input, long long p,
                     const Deadline& deadline) {
    const std::size_t rows = input.size();
    const std::size_t cols = rows == 0 ? 0 : input[0].size();
    if (rows == 0 || cols == 0) return 0;
    std::vector<std::vector<long long>> m(rows, std::vector<long long>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m[i][j] = ((input[i][j] % p) + p) % p;

    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        deadline.check("matrix_rank");
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        const long long inv = mod_inverse(m[r][c], p);
        for (std::size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * inv % p;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const long long f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] = ((m[i][j] - f * m[r][j]) % p + p) % p;
        }
        ++r;
    }
    return static_cast<long long>(r);
}

}  // namespace

long long matrix_rank(const std::vector<std::vector<int>>& m, const FieldChoice& field,
                      const Deadline& deadline) {
    if (field.kind == FieldChoice::Kind::Rationals) return rank_bareiss(m, deadline);
    return rank_mod_p(m, field.p, deadline);
}

std::vector<long long> reduced_homology_by_card(VertexSet sigma,
                                                const std::function<bool(VertexSet)>& is_face,
                                                const FieldChoice& field, const Deadline& deadline) {
    const std::vector<int> verts = sigma.to_vector();
    const int s = static_cast<int>(verts.size());

    // Collect faces grouped by cardinality (masks over the full universe).
    std::vector<std::vector<VertexSet>> faces(static_cast<std::size_t>(s) + 1);
    for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << s); ++sub) {
        VertexSet tau;
        for (int b = 0; b < s; ++b)
            if ((sub >> b) & 1) tau.add(verts[static_cast<std::size_t>(b)]);
        if (is_face(tau)) faces[static_cast<std::size_t>(tau.size())].push_back(tau);
    }
    for (auto& level : faces)
        std::sort(level.begin(), level.end(),
                  [](VertexSet a, VertexSet b) { return a.bits() < b.bits(); });

    // rank of the boundary map from cardinality c to cardinality c-1
    std::vector<long long> boundary_rank(static_cast<std::size_t>(s) + 2, 0);
    for (int c = 1; c <= s; ++c) {
        const auto& cols_faces = faces[static_cast<std::size_t>(c)];
        const auto& rows_faces = faces[static_cast<std::size_t>(c - 1)];
        if (cols_faces.empty() || rows_faces.empty()) continue;
        std::map<std::uint64_t, std::size_t> row_index;
        for (std::size_t i = 0; i < rows_faces.size(); ++i) row_index[rows_faces[i].bits()] = i;

        std::vector<std::vector<int>> m(rows_faces.size(), std::vector<int>(cols_faces.size(), 0));
        for (std::size_t j = 0; j < cols_faces.size(); ++j) {
            const std::vector<int> tv = cols_faces[j].to_vector();
            for (std::size_t pos = 0; pos < tv.size(); ++pos) {
                VertexSet facet = cols_faces[j];
                facet.remove(tv[pos]);
                auto it = row_index.find(facet.bits());
                if (it == row_index.end()) continue;  // cannot happen: complexes are closed
                m[it->second][j] = (pos % 2 == 0) ? 1 : -1;
            }
        }
        boundary_rank[static_cast<std::size_t>(c)] = matrix_rank(m, field, deadline);
    }

    std::vector<long long> betti(static_cast<std::size_t>(s) + 1, 0);
    for (int c = 0; c <= s; ++c) {
        const long long f = static_cast<long long>(faces[static_cast<std::size_t>(c)].size());
        betti[static_cast<std::size_t>(c)] = f - boundary_rank[static_cast<std::size_t>(c)] -
                                             boundary_rank[static_cast<std::size_t>(c) + 1];
    }
    return betti;
}

}  // namespace sqfpow
