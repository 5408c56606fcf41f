#include "sqfpow/io.hpp"

#include <json.hpp>

namespace sqfpow {

std::string to_graph6(const Graph& g) {
    const int n = g.n_vertices();
    if (n > 62) throw std::invalid_argument("to_graph6: only the short form (n <= 62) is supported");
    std::string out;
    out.push_back(static_cast<char>(63 + n));
    // Upper triangle, column by column: x(0,1); x(0,2), x(1,2); x(0,3), ...
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
    return out;
}

Graph from_graph6(const std::string& s, int line_no) {
    if (s.empty()) throw ParseError("empty graph6 string", line_no, 1);
    std::size_t pos = 0;
    if (s[0] == ':' || s[0] == '&')
        throw ParseError("sparse6/digraph6 input is not supported", line_no, 1);
    int first = static_cast<unsigned char>(s[pos]);
    if (first < 63 || first > 126) throw ParseError("bad graph6 byte", line_no, 1);
    if (first == 126) throw ParseError("graph6 long form (n > 62) is not supported", line_no, 1);
    const int n = first - 63;
    ++pos;

    const int need_bits = n * (n - 1) / 2;
    const std::size_t need_bytes = static_cast<std::size_t>((need_bits + 5) / 6);
    if (s.size() - pos < need_bytes)
        throw ParseError("graph6 string too short", line_no, static_cast<int>(s.size()) + 1);
    if (s.size() - pos > need_bytes)
        throw ParseError("trailing characters after graph6 data", line_no,
                         static_cast<int>(pos + need_bytes) + 1);

    std::vector<std::pair<int, int>> pairs;
    int bit_index = 0;
    for (std::size_t b = 0; b < need_bytes; ++b) {
        int c = static_cast<unsigned char>(s[pos + b]);
        if (c < 63 || c > 126)
            throw ParseError("bad graph6 byte", line_no, static_cast<int>(pos + b) + 1);
        int v = c - 63;
        for (int k = 5; k >= 0 && bit_index < need_bits; --k, ++bit_index) {
            if ((v >> k) & 1) {
                // Invert the column-major position -> (i, j).
                int t = bit_index, j = 1;
                while (t >= j) {
                    t -= j;
                    ++j;
                }
                pairs.emplace_back(t, j);
            }
        }
    }
    return Graph(n, pairs);
}

namespace {

std::pair<int, int> line_col_of_offset(const std::string& text, std::size_t byte) {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

}  // namespace

Hypergraph hypergraph_from_json(const std::string& text, bool allow_hyper) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        auto [line, col] = line_col_of_offset(text, e.byte > 0 ? e.byte - 1 : 0);
        throw ParseError(std::string("invalid JSON: ") + e.what(), line, col);
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw ParseError("expected an object with fields \"n\" and \"edges\"", 1, 1);
    int n = j.at("n").get<int>();
    std::vector<VertexSet> edges;
    for (const auto& e : j.at("edges")) {
        VertexSet s;
        for (const auto& v : e) {
            int idx = v.get<int>();
            if (idx < 0 || idx >= n) throw ParseError("edge vertex out of range", 1, 1);
            s.add(idx);
        }
        if (!allow_hyper && s.size() != 2) throw ParseError("expected a graph edge of size 2", 1, 1);
        edges.push_back(s);
    }
    return Hypergraph(n, std::move(edges));
}

std::string hypergraph_to_json(const Hypergraph& h) {
    nlohmann::json j;
    j["n"] = h.n_vertices();
    j["edges"] = nlohmann::json::array();
    for (VertexSet e : h.edges()) j["edges"].push_back(e.to_vector());
    return j.dump();
}

Hypergraph parse_graph_input(const std::string& text) {
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i == text.size()) throw ParseError("empty input", 1, 1);
    if (text[i] == '{') return hypergraph_from_json(text);
    std::string line = text.substr(i);
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
    return from_graph6(line).hypergraph();
}

}  // namespace sqfpow
