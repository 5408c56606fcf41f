#ifndef SQFPOW_IO_HPP
#define SQFPOW_IO_HPP

#include <stdexcept>
#include <string>

#include "sqfpow/hypergraph.hpp"

namespace sqfpow {

/// Input that fails to parse; carries 1-based line/column of the offending
/// character where known.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line, int column)
        : std::runtime_error(msg + " (line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ")"),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// Standard graph6 encoding (short form, n <= 62).
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& s, int line_no = 1);

/// JSON edge-list form {"n": int, "edges": [[i,j],...]}; the same reader
/// accepts hypergraph edges [[i,...],...] when `allow_hyper`.
Hypergraph hypergraph_from_json(const std::string& text, bool allow_hyper = true);
std::string hypergraph_to_json(const Hypergraph& h);

/// Dispatch on the first non-space character: '{' means JSON, anything else
/// is treated as a graph6 line.
Hypergraph parse_graph_input(const std::string& text);

}  // namespace sqfpow

#endif  // SQFPOW_IO_HPP
