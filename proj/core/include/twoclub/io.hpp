#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "twoclub/graph.hpp"

namespace twoclub {

enum class GraphFormat { metis, dimacs, edge_list, auto_detect };

std::string to_string(GraphFormat f);
GraphFormat format_from_string(const std::string& name);

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message);
    int line() const { return line_; }

private:
    int line_;
};

struct ParseStats {
    int dropped_self_loops = 0;
    int dropped_duplicate_edges = 0;
    int isolated_vertices = 0; // vertices of degree zero after normalization
};

struct ParseResult {
    Graph graph;
    ParseStats stats;
    GraphFormat detected = GraphFormat::edge_list;
    int label_base = 0; // 1 for 1-based input formats; used to print original labels
};

/// Parses a graph. METIS: header "n m [fmt]", line i lists the 1-based
/// neighbors of vertex i, '%' comments. DIMACS: "c" comments, "p edge n m",
/// "e u v" 1-based. Edge list: two integers per line, '#'/'%' comments,
/// 0- or 1-based detected from the minimum label. auto_detect tries a DIMACS
/// "p edge" header, then METIS, then edge list.
ParseResult parse(std::string_view text, GraphFormat format);

ParseResult parse_file(const std::string& path, GraphFormat format);

/// Canonical emitters, inverse to parse() for the same format.
std::string emit(const Graph& g, GraphFormat format);

} // namespace twoclub
