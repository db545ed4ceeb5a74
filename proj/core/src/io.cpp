#include "twoclub/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace twoclub {
namespace {

struct Line {
    int number = 0; // 1-based position in the input
    std::string_view text;
};

std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> lines;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        ++number;
        lines.push_back({number, line});
        if (end == text.size()) break;
        pos = end + 1;
    }
    // Drop a trailing empty line produced by a final newline.
    if (!lines.empty() && lines.back().text.empty()) lines.pop_back();
    return lines;
}

bool is_blank(std::string_view s) {
    for (char c : s)
        if (c != ' ' && c != '\t') return false;
    return true;
}

std::vector<std::string_view> tokens_of(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

long long parse_int(std::string_view tok, int line) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(line, "non-numeric token '" + std::string(tok) + "'");
    return value;
}

void count_isolated(ParseResult& r) {
    r.stats.isolated_vertices = r.graph.isolated_vertex_count();
}

ParseResult parse_metis(std::string_view text) {
    auto lines = split_lines(text);
    std::size_t idx = 0;
    while (idx < lines.size() && (is_blank(lines[idx].text) || lines[idx].text.starts_with('%')))
        ++idx;
    if (idx >= lines.size()) throw ParseError(0, "malformed header: empty input");

    auto header = tokens_of(lines[idx].text);
    int header_line = lines[idx].number;
    if (header.size() < 2 || header.size() > 3)
        throw ParseError(header_line, "malformed header: expected 'n m [fmt]'");
    long long n = parse_int(header[0], header_line);
    long long m = parse_int(header[1], header_line);
    if (n < 0 || m < 0) throw ParseError(header_line, "malformed header: negative count");
    if (header.size() == 3) {
        long long fmt = parse_int(header[2], header_line);
        if (fmt != 0) throw ParseError(header_line, "weighted METIS graphs are not supported");
    }
    ++idx;

    std::vector<std::pair<Vertex, Vertex>> edges;
    long long vertex = 0;
    for (; idx < lines.size() && vertex < n; ++idx) {
        const auto& line = lines[idx];
        if (line.text.starts_with('%')) continue;
        for (auto tok : tokens_of(line.text)) {
            long long w = parse_int(tok, line.number);
            if (w < 1 || w > n)
                throw ParseError(line.number, "vertex index " + std::to_string(w) +
                                                  " out of range [1," + std::to_string(n) + "]");
            edges.emplace_back(static_cast<Vertex>(vertex), static_cast<Vertex>(w - 1));
        }
        ++vertex;
    }
    if (vertex < n)
        throw ParseError(lines.empty() ? 0 : lines.back().number,
                         "expected " + std::to_string(n) + " vertex lines, got " + std::to_string(vertex));
    for (; idx < lines.size(); ++idx)
        if (!is_blank(lines[idx].text) && !lines[idx].text.starts_with('%'))
            throw ParseError(lines[idx].number, "unexpected data after last vertex line");

    ParseResult r;
    // METIS lists each edge from both endpoints, so two listings make one
    // logical edge; anything beyond that is a genuine duplicate.
    int dupes = 0;
    r.graph = Graph::from_edges(static_cast<int>(n), edges, &r.stats.dropped_self_loops, &dupes);
    long long logical = (static_cast<long long>(edges.size()) - r.stats.dropped_self_loops) / 2;
    long long extra = logical - r.graph.edge_count();
    r.stats.dropped_duplicate_edges = extra > 0 ? static_cast<int>(extra) : 0;
    r.detected = GraphFormat::metis;
    r.label_base = 1;
    count_isolated(r);
    return r;
}

ParseResult parse_dimacs(std::string_view text) {
    auto lines = split_lines(text);
    long long n = -1, m = -1;
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (const auto& line : lines) {
        if (is_blank(line.text)) continue;
        auto toks = tokens_of(line.text);
        if (toks[0] == "c") continue;
        if (toks[0] == "p") {
            if (n >= 0) throw ParseError(line.number, "malformed header: duplicate 'p' line");
            if (toks.size() != 4 || toks[1] != "edge")
                throw ParseError(line.number, "malformed header: expected 'p edge n m'");
            n = parse_int(toks[2], line.number);
            m = parse_int(toks[3], line.number);
            if (n < 0 || m < 0) throw ParseError(line.number, "malformed header: negative count");
            continue;
        }
        if (toks[0] == "e") {
            if (n < 0) throw ParseError(line.number, "edge before 'p edge' header");
            if (toks.size() != 3) throw ParseError(line.number, "expected 'e u v'");
            long long u = parse_int(toks[1], line.number);
            long long v = parse_int(toks[2], line.number);
            for (long long w : {u, v})
                if (w < 1 || w > n)
                    throw ParseError(line.number, "vertex index " + std::to_string(w) +
                                                      " out of range [1," + std::to_string(n) + "]");
            edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
            continue;
        }
        throw ParseError(line.number, "unknown line type '" + std::string(toks[0]) + "'");
    }
    if (n < 0) throw ParseError(0, "malformed header: missing 'p edge' line");

    ParseResult r;
    r.graph = Graph::from_edges(static_cast<int>(n), edges, &r.stats.dropped_self_loops,
                                &r.stats.dropped_duplicate_edges);
    r.detected = GraphFormat::dimacs;
    r.label_base = 1;
    count_isolated(r);
    return r;
}

ParseResult parse_edge_list(std::string_view text) {
    auto lines = split_lines(text);
    std::vector<std::pair<long long, long long>> raw;
    long long min_label = -1, max_label = -1;
    for (const auto& line : lines) {
        if (is_blank(line.text) || line.text.starts_with('#') || line.text.starts_with('%'))
            continue;
        auto toks = tokens_of(line.text);
        if (toks.size() != 2)
            throw ParseError(line.number, "expected two integers per line");
        long long u = parse_int(toks[0], line.number);
        long long v = parse_int(toks[1], line.number);
        if (u < 0 || v < 0) throw ParseError(line.number, "negative vertex label");
        raw.emplace_back(u, v);
        for (long long w : {u, v}) {
            min_label = min_label < 0 ? w : std::min(min_label, w);
            max_label = std::max(max_label, w);
        }
    }

    int base = (min_label >= 1) ? 1 : 0;
    long long n = raw.empty() ? 0 : max_label - base + 1;
    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(raw.size());
    for (auto [u, v] : raw)
        edges.emplace_back(static_cast<Vertex>(u - base), static_cast<Vertex>(v - base));

    ParseResult r;
    r.graph = Graph::from_edges(static_cast<int>(n), edges, &r.stats.dropped_self_loops,
                                &r.stats.dropped_duplicate_edges);
    r.detected = GraphFormat::edge_list;
    r.label_base = base;
    count_isolated(r);
    return r;
}

bool looks_like_dimacs(std::string_view text) {
    for (const auto& line : split_lines(text)) {
        auto toks = tokens_of(line.text);
        if (!toks.empty() && toks[0] == "p") return toks.size() >= 2 && toks[1] == "edge";
    }
    return false;
}

} // namespace

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

std::string to_string(GraphFormat f) {
    switch (f) {
    case GraphFormat::metis: return "metis";
    case GraphFormat::dimacs: return "dimacs";
    case GraphFormat::edge_list: return "edges";
    case GraphFormat::auto_detect: return "auto";
    }
    return "?";
}

GraphFormat format_from_string(const std::string& name) {
    if (name == "metis") return GraphFormat::metis;
    if (name == "dimacs") return GraphFormat::dimacs;
    if (name == "edges" || name == "edge_list") return GraphFormat::edge_list;
    if (name == "auto") return GraphFormat::auto_detect;
    throw std::invalid_argument("unknown graph format '" + name + "'");
}

ParseResult parse(std::string_view text, GraphFormat format) {
    switch (format) {
    case GraphFormat::metis: return parse_metis(text);
    case GraphFormat::dimacs: return parse_dimacs(text);
    case GraphFormat::edge_list: return parse_edge_list(text);
    case GraphFormat::auto_detect: break;
    }
    if (looks_like_dimacs(text)) return parse_dimacs(text);
    try {
        return parse_metis(text);
    } catch (const ParseError&) {
        return parse_edge_list(text);
    }
}

ParseResult parse_file(const std::string& path, GraphFormat format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str(), format);
}

std::string emit(const Graph& g, GraphFormat format) {
    std::ostringstream out;
    switch (format) {
    case GraphFormat::metis:
        out << g.vertex_count() << ' ' << g.edge_count() << '\n';
        for (Vertex u = 0; u < g.vertex_count(); ++u) {
            bool first = true;
            for (Vertex v : g.neighbors(u)) {
                if (!first) out << ' ';
                out << v + 1;
                first = false;
            }
            out << '\n';
        }
        break;
    case GraphFormat::dimacs:
        out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
        for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
        break;
    case GraphFormat::edge_list:
        for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
        break;
    case GraphFormat::auto_detect:
        throw std::invalid_argument("emit requires a concrete format");
    }
    return out.str();
}

} // namespace twoclub
