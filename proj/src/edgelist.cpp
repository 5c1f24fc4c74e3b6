#include "hosoya/edgelist.hpp"

#include "hosoya/error.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace hosoya {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line = nl == std::string_view::npos ? text.substr(pos)
                                                             : text.substr(pos, nl - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
    return lines;
}

bool is_blank(std::string_view line) {
    return line.find_first_not_of(" \t") == std::string_view::npos;
}

bool is_comment(std::string_view line) {
    auto first = line.find_first_not_of(" \t");
    return first != std::string_view::npos && line[first] == '#';
}

int parse_int(std::string_view tok, std::string_view what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        raise(Errc::parse_error, "bad " + std::string(what) + " token '" + std::string(tok) + "'");
    return value;
}

std::vector<std::string_view> tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (pos < line.size()) {
        pos = line.find_first_not_of(" \t", pos);
        if (pos == std::string_view::npos) break;
        std::size_t end = line.find_first_of(" \t", pos);
        if (end == std::string_view::npos) end = line.size();
        out.push_back(line.substr(pos, end - pos));
        pos = end;
    }
    return out;
}

Graph parse_record(const std::vector<std::string_view>& lines) {
    std::size_t i = 0;
    auto next_data_line = [&]() -> std::string_view {
        while (i < lines.size()) {
            std::string_view line = lines[i++];
            if (is_blank(line) || is_comment(line)) continue;
            return line;
        }
        raise(Errc::parse_error, "unexpected end of edge list");
    };
    auto header = tokens(next_data_line());
    if (header.size() != 2) raise(Errc::parse_error, "header must be 'n m'");
    int n = parse_int(header[0], "vertex count");
    int m = parse_int(header[1], "edge count");
    if (n < 0 || m < 0) raise(Errc::parse_error, "negative count in header");
    std::vector<Edge> edges;
    edges.reserve((std::size_t)m);
    for (int e = 0; e < m; ++e) {
        auto toks = tokens(next_data_line());
        if (toks.size() != 2) raise(Errc::parse_error, "edge line must be 'u v'");
        edges.emplace_back(parse_int(toks[0], "endpoint"), parse_int(toks[1], "endpoint"));
    }
    while (i < lines.size()) {
        if (!is_blank(lines[i]) && !is_comment(lines[i]))
            raise(Errc::parse_error, "trailing content after edge list");
        ++i;
    }
    return Graph::from_edge_list(n, edges);
}

} // namespace

Graph parse_edge_list(std::string_view text) {
    return parse_record(split_lines(text));
}

std::string format_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

std::vector<Graph> parse_graph_stream(std::string_view text) {
    std::vector<Graph> graphs;
    std::vector<std::string_view> record;
    auto flush = [&]() {
        bool any_data = false;
        for (auto line : record)
            if (!is_blank(line) && !is_comment(line)) any_data = true;
        if (any_data) graphs.push_back(parse_record(record));
        record.clear();
    };
    for (auto line : split_lines(text)) {
        if (line == "%") {
            flush();
        } else {
            record.push_back(line);
        }
    }
    flush();
    return graphs;
}

std::string format_graph_stream(const std::vector<Graph>& graphs) {
    std::string out;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        if (i > 0) out += "%\n";
        out += format_edge_list(graphs[i]);
    }
    return out;
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(Errc::parse_error, "cannot open file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_edge_list(buf.str());
}

} // namespace hosoya
