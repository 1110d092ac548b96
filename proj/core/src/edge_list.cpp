#include "sqroot/edge_list.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "sqroot/error.hpp"

namespace sqroot {

namespace {

std::vector<std::string> tokenize(const std::string& line)
{
    std::istringstream ss(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ss >> tok)
        tokens.push_back(tok);
    return tokens;
}

std::size_t parse_count(const std::string& tok, std::size_t line)
{
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return c >= '0' && c <= '9'; }))
        throw ParseError(line, "expected a non-negative integer, got '" + tok + "'");
    try {
        return static_cast<std::size_t>(std::stoull(tok));
    }
    catch (const std::out_of_range&) {
        throw ParseError(line, "count '" + tok + "' out of range");
    }
}

} // namespace

Graph read_edge_list(std::istream& in)
{
    GraphBuilder builder;
    std::optional<std::pair<std::size_t, std::size_t>> header;
    std::size_t vertices = 0, edges = 0;
    std::size_t lineno = 0;
    std::string line;

    while (std::getline(in, line)) {
        ++lineno;
        auto tokens = tokenize(line);
        if (tokens.empty())
            continue;
        const std::string& kind = tokens[0];
        if (kind == "c")
            continue;
        if (kind == "p") {
            if (header)
                throw ParseError(lineno, "second 'p' header");
            if (tokens.size() != 3)
                throw ParseError(lineno, "header must be 'p <n> <m>'");
            header.emplace(parse_count(tokens[1], lineno), parse_count(tokens[2], lineno));
            continue;
        }
        if (!header)
            throw ParseError(lineno, "'" + kind + "' line before the 'p' header");
        if (kind == "v") {
            if (tokens.size() != 2)
                throw ParseError(lineno, "vertex line must be 'v <label>'");
            if (edges > 0)
                throw ParseError(lineno, "vertex line after edge lines");
            try {
                builder.add_vertex(tokens[1]);
            }
            catch (const Error& e) {
                throw ParseError(lineno, e.what());
            }
            ++vertices;
        }
        else if (kind == "e") {
            if (tokens.size() != 3)
                throw ParseError(lineno, "edge line must be 'e <label> <label>'");
            try {
                builder.add_edge(tokens[1], tokens[2]);
            }
            catch (const Error& e) {
                throw ParseError(lineno, e.what());
            }
            ++edges;
        }
        else {
            throw ParseError(lineno, "unknown line type '" + kind + "'");
        }
    }

    if (!header)
        throw ParseError(0, "missing 'p <n> <m>' header");
    if (header->first != vertices)
        throw ParseError(0, "header declares " + std::to_string(header->first) + " vertices, found "
                                + std::to_string(vertices));
    if (header->second != edges)
        throw ParseError(0, "header declares " + std::to_string(header->second) + " edges, found "
                                + std::to_string(edges));
    return builder.build();
}

Graph parse_edge_list(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return read_edge_list(in);
}

Graph load_edge_list(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::Io, "cannot open '" + path + "'");
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g)
{
    std::vector<std::string> labels = g.vertices();
    std::sort(labels.begin(), labels.end());
    std::vector<VertexPair> edges = g.edges();
    std::sort(edges.begin(), edges.end());

    out << "p " << g.order() << ' ' << g.size() << '\n';
    for (const auto& l : labels)
        out << "v " << l << '\n';
    for (const auto& e : edges)
        out << "e " << e.u << ' ' << e.v << '\n';
}

std::string format_edge_list(const Graph& g)
{
    std::ostringstream out;
    write_edge_list(out, g);
    return out.str();
}

void save_edge_list(const std::string& path, const Graph& g)
{
    std::ofstream out(path);
    if (!out)
        throw Error(ErrorCode::Io, "cannot write '" + path + "'");
    write_edge_list(out, g);
}

} // namespace sqroot
