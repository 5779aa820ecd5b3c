#include "gcover/io.hpp"

#include "gcover/errors.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

namespace gcover {

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::istream& in)
{
    std::vector<Line> lines;
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        std::istringstream ss(raw);
        Line line{number, {}};
        for (std::string tok; ss >> tok;)
            line.tokens.push_back(tok);
        if (!line.tokens.empty())
            lines.push_back(std::move(line));
    }
    return lines;
}

int parse_int(const Line& line, std::size_t index, const char* what)
{
    if (index >= line.tokens.size())
        throw ParseError(line.number, std::string("missing ") + what);
    const std::string& tok = line.tokens[index];
    int value = 0;
    auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || end != tok.data() + tok.size())
        throw ParseError(line.number, std::string("malformed ") + what + " '" + tok + "'");
    return value;
}

void expect_arity(const Line& line, std::size_t n)
{
    if (line.tokens.size() != n)
        throw ParseError(line.number, "expected " + std::to_string(n) + " fields after '" + line.tokens[0] + "'");
}

} // namespace

Graph parse_edge_list(std::istream& in)
{
    auto lines = tokenize(in);
    if (lines.empty() || lines.front().tokens[0] != "graph")
        throw ParseError(lines.empty() ? 1 : lines.front().number, "expected 'graph <n>' header");
    expect_arity(lines.front(), 2);
    const int n = parse_int(lines.front(), 1, "vertex count");
    if (n < 0)
        throw ParseError(lines.front().number, "negative vertex count");
    std::vector<Edge> edges;
    std::map<Edge, std::size_t> seen;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& line = lines[i];
        if (line.tokens[0] != "edge")
            throw ParseError(line.number, "unknown keyword '" + line.tokens[0] + "'");
        expect_arity(line, 3);
        int u = parse_int(line, 1, "vertex");
        int v = parse_int(line, 2, "vertex");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError(line.number, "vertex out of range");
        if (u == v)
            throw ParseError(line.number, "self-loop");
        Edge key{std::min(u, v), std::max(u, v)};
        if (!seen.emplace(key, line.number).second)
            throw ParseError(line.number, "repeated edge");
        edges.push_back(key);
    }
    return {n, std::move(edges)};
}

Graph parse_edge_list(const std::string& text)
{
    std::istringstream in(text);
    return parse_edge_list(in);
}

std::string format_edge_list(const Graph& g)
{
    std::ostringstream os;
    os << "graph " << g.order() << '\n';
    for (auto [u, v] : g.edges())
        os << "edge " << u << ' ' << v << '\n';
    return os.str();
}

GainGraph parse_gain_file(std::istream& in)
{
    auto lines = tokenize(in);
    std::size_t i = 0;
    auto next_line = [&](const char* keyword) -> const Line& {
        if (i >= lines.size())
            throw ParseError(lines.empty() ? 1 : lines.back().number + 1, std::string("expected '") + keyword + "'");
        const Line& line = lines[i++];
        if (line.tokens[0] != keyword)
            throw ParseError(line.number, std::string("expected '") + keyword + "', found '" + line.tokens[0] + "'");
        return line;
    };

    const Line& header = next_line("gainfile");
    expect_arity(header, 2);
    if (header.tokens[1] != "1")
        throw ParseError(header.number, "unsupported gainfile version '" + header.tokens[1] + "'");

    const Line& group_line = next_line("group");
    if (group_line.tokens.size() < 3)
        throw ParseError(group_line.number, "group needs a kind and at least one order");
    std::optional<GroupSpec> group;
    try {
        const std::string& kind = group_line.tokens[1];
        if (kind == "cyclic") {
            expect_arity(group_line, 3);
            group = GroupSpec::cyclic(parse_int(group_line, 2, "order"));
        } else if (kind == "abelian") {
            std::vector<int> orders;
            for (std::size_t k = 2; k < group_line.tokens.size(); ++k)
                orders.push_back(parse_int(group_line, k, "order"));
            group = GroupSpec::abelian(std::move(orders));
        } else if (kind == "perm") {
            expect_arity(group_line, 3);
            group = GroupSpec::permutation(parse_int(group_line, 2, "degree"));
        } else {
            throw ParseError(group_line.number, "unknown group kind '" + kind + "'");
        }
    } catch (const ParameterError& e) {
        throw ParseError(group_line.number, e.what());
    }

    const Line& vertices = next_line("vertices");
    expect_arity(vertices, 2);
    const int n = parse_int(vertices, 1, "vertex count");
    if (n < 0)
        throw ParseError(vertices.number, "negative vertex count");

    std::map<Edge, GroupElement> gains;
    const bool perm = group->kind() == GroupSpec::Kind::permutation;
    for (; i < lines.size(); ++i) {
        const Line& line = lines[i];
        if (line.tokens[0] != "edge")
            throw ParseError(line.number, "unknown keyword '" + line.tokens[0] + "'");
        expect_arity(line, perm ? 5 : 4);
        int u = parse_int(line, 1, "vertex");
        int v = parse_int(line, 2, "vertex");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError(line.number, "vertex out of range");
        if (u == v)
            throw ParseError(line.number, "self-loop");
        if (perm && line.tokens[3] != "perm")
            throw ParseError(line.number, "permutation gains are written 'perm <images>'");
        GroupElement g;
        try {
            g = group->parse(line.tokens[perm ? 4 : 3]);
        } catch (const ParameterError& e) {
            throw ParseError(line.number, e.what());
        }
        Edge key{std::min(u, v), std::max(u, v)};
        if (u > v)
            g = group->inverse(g);
        if (!gains.emplace(key, std::move(g)).second)
            throw ParseError(line.number, "repeated edge");
    }

    std::vector<Edge> edges;
    std::vector<GroupElement> values;
    for (auto& [e, g] : gains) {
        edges.push_back(e);
        values.push_back(g);
    }
    return {Graph(n, std::move(edges)), *group, std::move(values)};
}

GainGraph parse_gain_file(const std::string& text)
{
    std::istringstream in(text);
    return parse_gain_file(in);
}

std::string format_gain_file(const GainGraph& f)
{
    const auto& group = f.group();
    std::ostringstream os;
    os << "gainfile 1\n";
    os << "group " << group.describe() << '\n';
    os << "vertices " << f.base().order() << '\n';
    const bool perm = group.kind() == GroupSpec::Kind::permutation;
    const auto& edges = f.base().edges();
    for (std::size_t e = 0; e < edges.size(); ++e) {
        os << "edge " << edges[e].first << ' ' << edges[e].second << ' ';
        if (perm)
            os << "perm ";
        os << group.format(f.gains()[e]) << '\n';
    }
    return os.str();
}

std::string read_text(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text(const std::filesystem::path& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write " + path.string());
    out << text;
}

GraphInput read_graph_input(const std::filesystem::path& path)
{
    const std::string text = read_text(path);
    std::istringstream in(text);
    auto lines = tokenize(in);
    if (!lines.empty() && lines.front().tokens[0] == "gainfile")
        return parse_gain_file(text);
    return parse_edge_list(text);
}

} // namespace gcover
