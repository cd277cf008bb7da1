#include "sep_facets/errors.hpp"
#include "sep_facets/graph.hpp"

#include <nlohmann/json.hpp>

#include <charconv>
#include <set>
#include <sstream>

namespace sep {

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

// Splits on whitespace and parses every token as an unsigned integer.
std::optional<std::vector<std::uint64_t>> parse_numbers(std::string_view s)
{
    std::vector<std::uint64_t> out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t'))
            ++pos;
        if (pos == s.size())
            break;
        std::uint64_t value = 0;
        const auto* begin = s.data() + pos;
        const auto* end = s.data() + s.size();
        const auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec != std::errc{} || (ptr != end && *ptr != ' ' && *ptr != '\t'))
            return std::nullopt;
        out.push_back(value);
        pos = static_cast<std::size_t>(ptr - s.data());
    }
    return out;
}

} // namespace

Graph parse_graph(std::string_view text)
{
    std::optional<std::uint64_t> n;
    std::vector<Edge> edges;
    std::set<Edge> seen;
    std::size_t line_no = 0;

    while (!text.empty()) {
        ++line_no;
        const auto nl = text.find('\n');
        auto line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;

        const auto nums = parse_numbers(line);
        if (!nums)
            throw ParseError(line_no, "malformed line '" + std::string(line) + "'");
        if (!n) {
            if (nums->size() != 1)
                throw ParseError(line_no, "expected vertex count");
            n = (*nums)[0];
            continue;
        }
        if (nums->size() != 2)
            throw ParseError(line_no, "expected 'u v'");
        auto u = (*nums)[0];
        auto v = (*nums)[1];
        if (u >= *n || v >= *n)
            throw ParseError(line_no, "vertex out of range");
        if (u == v)
            throw ParseError(line_no, "self-loop");
        if (u > v)
            std::swap(u, v);
        const Edge e{static_cast<Vertex>(u), static_cast<Vertex>(v)};
        if (!seen.insert(e).second)
            throw ParseError(line_no, "duplicate edge");
        edges.push_back(e);
    }
    if (!n)
        throw ParseError(line_no, "missing vertex count");
    return Graph(*n, std::move(edges));
}

std::string serialize_graph(const Graph& g)
{
    std::ostringstream os;
    os << g.num_vertices() << '\n';
    for (const auto& e : g.edges())
        os << e.u << ' ' << e.v << '\n';
    return os.str();
}

Graph parse_graph_json(std::string_view text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    }
    catch (const nlohmann::json::parse_error& e) {
        throw ParseError(0, e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_unsigned())
        throw ParseError(0, "expected object with unsigned 'n'");
    const auto n = j["n"].get<std::uint64_t>();
    std::vector<Edge> edges;
    if (j.contains("edges")) {
        for (const auto& pair : j["edges"]) {
            if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_unsigned()
                || !pair[1].is_number_unsigned())
                throw ParseError(0, "edge must be a pair of unsigned integers");
            edges.push_back({pair[0].get<Vertex>(), pair[1].get<Vertex>()});
        }
    }
    try {
        return Graph(n, std::move(edges));
    }
    catch (const InvalidParameter& e) {
        throw ParseError(0, e.what());
    }
}

std::string serialize_graph_json(const Graph& g)
{
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : g.edges())
        edges.push_back({e.u, e.v});
    return nlohmann::json{{"n", g.num_vertices()}, {"edges", edges}}.dump();
}

} // namespace sep
