#include "sep_facets/closed_forms.hpp"

#include "sep_facets/errors.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <sstream>

namespace sep {

namespace {

// Pascal rows 0..kCachedRows-1, built once. Read-only afterwards, so
// concurrent lookups are safe.
constexpr std::int64_t kCachedRows = 600;

const std::vector<std::vector<mpz_class>>& pascal()
{
    static std::vector<std::vector<mpz_class>> rows;
    static std::once_flag once;
    std::call_once(once, [] {
        rows.resize(kCachedRows);
        rows[0] = {1};
        for (std::int64_t a = 1; a < kCachedRows; ++a) {
            auto& row = rows[a];
            row.resize(a + 1);
            row[0] = 1;
            row[a] = 1;
            for (std::int64_t b = 1; b < a; ++b)
                row[b] = rows[a - 1][b - 1] + rows[a - 1][b];
        }
    });
    return rows;
}

const mpz_class& zero()
{
    static const mpz_class z = 0;
    return z;
}

// Returns a reference into the table, or computes into scratch.
const mpz_class& binom_ref(std::int64_t a, std::int64_t b, mpz_class& scratch)
{
    if (a < 0 || b < 0 || b > a)
        return zero();
    if (a < kCachedRows)
        return pascal()[a][b];
    mpz_bin_uiui(scratch.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return scratch;
}

BigCount pow2(std::uint64_t e)
{
    BigCount r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

BigCount product(std::span<const std::uint32_t> xs)
{
    BigCount r = 1;
    for (const auto x : xs)
        r *= static_cast<unsigned long>(x);
    return r;
}

} // namespace

BigCount binom(std::int64_t a, std::int64_t b)
{
    mpz_class scratch;
    return binom_ref(a, b, scratch);
}

BigCount n_cycle(std::uint32_t m)
{
    if (m < 2)
        throw InvalidParameter("cycle length must be at least 2");
    if (m % 2 == 0)
        return binom(m, m / 2);
    return BigCount(m) * binom(m - 1, (m - 1) / 2);
}

BigCount n_tree(std::uint32_t n)
{
    if (n < 1)
        throw InvalidParameter("tree needs at least one vertex");
    return pow2(n - 1);
}

BigCount n_wedge(std::span<const BigCount> parts)
{
    if (parts.empty())
        throw InvalidParameter("wedge of no parts");
    BigCount r = 1;
    for (const auto& p : parts)
        r *= p;
    return r;
}

BigCount n_cnm(std::uint32_t n, std::uint32_t m)
{
    if (m < 3 || m > n)
        throw InvalidParameter("C(n,m) requires 3 <= m <= n");
    return n_cycle(m) * pow2(n - m);
}

BigCount n_gnij(std::uint32_t n, std::uint32_t i, std::uint32_t j)
{
    if (i < 3 || j < 3 || i + j > n + 1)
        throw InvalidParameter("G(n,i,j) requires i, j >= 3 and i + j <= n + 1");
    return n_cycle(i) * n_cycle(j) * pow2(n + 1 - i - j);
}

BigCount n_theta(std::uint32_t m, std::uint32_t t)
{
    if (m < 1 || t < 1)
        throw InvalidParameter("theta graph requires m >= 1 and t >= 1");
    BigCount sum = 0;
    BigCount term;
    for (std::uint32_t j = 0; j <= m; ++j) {
        mpz_pow_ui(term.get_mpz_t(), binom(m, j).get_mpz_t(), t);
        sum += term;
    }
    return sum;
}

BigCount n_windmill(std::uint32_t n, std::uint32_t r)
{
    if (n < 1 || 2 * r > n - 1)
        throw InvalidParameter("WM(n,r) requires n >= 1 and 0 <= r <= (n-1)/2");
    BigCount six_r;
    mpz_ui_pow_ui(six_r.get_mpz_t(), 6, r);
    return six_r * pow2(n - 1 - 2 * r);
}

BigCount n_wedge_of_cycles(std::span<const std::uint32_t> cycle_lengths, std::uint32_t tail)
{
    BigCount r = pow2(tail);
    for (const auto c : cycle_lengths)
        r *= n_cycle(c);
    return r;
}

BigCount m_of_n(std::uint32_t n)
{
    if (n < 3)
        throw InvalidParameter("M(n) requires n >= 3");
    if (n % 2 == 0)
        return 2 * m_of_n(n - 1);
    const std::int64_t k = (n + 1) / 2;
    if (k % 2 == 0)
        return BigCount(static_cast<unsigned long>((k + 1) * (k - 1))) * binom(k, k / 2)
               * binom(k - 2, (k - 2) / 2);
    const auto c = binom(k - 1, (k - 1) / 2);
    return BigCount(static_cast<unsigned long>(k * k)) * c * c;
}

BigCount f_same_parity(const PathVector& m)
{
    const auto len = m.lengths();
    const auto shortest = static_cast<std::int64_t>(m.shortest());
    for (const auto x : len) {
        if ((x - shortest) % 2 != 0)
            throw InvalidParameter("F requires all path lengths to share a parity");
    }

    BigCount sum = 0;
    BigCount term;
    mpz_class scratch_a;
    mpz_class scratch_b;
    for (std::int64_t j = 0; j <= shortest; ++j) {
        term = binom_ref(shortest, j, scratch_a);
        for (std::size_t k = 0; k + 1 < len.size(); ++k) {
            const std::int64_t mk = len[k];
            const auto& b = binom_ref(mk, (mk - shortest) / 2 + j, scratch_b);
            mpz_mul(term.get_mpz_t(), term.get_mpz_t(), b.get_mpz_t());
            if (term == 0)
                break;
        }
        sum += term;
    }
    return sum;
}

BigCount n_cb(const PathVector& m)
{
    if (m.size() == 1)
        return n_tree(m[0] + 1);

    std::vector<std::uint32_t> evens;
    std::vector<std::uint32_t> odds;
    for (const auto x : m.lengths())
        (x % 2 == 0 ? evens : odds).push_back(x);
    if (evens.empty() || odds.empty())
        return f_same_parity(m);

    // One edge of every even path contracted: all-odd paths remain.
    std::vector<std::uint32_t> even_reduced;
    for (const auto x : m.lengths())
        even_reduced.push_back(x % 2 == 0 ? x - 1 : x);
    const BigCount even_part = product(evens) * f_same_parity(PathVector(even_reduced));

    const bool has_unit = odds.back() == 1;
    if (!has_unit) {
        std::vector<std::uint32_t> odd_reduced;
        for (const auto x : m.lengths())
            odd_reduced.push_back(x % 2 == 1 ? x - 1 : x);
        return even_part + product(odds) * f_same_parity(PathVector(odd_reduced));
    }

    // Contracting a unit path identifies the endpoints; what remains is a
    // wedge of the even cycles and the (odd - 1) cycles.
    std::vector<std::uint32_t> cycles(evens);
    for (const auto o : odds) {
        if (o > 1)
            cycles.push_back(o - 1);
    }
    return even_part + product(odds) * n_wedge_of_cycles(cycles, 0);
}

BigCount evaluate(const FamilySpec& spec)
{
    struct Visitor {
        BigCount operator()(const CycleSpec& s) const { return n_cycle(s.m); }
        BigCount operator()(const TreeSpec& s) const { return n_tree(s.n); }
        BigCount operator()(const CnmSpec& s) const { return n_cnm(s.n, s.m); }
        BigCount operator()(const GnijSpec& s) const { return n_gnij(s.n, s.i, s.j); }
        BigCount operator()(const CbSpec& s) const { return n_cb(s.paths); }
        BigCount operator()(const ThetaSpec& s) const { return n_theta(s.m, s.t); }
        BigCount operator()(const WindmillSpec& s) const { return n_windmill(s.n, s.r); }
        BigCount operator()(const WedgeOfCyclesSpec& s) const
        {
            if (s.cycles.empty() && s.tail == 0)
                throw InvalidParameter("empty wedge");
            return n_wedge_of_cycles(s.cycles, s.tail);
        }
    };
    return std::visit(Visitor{}, spec);
}

namespace {

// Builds a graph from a possibly repeated edge list, dropping repeats.
Graph collapse(std::size_t n, const std::vector<Edge>& raw)
{
    std::set<Edge> unique;
    for (auto e : raw) {
        if (e.u > e.v)
            std::swap(e.u, e.v);
        unique.insert(e);
    }
    return Graph(n, std::vector<Edge>(unique.begin(), unique.end()));
}

Graph cycle_or_edge(std::uint32_t m)
{
    if (m == 2)
        return path(1);
    return cycle(m);
}

} // namespace

Graph realize(const FamilySpec& spec)
{
    struct Visitor {
        Graph operator()(const CycleSpec& s) const { return cycle_or_edge(s.m); }
        Graph operator()(const TreeSpec& s) const { return s.n == 1 ? Graph(1) : path(s.n - 1); }
        Graph operator()(const CnmSpec& s) const { return build_cnm(s.n, s.m); }
        Graph operator()(const GnijSpec& s) const { return build_gnij(s.n, s.i, s.j); }
        Graph operator()(const CbSpec& s) const
        {
            if (s.paths.unit_paths() <= 1)
                return build_cb(s.paths);
            std::vector<Edge> raw;
            Vertex next = 2;
            for (const auto len : s.paths.lengths()) {
                Vertex prev = 0;
                for (std::uint32_t step = 1; step < len; ++step) {
                    raw.push_back({prev, next});
                    prev = next++;
                }
                raw.push_back({prev, 1});
            }
            return collapse(next, raw);
        }
        Graph operator()(const ThetaSpec& s) const
        {
            if (s.t == 1)
                return path(s.m);
            if (s.m == 1)
                return path(1);
            return build_theta(s.m, s.t);
        }
        Graph operator()(const WindmillSpec& s) const { return build_windmill(s.n, s.r); }
        Graph operator()(const WedgeOfCyclesSpec& s) const
        {
            std::vector<Graph> parts;
            for (const auto c : s.cycles)
                parts.push_back(cycle_or_edge(c));
            if (s.tail > 0)
                parts.push_back(path(s.tail));
            if (parts.empty())
                throw InvalidParameter("empty wedge");
            Graph g = parts.front();
            for (std::size_t i = 1; i < parts.size(); ++i)
                g = wedge(g, parts[i], 0, 0);
            return g;
        }
    };
    return std::visit(Visitor{}, spec);
}

std::string describe(const FamilySpec& spec)
{
    struct Visitor {
        std::string operator()(const CycleSpec& s) const { return "C" + std::to_string(s.m); }
        std::string operator()(const TreeSpec& s) const { return "tree(" + std::to_string(s.n) + ")"; }
        std::string operator()(const CnmSpec& s) const
        {
            return "C(" + std::to_string(s.n) + "," + std::to_string(s.m) + ")";
        }
        std::string operator()(const GnijSpec& s) const
        {
            return "G(" + std::to_string(s.n) + "," + std::to_string(s.i) + "," + std::to_string(s.j) + ")";
        }
        std::string operator()(const CbSpec& s) const
        {
            std::string out = "CB(";
            for (std::size_t i = 0; i < s.paths.size(); ++i)
                out += (i ? "," : "") + std::to_string(s.paths[i]);
            return out + ")";
        }
        std::string operator()(const ThetaSpec& s) const
        {
            return "theta(" + std::to_string(s.m) + "," + std::to_string(s.t) + ")";
        }
        std::string operator()(const WindmillSpec& s) const
        {
            return "WM(" + std::to_string(s.n) + "," + std::to_string(s.r) + ")";
        }
        std::string operator()(const WedgeOfCyclesSpec& s) const
        {
            std::string out;
            for (const auto c : s.cycles)
                out += (out.empty() ? "C" : " v C") + std::to_string(c);
            if (s.tail > 0)
                out += (out.empty() ? "P" : " v P") + std::to_string(s.tail);
            return out;
        }
    };
    return std::visit(Visitor{}, spec);
}

FamilySpec make_family(const std::string& name, std::span<const std::uint32_t> p)
{
    auto need = [&](std::size_t count) {
        if (p.size() != count)
            throw InvalidParameter("family '" + name + "' takes " + std::to_string(count) + " parameters");
    };
    if (name == "cycle") {
        need(1);
        return CycleSpec{p[0]};
    }
    if (name == "tree" || name == "path") {
        need(1);
        // "path m" has m edges, i.e. a tree on m + 1 vertices.
        return TreeSpec{name == "tree" ? p[0] : p[0] + 1};
    }
    if (name == "cnm") {
        need(2);
        return CnmSpec{p[0], p[1]};
    }
    if (name == "gnij") {
        need(3);
        return GnijSpec{p[0], p[1], p[2]};
    }
    if (name == "cb") {
        if (p.empty())
            throw InvalidParameter("family 'cb' takes at least one path length");
        return CbSpec{PathVector(std::vector<std::uint32_t>(p.begin(), p.end()))};
    }
    if (name == "theta") {
        need(2);
        return ThetaSpec{p[0], p[1]};
    }
    if (name == "windmill") {
        if (p.size() == 1)
            return WindmillSpec{p[0], (p[0] - 1) / 2};
        need(2);
        return WindmillSpec{p[0], p[1]};
    }
    if (name == "wedge-cycles") {
        if (p.empty())
            throw InvalidParameter("family 'wedge-cycles' takes cycle lengths");
        return WedgeOfCyclesSpec{std::vector<std::uint32_t>(p.begin(), p.end()), 0};
    }
    throw InvalidParameter("unknown family '" + name + "'");
}

FamilySpec parse_family(const std::string& text)
{
    const auto colon = text.find(':');
    const auto name = text.substr(0, colon);
    std::vector<std::uint32_t> params;
    if (colon != std::string::npos) {
        std::istringstream is(text.substr(colon + 1));
        std::string tok;
        while (std::getline(is, tok, ',')) {
            try {
                std::size_t used = 0;
                const auto v = std::stoul(tok, &used);
                if (used != tok.size())
                    throw InvalidParameter("bad parameter '" + tok + "'");
                params.push_back(static_cast<std::uint32_t>(v));
            }
            catch (const std::logic_error&) {
                throw InvalidParameter("bad parameter '" + tok + "' in family string");
            }
        }
    }
    return make_family(name, params);
}

} // namespace sep
