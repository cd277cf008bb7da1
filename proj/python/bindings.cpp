#include "sep_facets/closed_forms.hpp"
#include "sep_facets/conjectures.hpp"
#include "sep_facets/errors.hpp"
#include "sep_facets/facet_engine.hpp"
#include "sep_facets/sampler.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace sep;

namespace {

// Exact conversion through the decimal string.
py::int_ to_py(const BigCount& x)
{
    const auto text = to_decimal(x);
    return py::reinterpret_steal<py::int_>(PyLong_FromString(text.c_str(), nullptr, 10));
}

Graph make_graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges)
{
    std::vector<Edge> es;
    es.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u > v)
            std::swap(u, v);
        es.push_back({u, v});
    }
    return Graph(n, std::move(es));
}

std::vector<std::pair<Vertex, Vertex>> edge_list(const Graph& g)
{
    std::vector<std::pair<Vertex, Vertex>> out;
    for (const auto& e : g.edges())
        out.emplace_back(e.u, e.v);
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Facet counts of symmetric edge polytopes";

    py::register_exception<InvalidParameter>(m, "InvalidParameter", PyExc_ValueError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ResourceGuardError>(m, "ResourceGuardError", PyExc_RuntimeError);

    m.def(
        "count_facets",
        [](std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges, const std::string& method) {
            const auto g = make_graph(n, edges);
            if (method == "dfs")
                return to_py(count_facets(g));
            if (method == "subgraphs")
                return to_py(count_facets_via_subgraphs(g));
            throw InvalidParameter("method must be 'dfs' or 'subgraphs'");
        },
        py::arg("n"), py::arg("edges"), py::arg("method") = "dfs");

    m.def(
        "facet_functions",
        [](std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
            std::vector<std::vector<std::int32_t>> out;
            for (const auto& f : enumerate_facet_functions(make_graph(n, edges)))
                out.push_back(f.values);
            return out;
        },
        py::arg("n"), py::arg("edges"));

    m.def(
        "family_graph",
        [](const std::string& spec) {
            const auto g = realize(parse_family(spec));
            return py::make_tuple(g.num_vertices(), edge_list(g));
        },
        py::arg("spec"));

    m.def(
        "formula", [](const std::string& spec) { return to_py(evaluate(parse_family(spec))); }, py::arg("spec"));
    m.def("m_of_n", [](std::uint32_t n) { return to_py(m_of_n(n)); }, py::arg("n"));
    m.def(
        "f_same_parity", [](std::vector<std::uint32_t> xs) { return to_py(f_same_parity(PathVector(std::move(xs)))); },
        py::arg("lengths"));
    m.def(
        "n_cb", [](std::vector<std::uint32_t> xs) { return to_py(n_cb(PathVector(std::move(xs)))); },
        py::arg("lengths"));

    m.def(
        "verify_json",
        [](const std::string& id, std::uint32_t n) {
            SweepOptions opts;
            ConjectureReport r;
            py::gil_scoped_release release;
            if (id == "nnmax")
                r = check_nn_max(n, opts);
            else if (id == "disjoint")
                r = check_disjoint_cycle_bound(n, opts);
            else if (id == "fbounds")
                r = check_f_bounds(n, opts);
            else if (id == "f-leq-m")
                r = check_general_f_leq_m(n, opts);
            else if (id == "mixed-cb")
                r = check_mixed_cb(n, opts);
            else if (id == "nn1")
                r = check_nn1_exhaustive(n, opts);
            else if (id == "windmill")
                r = check_windmill(n, opts);
            else if (id == "identities")
                r = check_identities(n, opts);
            else
                throw InvalidParameter("unknown check '" + id + "'");
            return r.to_json(false).dump();
        },
        py::arg("id"), py::arg("n"));

    m.def(
        "sample",
        [](std::uint32_t n, std::uint32_t e, std::uint64_t samples, std::uint64_t seed,
           std::optional<std::uint64_t> burn_in, std::optional<std::uint64_t> thin) {
            ChainConfig cfg;
            cfg.n = n;
            cfg.e = e;
            cfg.samples = samples;
            cfg.seed = seed;
            cfg.burn_in = burn_in;
            cfg.thin = thin;
            std::vector<SampleRecord> records;
            {
                py::gil_scoped_release release;
                records = run_chain(cfg);
            }
            py::list out;
            for (const auto& r : records) {
                py::dict d;
                d["step"] = r.step;
                d["facets"] = to_py(r.facets);
                d["edges"] = edge_list(r.graph);
                out.append(d);
            }
            return out;
        },
        py::arg("n"), py::arg("e"), py::arg("samples"), py::arg("seed"), py::arg("burn_in") = py::none(),
        py::arg("thin") = py::none());
}
