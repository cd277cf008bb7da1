#pragma once

#include "sep_facets/big_count.hpp"
#include "sep_facets/enumerate.hpp"
#include "sep_facets/graph.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sep {

enum class Status { verified, partial, counterexample };

std::string to_string(Status s);

/// Outcome of one theorem or conjecture check.
///
/// A counterexample always carries at least one witness: an edge-list
/// serialization or a parameter tuple such as "CB(6,4,1)".
struct ConjectureReport {
    std::string id;
    nlohmann::json params = nlohmann::json::object();
    Status status = Status::verified;
    BigCount max = 0;
    std::vector<std::string> witnesses;
    double elapsed_ms = 0.0;
    nlohmann::json details = nlohmann::json::object();

    // {id, params, status, max, witnesses, elapsed_ms, details}
    nlohmann::json to_json(bool include_timing = true) const;
};

/// Associative merge: worst status, max of maxima, union of witnesses in
/// first-seen order, summed time. Reports must share an id.
ConjectureReport merge(std::span<const ConjectureReport> reports);

struct MaximizerRecord {
    std::uint32_t n = 0;
    std::uint32_t e = 0;
    std::size_t classes = 0;
    BigCount max = 0;
    std::vector<Graph> argmax;
};

struct SweepOptions {
    Guards guards = Guards::from_env();
    unsigned jobs = 1;
};

MaximizerRecord exhaustive_max(std::uint32_t n, std::uint32_t e, const SweepOptions& opts = {});

// Connected graphs with n vertices and n edges: the largest odd cycle wins.
ConjectureReport check_nn_max(std::uint32_t n, const SweepOptions& opts = {});
// G(n,i,j) never beats M(n); also checks the odd-beats-even and
// evenly-distributed cycle inequalities at this n.
ConjectureReport check_disjoint_cycle_bound(std::uint32_t n, const SweepOptions& opts = {});
ConjectureReport check_f_bounds(std::uint32_t n, const SweepOptions& opts = {});
ConjectureReport check_general_f_leq_m(std::uint32_t n, const SweepOptions& opts = {});
ConjectureReport check_mixed_cb(std::uint32_t n, const SweepOptions& opts = {});
ConjectureReport check_nn1_exhaustive(std::uint32_t n, const SweepOptions& opts = {}, bool leaf_shortcut = false);

struct WindmillSampling {
    std::uint64_t samples = 200;
    std::uint64_t seed = 1;
    std::optional<std::uint64_t> thin;
};

/// Exhaustive for n within the guard; otherwise a chain started at WM(n).
ConjectureReport check_windmill(std::uint32_t n, const SweepOptions& opts = {}, const WindmillSampling& sampling = {});

/// Exact M/F/N(C) identities for k <= kmax, 2M(n) <= M(n+1) for n <= kmax,
/// the CB(k,k,1) / CB(k+1,k-1,1) bound, and its odd-n analog for n <= kmax.
ConjectureReport check_identities(std::uint32_t kmax, const SweepOptions& opts = {});

// Conjectured maximizer of N(CB(x1,x2,x3)) with x1 + x2 + x3 = n + 1, n >= 10.
std::vector<std::uint32_t> conjectured_cb_maximizer(std::uint32_t n);

// True when every block of g is a triangle.
bool is_triangle_cactus(const Graph& g);

} // namespace sep
