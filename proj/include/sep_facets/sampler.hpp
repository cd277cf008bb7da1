#pragma once

#include "sep_facets/big_count.hpp"
#include "sep_facets/graph.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace sep {

/// Seeded 64-bit generator. Bounded draws use rejection sampling on top of
/// the raw engine output so streams are identical across standard libraries.
class Rng {
public:
    static constexpr const char* algorithm = "mt19937_64+rejection";

    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform in [0, bound).
    std::uint64_t below(std::uint64_t bound);

private:
    std::mt19937_64 engine_;
};

struct ChainConfig {
    std::uint32_t n = 0;
    std::uint32_t e = 0;
    std::uint64_t samples = 200;
    std::optional<std::uint64_t> burn_in; // default 10 * e * C(n,2)
    std::optional<std::uint64_t> thin;    // default e * C(n,2)
    std::uint64_t seed = 0;
    std::optional<Graph> initial;

    std::uint64_t burn_in_steps() const;
    std::uint64_t thinning() const;
    // Records are taken at steps burn_in + i * thin, i = 0..samples-1.
    std::uint64_t total_steps() const;
    void validate() const;
};

struct SampleRecord {
    std::uint64_t step = 0;
    BigCount facets;
    Graph graph;
    double log10_facets = 0.0; // display only
};

// Cycle plus the lexicographically smallest extra edges; a path when e = n - 1.
Graph default_initial_graph(std::uint32_t n, std::uint32_t e);

// Number of (edge, non-edge) proposals at g: e * (C(n,2) - e).
std::uint64_t proposal_count(const Graph& g);

/// One edge-replacement step: remove a uniform edge, add a uniform
/// non-edge, keep the result only if it is connected.
Graph mcmc_step(const Graph& g, Rng& rng);

void run_chain(const ChainConfig& cfg, const std::function<void(const SampleRecord&)>& emit);
std::vector<SampleRecord> run_chain(const ChainConfig& cfg);

double log10_of(const BigCount& x);

enum class FigureMode { scatter, histogram };

// Comment row echoing the configuration; a timestamp unless deterministic.
std::string chain_metadata(const ChainConfig& cfg, bool deterministic);

std::string emit_figure_data(std::span<const SampleRecord> records, FigureMode mode);
std::string emit_jsonl(std::span<const SampleRecord> records, const ChainConfig& cfg, bool deterministic);

} // namespace sep
