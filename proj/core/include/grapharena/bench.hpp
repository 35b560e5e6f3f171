#pragma once
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "grapharena/csr.hpp"
#include "grapharena/digraph.hpp"
#include "grapharena/types.hpp"

namespace grapharena {

/** Bad command-line style input (exit code 1). */
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/** Missing or unparseable input data (exit code 2). */
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/** Description of one randomized batch of edge updates. */
struct BatchSpec {
  enum class Kind { Delete, Insert };
  Kind kind = Kind::Delete;
  double fraction = 1e-3;  // batch size as a fraction of |E|, in (0, 0.1]
  std::uint64_t seed = 0;
  int repeats = 5;
};

/**
 * Draw a random update batch for g, returned as a small graph in post-update
 * state whose vertices are exactly the endpoints of the batch edges. Delete
 * batches sample distinct existing edges uniformly; insert batches sample
 * vertex pairs uniformly over [0, span)^2, with duplicates collapsing in the
 * dedup step. Batch size is round(fraction * |E|), at least 1. Deterministic
 * for a fixed seed.
 */
DiGraph generateBatch(const DiGraph& g, const BatchSpec& spec);

/**
 * Uniform random simple directed graph with n vertices and exactly m edges,
 * emitted as an unweighted CSR with per-vertex sorted targets. Deterministic
 * for a fixed seed; throws InputError when m > n*(n-1).
 */
CsrGraph synthGraph(std::size_t n, std::size_t m, std::uint64_t seed);

/**
 * Naive dynamic graph: one independently allocated growable array per
 * vertex. Used as the comparison baseline whose clone cost is dominated by
 * per-vertex allocation.
 */
struct BaselineGraph {
  std::vector<std::vector<Edge>> adj;
  std::size_t m = 0;

  std::size_t span() const noexcept { return adj.size(); }
  std::size_t size() const noexcept { return m; }
};

BaselineGraph baselineFromCsr(const CsrGraph& g);

/** Wall-clock split of a clone into its allocation and copy phases. */
struct CloneSplit {
  double allocSeconds = 0;
  double copySeconds = 0;
};

/** Deep-copy the baseline graph, optionally reporting the phase split. */
BaselineGraph cloneBaseline(const BaselineGraph& g, CloneSplit* split = nullptr);

/** One CSV row: a timed trial or a per-group geometric mean. */
struct TimingRecord {
  std::string workload;
  std::string graph;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::optional<double> fraction;
  std::string trial;  // trial index, or "geomean" for the aggregate row
  double seconds = 0;
  std::optional<double> allocSeconds;
  std::optional<double> copySeconds;

  friend bool operator==(const TimingRecord&, const TimingRecord&) = default;
};

/** Column header line (no trailing newline). */
std::string csvHeader();
/** Serialize one record; fields with commas or quotes are CSV-quoted. */
std::string toCsvRow(const TimingRecord& r);
/** Parse one data row; throws std::invalid_argument on malformed input. */
TimingRecord fromCsvRow(std::string_view line);

/** Geometric mean; exact when every sample is identical. */
double geometricMean(std::span<const double> xs);

/** Allocators exercised by the allocator workloads. */
enum class AllocatorKind { System, Fixed, Growable, Concurrent };

/** Allocation patterns of the allocator workloads. */
enum class AllocPattern { AllocOnly, FreeOnly, Mixed };

std::string_view allocatorName(AllocatorKind kind);

/**
 * Time one allocator workload: `count` block operations total, split evenly
 * across the current OpenMP threads. AllocOnly times count allocations;
 * FreeOnly times count deallocations of pre-allocated blocks; Mixed times
 * `rounds` cycles of allocate-all then free-all. Returns wall seconds of the
 * timed phase.
 */
double runAllocWorkload(AllocatorKind kind, AllocPattern pattern, std::size_t count, int rounds,
                        std::size_t blockSize = 64);

/** Everything the bench driver needs for one invocation. */
struct BenchConfig {
  std::string workload;
  std::string graphSpec;                  // path to .mtx, or "synth:n,m,seed"
  std::vector<double> fractions = {1e-7, 1e-6, 1e-5, 1e-4, 1e-3, 1e-2, 1e-1};
  int repeats = 5;
  int threads = 0;                        // 0: leave the OpenMP default alone
  int steps = 42;
  std::uint64_t seed = 42;
  std::size_t allocCount = std::size_t(1) << 20;
  int allocRounds = 8;
  int rho = 4;
  std::size_t beta = 256 * 1024;
};

/**
 * Run one workload and stream CSV rows (one per trial plus per-group
 * geometric means) to `out`. Throws UsageError or InputError on bad
 * configuration or input.
 */
void runSuite(const BenchConfig& config, std::ostream& out);

}  // namespace grapharena
