#include "grapharena/bench.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <ostream>
#include <sstream>
#include <tuple>
#include <unordered_set>

#include "grapharena/mtx.hpp"
#include "grapharena/ops.hpp"
#include "grapharena/random.hpp"
#include "grapharena/util.hpp"
#include "grapharena/walk.hpp"

namespace grapharena {

namespace {

using Clock = std::chrono::steady_clock;

double secondsSince(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

template <class F>
double timeIt(F&& fn) {
  auto t0 = Clock::now();
  fn();
  return secondsSince(t0);
}

/** Build a batch DiGraph from loose edges: endpoints become vertices, edge
 * lists end up sorted and deduplicated. */
DiGraph makeBatchGraph(std::vector<std::tuple<VertexId, VertexId, EdgeWeight>>& list) {
  DiGraph b;
  if (list.empty()) return b;
  VertexId maxId = 0;
  for (auto& [u, v, w] : list) maxId = std::max({maxId, u, v});
  b.reserve(std::size_t(maxId) + 1);
  for (auto& [u, v, w] : list) {
    b.addVertex(u);
    b.addVertex(v);
  }
  std::sort(list.begin(), list.end(),
            [](const auto& a, const auto& c) { return std::get<0>(a) < std::get<0>(c); });
  for (std::size_t i = 0; i < list.size();) {
    std::size_t j = i;
    while (j < list.size() && std::get<0>(list[j]) == std::get<0>(list[i])) ++j;
    VertexId u = std::get<0>(list[i]);
    b.allocateEdges(u, static_cast<VertexId>(j - i));
    for (; i < j; ++i) b.addEdgeUnsafe(u, std::get<1>(list[i]), std::get<2>(list[i]));
  }
  b.update(false, false);
  return b;
}

}  // namespace

DiGraph generateBatch(const DiGraph& g, const BatchSpec& spec) {
  if (!(spec.fraction > 0.0) || spec.fraction > 0.1)
    throw std::invalid_argument("batch fraction must lie in (0, 0.1]");
  if (spec.kind == BatchSpec::Kind::Delete && g.size() == 0)
    throw std::invalid_argument("cannot draw a delete batch from an empty graph");
  if (spec.kind == BatchSpec::Kind::Insert && g.span() == 0)
    throw std::invalid_argument("cannot draw an insert batch for a graph with no vertex range");

  auto target = static_cast<std::size_t>(std::llround(spec.fraction * double(g.size())));
  target = std::max<std::size_t>(target, 1);
  SplitMix64 rng(spec.seed);
  std::vector<std::tuple<VertexId, VertexId, EdgeWeight>> edges;
  edges.reserve(target);

  if (spec.kind == BatchSpec::Kind::Delete) {
    target = std::min(target, g.size());
    // Index the live edges so a uniform edge index maps to (vertex, slot).
    std::vector<VertexId> verts;
    std::vector<std::uint64_t> cum;
    cum.push_back(0);
    for (std::size_t u = 0; u < g.span(); ++u) {
      auto uk = static_cast<VertexId>(u);
      if (!g.hasVertex(uk) || g.degree(uk) == 0) continue;
      verts.push_back(uk);
      cum.push_back(cum.back() + g.degree(uk));
    }
    std::unordered_set<std::uint64_t> chosen;
    chosen.reserve(target * 2);
    while (chosen.size() < target) chosen.insert(rng.below(cum.back()));
    for (std::uint64_t idx : chosen) {
      auto it = std::upper_bound(cum.begin(), cum.end(), idx);
      auto pos = static_cast<std::size_t>(it - cum.begin()) - 1;
      VertexId u = verts[pos];
      const Edge& e = g.edges(u)[idx - cum[pos]];
      edges.emplace_back(u, e.target, e.weight);
    }
  } else {
    auto n = static_cast<std::uint64_t>(g.span());
    for (std::size_t i = 0; i < target; ++i) {
      auto u = static_cast<VertexId>(rng.below(n));
      auto v = static_cast<VertexId>(rng.below(n));
      edges.emplace_back(u, v, EdgeWeight(1));
    }
  }
  return makeBatchGraph(edges);
}

CsrGraph synthGraph(std::size_t n, std::size_t m, std::uint64_t seed) {
  auto possible = static_cast<__uint128_t>(n) * (n > 0 ? n - 1 : 0);
  if (static_cast<__uint128_t>(m) > possible)
    throw InputError("synthetic graph infeasible: m exceeds n*(n-1)");

  SplitMix64 rng(seed);
  std::vector<std::uint64_t> picked;
  picked.reserve(m);
  if (m > 0 && static_cast<__uint128_t>(m) * 2 >= possible) {
    // Dense request: enumerate all ordered pairs and take a random prefix.
    std::vector<std::uint64_t> all;
    all.reserve(static_cast<std::size_t>(possible));
    for (std::uint64_t u = 0; u < n; ++u)
      for (std::uint64_t v = 0; v < n; ++v)
        if (u != v) all.push_back(u * n + v);
    for (std::size_t i = 0; i < m; ++i) {
      std::size_t j = i + static_cast<std::size_t>(rng.below(all.size() - i));
      std::swap(all[i], all[j]);
    }
    picked.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(m));
  } else {
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(m * 2);
    while (seen.size() < m) {
      std::uint64_t u = rng.below(n);
      std::uint64_t v = rng.below(n);
      if (u == v) continue;
      seen.insert(u * n + v);
    }
    picked.assign(seen.begin(), seen.end());
  }
  std::sort(picked.begin(), picked.end());

  CsrGraph g;
  g.weighted = false;
  g.resize(n, m);
  std::vector<std::uint32_t> degrees(n, 0);
  for (std::uint64_t code : picked) ++degrees[static_cast<std::size_t>(code / n)];
  g.offsets[0] = 0;
  exclusiveScan(g.offsets.data() + 1, degrees.data(), n);
  for (std::size_t u = 0; u < n; ++u) g.offsets[u + 1] += degrees[u];
  std::size_t k = 0;
  for (std::uint64_t code : picked) g.edgeKeys[k++] = static_cast<VertexId>(code % n);
  return g;
}

BaselineGraph baselineFromCsr(const CsrGraph& g) {
  BaselineGraph out;
  out.adj.resize(g.n);
  out.m = g.m;
  for (std::size_t u = 0; u < g.n; ++u) {
    auto uk = static_cast<VertexId>(u);
    auto ts = g.targets(uk);
    auto ws = g.weights(uk);
    auto& row = out.adj[u];
    row.reserve(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i)
      row.push_back(Edge{ts[i], g.weighted ? ws[i] : EdgeWeight(1)});
  }
  return out;
}

BaselineGraph cloneBaseline(const BaselineGraph& g, CloneSplit* split) {
  BaselineGraph out;
  out.m = g.m;
  auto t0 = Clock::now();
  out.adj.resize(g.adj.size());
  for (std::size_t u = 0; u < g.adj.size(); ++u) out.adj[u].reserve(g.adj[u].size());
  auto t1 = Clock::now();
  for (std::size_t u = 0; u < g.adj.size(); ++u)
    out.adj[u].insert(out.adj[u].end(), g.adj[u].begin(), g.adj[u].end());
  auto t2 = Clock::now();
  if (split) {
    split->allocSeconds = std::chrono::duration<double>(t1 - t0).count();
    split->copySeconds = std::chrono::duration<double>(t2 - t1).count();
  }
  return out;
}

// ---------------------------------------------------------------------------
// CSV

namespace {

void appendCsvField(std::string& out, std::string_view field) {
  if (field.find_first_of(",\"\n") == std::string_view::npos) {
    out += field;
    return;
  }
  out += '"';
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
}

std::string formatDouble(double x) {
  char buf[40];
  auto res = std::to_chars(buf, buf + sizeof buf, x);  // shortest round-trip form
  return std::string(buf, res.ptr);
}

std::vector<std::string> splitCsvLine(std::string_view line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') { cur += '"'; ++i; }
      else if (c == '"') quoted = false;
      else cur += c;
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  fields.push_back(std::move(cur));
  return fields;
}

double parseDouble(const std::string& s) {
  double x = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc() || p != s.data() + s.size())
    throw std::invalid_argument("bad numeric CSV field: " + s);
  return x;
}

std::uint64_t parseU64(const std::string& s) {
  std::uint64_t x = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc() || p != s.data() + s.size())
    throw std::invalid_argument("bad integer CSV field: " + s);
  return x;
}

}  // namespace

std::string csvHeader() {
  return "workload,graph,n,m,fraction,trial,seconds,alloc_seconds,copy_seconds";
}

std::string toCsvRow(const TimingRecord& r) {
  std::string out;
  appendCsvField(out, r.workload);
  out += ',';
  appendCsvField(out, r.graph);
  out += ',';
  out += std::to_string(r.n);
  out += ',';
  out += std::to_string(r.m);
  out += ',';
  if (r.fraction) out += formatDouble(*r.fraction);
  out += ',';
  appendCsvField(out, r.trial);
  out += ',';
  out += formatDouble(r.seconds);
  out += ',';
  if (r.allocSeconds) out += formatDouble(*r.allocSeconds);
  out += ',';
  if (r.copySeconds) out += formatDouble(*r.copySeconds);
  return out;
}

TimingRecord fromCsvRow(std::string_view line) {
  auto fields = splitCsvLine(line);
  if (fields.size() != 9)
    throw std::invalid_argument("expected 9 CSV fields, got " + std::to_string(fields.size()));
  TimingRecord r;
  r.workload = fields[0];
  r.graph = fields[1];
  r.n = parseU64(fields[2]);
  r.m = parseU64(fields[3]);
  if (!fields[4].empty()) r.fraction = parseDouble(fields[4]);
  r.trial = fields[5];
  r.seconds = parseDouble(fields[6]);
  if (!fields[7].empty()) r.allocSeconds = parseDouble(fields[7]);
  if (!fields[8].empty()) r.copySeconds = parseDouble(fields[8]);
  return r;
}

double geometricMean(std::span<const double> xs) {
  if (xs.empty()) return 0.0;
  bool allEqual = std::all_of(xs.begin(), xs.end(), [&](double x) { return x == xs.front(); });
  if (allEqual) return xs.front();
  double sumLog = 0;
  for (double x : xs) sumLog += std::log(x);
  return std::exp(sumLog / double(xs.size()));
}

// ---------------------------------------------------------------------------
// Allocator workloads

std::string_view allocatorName(AllocatorKind kind) {
  switch (kind) {
    case AllocatorKind::System: return "system";
    case AllocatorKind::Fixed: return "fixed-arena";
    case AllocatorKind::Growable: return "growable-arena";
    case AllocatorKind::Concurrent: return "concurrent-arena";
  }
  return "?";
}

double runAllocWorkload(AllocatorKind kind, AllocPattern pattern, std::size_t count, int rounds,
                        std::size_t blockSize) {
  const int threads = omp_get_max_threads();
  const std::size_t perThread = ceilDiv(count, static_cast<std::size_t>(threads));
  if (pattern != AllocPattern::Mixed) rounds = 1;

  std::vector<std::vector<void*>> ptrs(static_cast<std::size_t>(threads));
  for (auto& p : ptrs) p.assign(perThread, nullptr);

  // Per-thread arenas for the non-concurrent kinds; the pool of each fixed
  // arena is sized to hold a full per-thread round.
  std::vector<std::vector<std::byte>> fixedPools;
  std::vector<FixedArena> fixedArenas;
  std::vector<GrowableArena> growableArenas;
  ConcurrentArena concurrent(kDefaultPoolSize, threads);
  if (kind == AllocatorKind::Fixed) {
    fixedPools.resize(static_cast<std::size_t>(threads));
    fixedArenas.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) {
      auto& pool = fixedPools[static_cast<std::size_t>(t)];
      pool.resize(perThread * blockSize);
      fixedArenas.emplace_back(blockSize, pool.size(), pool.data());
    }
  } else if (kind == AllocatorKind::Growable) {
    growableArenas.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) growableArenas.emplace_back(blockSize, kDefaultPoolSize);
  }

  auto allocOne = [&](int t) -> void* {
    switch (kind) {
      case AllocatorKind::System: return ::operator new(blockSize);
      case AllocatorKind::Fixed: return fixedArenas[static_cast<std::size_t>(t)].allocate();
      case AllocatorKind::Growable: return growableArenas[static_cast<std::size_t>(t)].allocate();
      case AllocatorKind::Concurrent: return concurrent.allocate(t, blockSize);
    }
    return nullptr;
  };
  auto freeOne = [&](int t, void* ptr) {
    switch (kind) {
      case AllocatorKind::System: ::operator delete(ptr); break;
      case AllocatorKind::Fixed: fixedArenas[static_cast<std::size_t>(t)].deallocate(ptr); break;
      case AllocatorKind::Growable: growableArenas[static_cast<std::size_t>(t)].deallocate(ptr); break;
      case AllocatorKind::Concurrent: concurrent.deallocate(t, ptr, blockSize); break;
    }
  };

  double elapsed = 0;
  switch (pattern) {
    case AllocPattern::AllocOnly: {
      auto t0 = Clock::now();
      #pragma omp parallel num_threads(threads)
      {
        int t = omp_get_thread_num();
        void** mine = ptrs[static_cast<std::size_t>(t)].data();
        for (std::size_t i = 0; i < perThread; ++i) mine[i] = allocOne(t);
      }
      elapsed = secondsSince(t0);
      for (int t = 0; t < threads; ++t)
        for (void* p : ptrs[static_cast<std::size_t>(t)]) freeOne(t, p);
      break;
    }
    case AllocPattern::FreeOnly: {
      #pragma omp parallel num_threads(threads)
      {
        int t = omp_get_thread_num();
        void** mine = ptrs[static_cast<std::size_t>(t)].data();
        for (std::size_t i = 0; i < perThread; ++i) mine[i] = allocOne(t);
      }
      auto t0 = Clock::now();
      #pragma omp parallel num_threads(threads)
      {
        int t = omp_get_thread_num();
        void** mine = ptrs[static_cast<std::size_t>(t)].data();
        for (std::size_t i = 0; i < perThread; ++i) freeOne(t, mine[i]);
      }
      elapsed = secondsSince(t0);
      break;
    }
    case AllocPattern::Mixed: {
      auto t0 = Clock::now();
      #pragma omp parallel num_threads(threads)
      {
        int t = omp_get_thread_num();
        void** mine = ptrs[static_cast<std::size_t>(t)].data();
        for (int r = 0; r < rounds; ++r) {
          for (std::size_t i = 0; i < perThread; ++i) mine[i] = allocOne(t);
          for (std::size_t i = 0; i < perThread; ++i) freeOne(t, mine[i]);
        }
      }
      elapsed = secondsSince(t0);
      break;
    }
  }
  return elapsed;
}

// ---------------------------------------------------------------------------
// Suite driver

namespace {

struct SourceGraph {
  std::string name;
  std::string text;  // MTX bytes; filled only when the workload parses text
  CsrGraph csr;
};

bool parseSynthSpec(std::string_view spec, std::size_t& n, std::size_t& m, std::uint64_t& seed) {
  if (!spec.starts_with("synth:")) return false;
  spec.remove_prefix(6);
  std::uint64_t vals[3] = {0, 0, 0};
  const char* p = spec.data();
  const char* end = spec.data() + spec.size();
  for (int k = 0; k < 3; ++k) {
    auto [q, ec] = std::from_chars(p, end, vals[k]);
    if (ec != std::errc()) return false;
    p = q;
    if (k < 2) {
      if (p == end || *p != ',') return false;
      ++p;
    }
  }
  if (p != end) return false;
  n = vals[0];
  m = vals[1];
  seed = vals[2];
  return true;
}

SourceGraph acquireGraph(const BenchConfig& cfg, bool needText) {
  if (cfg.graphSpec.empty()) throw UsageError("a --graph is required for this workload");
  SourceGraph src;
  src.name = cfg.graphSpec;
  std::size_t n = 0, m = 0;
  std::uint64_t seed = 0;
  if (cfg.graphSpec.starts_with("synth:")) {
    if (!parseSynthSpec(cfg.graphSpec, n, m, seed))
      throw UsageError("bad synthetic graph spec, expected synth:<n>,<m>,<seed>");
    src.csr = synthGraph(n, m, seed);
    if (needText) {
      std::ostringstream text;
      writeMtx(src.csr, text);
      src.text = std::move(text).str();
    }
  } else {
    try {
      src.text = readFile(cfg.graphSpec);
      src.csr = loadGraph(src.text, cfg.rho, cfg.beta);
    } catch (const MtxParseError& e) {
      throw InputError(std::string("cannot parse ") + cfg.graphSpec + ": " + e.what());
    } catch (const std::runtime_error& e) {
      throw InputError(e.what());
    }
    if (!needText) src.text.clear();
  }
  return src;
}

/**
 * Naive per-vertex oracle for the update shadow check: expected edges of u
 * after applying the batch to the original graph, built with a plain map.
 */
std::vector<Edge> expectedEdges(const DiGraph& original, const DiGraph& batch, VertexId u,
                                BatchSpec::Kind kind) {
  std::map<VertexId, EdgeWeight> acc;
  for (const Edge& e : original.edges(u)) acc[e.target] = e.weight;
  if (batch.hasVertex(u)) {
    for (const Edge& e : batch.edges(u)) {
      if (kind == BatchSpec::Kind::Delete) acc.erase(e.target);
      else acc[e.target] = e.weight;
    }
  }
  std::vector<Edge> out;
  out.reserve(acc.size());
  for (auto& [target, weight] : acc) out.push_back(Edge{target, weight});
  return out;
}

void verifyTrial(const DiGraph& original, const DiGraph& batch, const DiGraph& result,
                 BatchSpec::Kind kind, std::uint64_t seed) {
  auto checkVertex = [&](VertexId u) {
    std::vector<Edge> want = expectedEdges(original, batch, u, kind);
    auto got = result.edges(u);
    if (got.size() != want.size() || !std::equal(got.begin(), got.end(), want.begin()))
      throw std::runtime_error("update verification failed at vertex " + std::to_string(u));
  };
  std::size_t span = std::max(result.span(), batch.span());
  if (original.size() <= 100000) {
    for (std::size_t u = 0; u < span; ++u) checkVertex(static_cast<VertexId>(u));
  } else {
    SplitMix64 rng(seed ^ 0xfeedface12345678ull);
    for (int i = 0; i < 1000; ++i)
      checkVertex(static_cast<VertexId>(rng.below(span)));
  }
}

void emitRow(std::ostream& out, const TimingRecord& r) {
  out << toCsvRow(r) << '\n';
}

TimingRecord geomeanRow(TimingRecord sample, std::span<const double> seconds,
                        std::span<const double> alloc, std::span<const double> copy) {
  sample.trial = "geomean";
  sample.seconds = geometricMean(seconds);
  sample.allocSeconds.reset();
  sample.copySeconds.reset();
  if (!alloc.empty()) sample.allocSeconds = geometricMean(alloc);
  if (!copy.empty()) sample.copySeconds = geometricMean(copy);
  return sample;
}

void runGraphWorkload(const BenchConfig& cfg, std::ostream& out) {
  const bool isLoad = cfg.workload == "load";
  SourceGraph src = acquireGraph(cfg, isLoad);
  const CsrGraph& csr = src.csr;

  TimingRecord base;
  base.graph = src.name;
  base.n = csr.n;
  base.m = csr.m;

  if (cfg.workload == "load") {
    std::vector<double> times;
    for (int trial = 0; trial < cfg.repeats; ++trial) {
      CsrGraph g;
      double s = timeIt([&] { g = loadGraph(src.text, cfg.rho, cfg.beta); });
      TimingRecord r = base;
      r.workload = "load";
      r.n = g.n;
      r.m = g.m;
      r.trial = std::to_string(trial);
      r.seconds = s;
      emitRow(out, r);
      times.push_back(s);
    }
    TimingRecord r = base;
    r.workload = "load";
    emitRow(out, geomeanRow(r, times, {}, {}));
    return;
  }

  if (cfg.workload == "clone") {
    DiGraph dig = cloneGraph(csr);
    BaselineGraph baseline = baselineFromCsr(csr);
    std::vector<double> digTimes, baseTimes, allocTimes, copyTimes;
    for (int trial = 0; trial < cfg.repeats; ++trial) {
      DiGraph copy;
      double s = timeIt([&] { copy = cloneGraph(dig); });
      TimingRecord r = base;
      r.workload = "clone";
      r.trial = std::to_string(trial);
      r.seconds = s;
      emitRow(out, r);
      digTimes.push_back(s);

      CloneSplit split;
      BaselineGraph bcopy;
      double sb = timeIt([&] { bcopy = cloneBaseline(baseline, &split); });
      TimingRecord rb = base;
      rb.workload = "clone-baseline";
      rb.trial = std::to_string(trial);
      rb.seconds = sb;
      rb.allocSeconds = split.allocSeconds;
      rb.copySeconds = split.copySeconds;
      emitRow(out, rb);
      baseTimes.push_back(sb);
      allocTimes.push_back(split.allocSeconds);
      copyTimes.push_back(split.copySeconds);
    }
    TimingRecord r = base;
    r.workload = "clone";
    emitRow(out, geomeanRow(r, digTimes, {}, {}));
    r.workload = "clone-baseline";
    emitRow(out, geomeanRow(r, baseTimes, allocTimes, copyTimes));
    return;
  }

  if (cfg.workload == "walk") {
    DiGraph dig = cloneGraph(csr);
    std::vector<double> times;
    for (int trial = 0; trial < cfg.repeats; ++trial) {
      std::vector<std::uint64_t> counts;
      double s = timeIt([&] { counts = reverseWalk(dig, cfg.steps); });
      TimingRecord r = base;
      r.workload = "walk";
      r.trial = std::to_string(trial);
      r.seconds = s;
      emitRow(out, r);
      times.push_back(s);
    }
    TimingRecord r = base;
    r.workload = "walk";
    emitRow(out, geomeanRow(r, times, {}, {}));
    return;
  }

  // Batch update workloads.
  const bool isDelete = cfg.workload == "delete" || cfg.workload == "delete-new";
  const bool newInstance = cfg.workload == "delete-new" || cfg.workload == "insert-new";
  DiGraph dig = cloneGraph(csr);
  SplitMix64 seeder(cfg.seed);
  for (double fraction : cfg.fractions) {
    std::vector<double> times;
    for (int trial = 0; trial < cfg.repeats; ++trial) {
      BatchSpec spec;
      spec.kind = isDelete ? BatchSpec::Kind::Delete : BatchSpec::Kind::Insert;
      spec.fraction = fraction;
      spec.seed = seeder();
      spec.repeats = cfg.repeats;
      DiGraph batch = generateBatch(dig, spec);
      double s = 0;
      if (newInstance) {
        std::pair<DiGraph, UpdateDelta> result;
        s = timeIt([&] {
          result = isDelete ? subtractGraph(dig, batch) : addGraph(dig, batch);
        });
        verifyTrial(dig, batch, result.first, spec.kind, spec.seed);
      } else {
        DiGraph work = cloneGraph(dig);
        s = timeIt([&] {
          if (isDelete) subtractGraphInplace(work, batch);
          else addGraphInplace(work, batch);
        });
        verifyTrial(dig, batch, work, spec.kind, spec.seed);
      }
      TimingRecord r = base;
      r.workload = cfg.workload;
      r.fraction = fraction;
      r.trial = std::to_string(trial);
      r.seconds = s;
      emitRow(out, r);
      times.push_back(s);
    }
    TimingRecord r = base;
    r.workload = cfg.workload;
    r.fraction = fraction;
    emitRow(out, geomeanRow(r, times, {}, {}));
  }
}

void runAllocatorWorkload(const BenchConfig& cfg, std::ostream& out) {
  AllocPattern pattern;
  if (cfg.workload == "alloc-alloc") pattern = AllocPattern::AllocOnly;
  else if (cfg.workload == "alloc-free") pattern = AllocPattern::FreeOnly;
  else pattern = AllocPattern::Mixed;

  constexpr AllocatorKind kinds[] = {AllocatorKind::System, AllocatorKind::Fixed,
                                     AllocatorKind::Growable, AllocatorKind::Concurrent};
  for (AllocatorKind kind : kinds) {
    std::vector<double> times;
    TimingRecord base;
    base.workload = cfg.workload;
    base.graph = std::string(allocatorName(kind));
    base.n = cfg.allocCount;
    base.m = static_cast<std::uint64_t>(pattern == AllocPattern::Mixed ? cfg.allocRounds : 1);
    for (int trial = 0; trial < cfg.repeats; ++trial) {
      double s = runAllocWorkload(kind, pattern, cfg.allocCount, cfg.allocRounds);
      TimingRecord r = base;
      r.trial = std::to_string(trial);
      r.seconds = s;
      emitRow(out, r);
      times.push_back(s);
    }
    emitRow(out, geomeanRow(base, times, {}, {}));
  }
}

}  // namespace

void runSuite(const BenchConfig& cfg, std::ostream& out) {
  static const char* kWorkloads[] = {"load",       "clone",      "delete",     "delete-new",
                                     "insert",     "insert-new", "walk",       "alloc-alloc",
                                     "alloc-free", "alloc-mixed"};
  bool known = std::any_of(std::begin(kWorkloads), std::end(kWorkloads),
                           [&](const char* w) { return cfg.workload == w; });
  if (!known) throw UsageError("unknown workload '" + cfg.workload + "'");
  if (cfg.repeats < 1) throw UsageError("--repeats must be at least 1");
  for (double f : cfg.fractions) {
    if (!(f > 0.0) || f > 0.1)
      throw UsageError("batch fractions must lie in (0, 0.1]");
  }
  // The environment takes precedence over --threads so whole runs can be
  // repinned without touching scripts.
  if (cfg.threads > 0 && std::getenv("OMP_NUM_THREADS") == nullptr)
    omp_set_num_threads(cfg.threads);

  out << csvHeader() << '\n';
  if (cfg.workload.starts_with("alloc-")) runAllocatorWorkload(cfg, out);
  else runGraphWorkload(cfg, out);
}

}  // namespace grapharena
