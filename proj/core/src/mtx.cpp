#include "grapharena/mtx.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "grapharena/util.hpp"

namespace grapharena {

namespace {

bool isWs(char c) noexcept {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n';
}

bool isDigit(char c) noexcept {
  return c >= '0' && c <= '9';
}

std::size_t nextLineStart(std::string_view s, std::size_t p) noexcept {
  while (p < s.size() && s[p] != '\n') ++p;
  return p < s.size() ? p + 1 : p;
}

std::size_t skipWs(std::string_view s, std::size_t p, std::size_t end) noexcept {
  while (p < end && isWs(s[p])) ++p;
  return p;
}

std::string toLower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::vector<std::string_view> splitTokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t p = 0;
  while (p < line.size()) {
    while (p < line.size() && isWs(line[p])) ++p;
    std::size_t q = p;
    while (q < line.size() && !isWs(line[q])) ++q;
    if (q > p) tokens.push_back(line.substr(p, q - p));
    p = q;
  }
  return tokens;
}

}  // namespace

MtxHeader readHeader(std::string_view data) {
  MtxHeader h;
  std::size_t lineEnd = nextLineStart(data, 0);
  std::string_view banner = data.substr(0, lineEnd);
  auto tokens = splitTokens(banner);
  if (tokens.empty() || toLower(tokens[0]) != "%%matrixmarket")
    throw MtxParseError("missing MatrixMarket banner", 0);
  if (tokens.size() < 5)
    throw MtxParseError("incomplete MatrixMarket banner", banner.size());
  if (toLower(tokens[1]) != "matrix" || toLower(tokens[2]) != "coordinate")
    throw MtxParseError("unsupported format: only 'matrix coordinate' files are handled", 0);
  std::string field = toLower(tokens[3]);
  if (field == "pattern") h.weighted = false;
  else if (field == "real" || field == "integer") h.weighted = true;
  else throw MtxParseError("unsupported field type '" + field + "'", 0);
  std::string symmetry = toLower(tokens[4]);
  if (symmetry == "general") h.symmetric = false;
  else if (symmetry == "symmetric") h.symmetric = true;
  else throw MtxParseError("unsupported symmetry '" + symmetry + "'", 0);

  // Skip comments and blank lines up to the size line.
  std::size_t p = lineEnd;
  while (true) {
    if (p >= data.size()) throw MtxParseError("missing size line", p);
    std::size_t q = nextLineStart(data, p);
    std::string_view line = data.substr(p, q - p);
    if (!line.empty() && line[0] == '%') { p = q; continue; }
    if (splitTokens(line).empty()) { p = q; continue; }
    break;
  }

  std::size_t q = nextLineStart(data, p);
  std::uint64_t* dst[3] = {&h.rows, &h.cols, &h.entries};
  std::size_t pos = p;
  for (int k = 0; k < 3; ++k) {
    pos = skipWs(data, pos, q);
    if (pos >= q || !isDigit(data[pos]))
      throw MtxParseError("malformed size line: expected 'rows cols entries'", pos);
    auto [ptr, ec] = std::from_chars(data.data() + pos, data.data() + q, *dst[k]);
    if (ec != std::errc())
      throw MtxParseError("malformed size line: expected 'rows cols entries'", pos);
    pos = static_cast<std::size_t>(ptr - data.data());
  }
  h.headerLength = q;
  return h;
}

std::pair<std::size_t, std::size_t> getBlock(std::string_view data, std::size_t i,
                                             std::size_t beta) {
  std::size_t n = data.size();
  std::size_t b = std::min(i, n);
  std::size_t B = n - b < beta ? n : b + beta;
  if (b != 0 && b < n && data[b - 1] != '\n') b = nextLineStart(data, b);
  if (B != 0 && B < n && data[B - 1] != '\n') B = nextLineStart(data, B);
  if (b > B) b = B;
  return {b, B};
}

ThreadEdgeBuffers::ThreadEdgeBuffers(int threads, std::size_t edgeCapacity, bool weighted_)
    : weighted(weighted_),
      sources(static_cast<std::size_t>(threads)),
      targets(static_cast<std::size_t>(threads)),
      counts(static_cast<std::size_t>(threads), 0) {
  if (weighted) weights.resize(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t) {
    sources[static_cast<std::size_t>(t)].resize(edgeCapacity);
    targets[static_cast<std::size_t>(t)].resize(edgeCapacity);
    if (weighted) weights[static_cast<std::size_t>(t)].resize(edgeCapacity);
  }
}

void readEdgelist(PartitionDegrees& pdegrees, ThreadEdgeBuffers& buffers, std::string_view body,
                  std::size_t bodyOffset, const MtxHeader& header, std::size_t beta, int rho) {
  if (beta == 0) beta = kDefaultBlockSize;
  if (rho < 1) rho = 1;
  const std::uint64_t maxId = std::max(header.rows, header.cols);
  const bool symmetric = header.symmetric;
  const bool weighted = header.weighted;
  const std::size_t numBlocks = body.empty() ? 0 : ceilDiv(body.size(), beta);

  std::atomic<bool> failed{false};
  std::string errMsg;
  std::size_t errOffset = 0;

  #pragma omp parallel
  {
    int t = omp_get_thread_num();
    if (t < buffers.threads()) {
      auto tu = static_cast<std::size_t>(t);
      VertexId* src = buffers.sources[tu].data();
      VertexId* tgt = buffers.targets[tu].data();
      EdgeWeight* wgt = weighted ? buffers.weights[tu].data() : nullptr;
      std::uint32_t* degs = pdegrees[static_cast<std::size_t>(t % rho)].data();
      const std::size_t cap = buffers.sources[tu].size();
      std::size_t j = buffers.counts[tu];

      auto fail = [&](const char* msg, std::size_t off) {
        #pragma omp critical(grapharena_mtx_error)
        {
          if (!failed.load(std::memory_order_relaxed)) {
            errMsg = msg;
            errOffset = off;
            failed.store(true, std::memory_order_relaxed);
          }
        }
      };

      #pragma omp for schedule(dynamic) nowait
      for (std::size_t blk = 0; blk < numBlocks; ++blk) {
        if (failed.load(std::memory_order_relaxed)) continue;
        auto [b, B] = getBlock(body, blk * beta, beta);
        while (true) {
          b = skipWs(body, b, B);
          if (b >= B) break;
          std::size_t recordStart = b;
          std::uint64_t uRaw = 0, vRaw = 0;
          EdgeWeight w = 1;
          if (!isDigit(body[b])) { fail("expected vertex id", bodyOffset + b); break; }
          auto [pu, ecu] = std::from_chars(body.data() + b, body.data() + B, uRaw);
          b = static_cast<std::size_t>(pu - body.data());
          b = skipWs(body, b, B);
          if (b >= B || !isDigit(body[b])) { fail("expected target vertex id", bodyOffset + b); break; }
          auto [pv, ecv] = std::from_chars(body.data() + b, body.data() + B, vRaw);
          b = static_cast<std::size_t>(pv - body.data());
          if (weighted) {
            b = skipWs(body, b, B);
            std::size_t ws = b;
            if (b < B && body[b] == '+') ++ws;  // from_chars rejects an explicit plus
            auto [pw, ecw] = std::from_chars(body.data() + ws, body.data() + B, w,
                                             std::chars_format::general);
            if (ws >= B || ecw != std::errc()) { fail("expected edge weight", bodyOffset + b); break; }
            b = static_cast<std::size_t>(pw - body.data());
          }
          if (uRaw == 0 || uRaw > maxId || vRaw == 0 || vRaw > maxId) {
            fail("vertex id out of range", bodyOffset + recordStart);
            break;
          }
          auto u = static_cast<VertexId>(uRaw - 1);
          auto v = static_cast<VertexId>(vRaw - 1);
          std::size_t need = (symmetric && u != v) ? 2 : 1;
          if (j + need > cap) {
            fail("more entries than the size line declares", bodyOffset + recordStart);
            break;
          }
          src[j] = u;
          tgt[j] = v;
          if (wgt) wgt[j] = w;
          std::atomic_ref<std::uint32_t>(degs[u]).fetch_add(1, std::memory_order_relaxed);
          ++j;
          if (symmetric && u != v) {
            src[j] = v;
            tgt[j] = u;
            if (wgt) wgt[j] = w;
            std::atomic_ref<std::uint32_t>(degs[v]).fetch_add(1, std::memory_order_relaxed);
            ++j;
          }
        }
      }
      buffers.counts[tu] = j;
    }
  }
  if (failed.load()) throw MtxParseError(errMsg, errOffset);
}

PartitionedCsr::PartitionedCsr(CsrGraph& g, int rho_, std::size_t vertexCount,
                               std::size_t edgeCapacity)
    : rho(rho_ < 1 ? 1 : rho_) {
  auto r = static_cast<std::size_t>(rho);
  poffsets.assign(r, nullptr);
  pedgeKeys.assign(r, nullptr);
  pedgeValues.assign(r, nullptr);
  poffsets[0] = g.offsets.data();
  pedgeKeys[0] = g.edgeKeys.data();
  if (g.weighted) pedgeValues[0] = g.edgeValues.data();
  offsetStore.resize(r - 1);
  keyStore.resize(r - 1);
  if (g.weighted) valueStore.resize(r - 1);
  #pragma omp parallel for schedule(static)
  for (std::size_t p = 1; p < r; ++p) {
    offsetStore[p - 1].resize(vertexCount + 1);
    keyStore[p - 1].resize(edgeCapacity);
    poffsets[p] = offsetStore[p - 1].data();
    pedgeKeys[p] = keyStore[p - 1].data();
    if (g.weighted) {
      valueStore[p - 1].resize(edgeCapacity);
      pedgeValues[p] = valueStore[p - 1].data();
    }
  }
}

std::size_t convertToCsr(PartitionedCsr& pcsr, PartitionDegrees& pdegrees,
                         const ThreadEdgeBuffers& buffers, std::size_t vertexCount,
                         bool weighted) {
  const int rho = pcsr.rho;
  // Accumulate global per-vertex degrees into partition 0, which backs the
  // final CSR; its offsets below therefore span all partitions' edges.
  if (rho > 1) {
    #pragma omp parallel for schedule(static)
    for (std::size_t u = 0; u < vertexCount; ++u) {
      for (int p = 1; p < rho; ++p)
        pdegrees[0][u] += pdegrees[static_cast<std::size_t>(p)][u];
    }
  }
  // Shifted offsets: the exclusive scan lands one slot ahead, so each
  // offsets[u+1] starts at vertex u's first slot and can be used directly as
  // an insertion cursor; filling the CSR leaves the final offsets behind.
  std::size_t total = 0;
  for (int p = 0; p < rho; ++p) {
    auto pu = static_cast<std::size_t>(p);
    pcsr.poffsets[pu][0] = 0;
    std::uint64_t mp = exclusiveScan(pcsr.poffsets[pu] + 1, pdegrees[pu].data(), vertexCount);
    if (p == 0) total = mp;
  }
  // Scatter each staged edge list into its partition.
  #pragma omp parallel for schedule(static, 1)
  for (int t = 0; t < buffers.threads(); ++t) {
    auto tu = static_cast<std::size_t>(t);
    auto pu = static_cast<std::size_t>(t % rho);
    std::uint64_t* offs = pcsr.poffsets[pu];
    VertexId* keys = pcsr.pedgeKeys[pu];
    EdgeWeight* vals = pcsr.pedgeValues[pu];
    const VertexId* src = buffers.sources[tu].data();
    const VertexId* tgt = buffers.targets[tu].data();
    const EdgeWeight* wgt = weighted ? buffers.weights[tu].data() : nullptr;
    const std::size_t cnt = buffers.counts[tu];
    for (std::size_t i = 0; i < cnt; ++i) {
      VertexId u = src[i];
      std::uint64_t j =
          std::atomic_ref<std::uint64_t>(offs[u + 1]).fetch_add(1, std::memory_order_relaxed);
      keys[j] = tgt[i];
      if (wgt) vals[j] = wgt[i];
    }
  }
  // Append partitions 1.. behind partition 0's edges, vertex by vertex, and
  // finalize partition 0's offsets.
  if (rho > 1) {
    #pragma omp parallel for schedule(dynamic, 2048)
    for (std::size_t u = 0; u < vertexCount; ++u) {
      std::uint64_t j = pcsr.poffsets[0][u + 1];
      for (int p = 1; p < rho; ++p) {
        auto pu = static_cast<std::size_t>(p);
        std::uint64_t i = pcsr.poffsets[pu][u];
        std::uint64_t end = pcsr.poffsets[pu][u + 1];
        for (; i < end; ++i) {
          pcsr.pedgeKeys[0][j] = pcsr.pedgeKeys[pu][i];
          if (weighted) pcsr.pedgeValues[0][j] = pcsr.pedgeValues[pu][i];
          ++j;
        }
      }
      pcsr.poffsets[0][u + 1] = j;
    }
  }
  return total;
}

CsrGraph loadGraph(std::string_view data, int rho, std::size_t beta) {
  if (rho < 1) rho = 1;
  if (beta == 0) beta = kDefaultBlockSize;
  MtxHeader header = readHeader(data);
  std::size_t vertexCount = std::max(header.rows, header.cols);
  std::size_t edgeCapacity = header.symmetric ? 2 * header.entries : header.entries;

  CsrGraph g;
  g.weighted = header.weighted;
  g.resize(vertexCount, edgeCapacity);

  int threads = omp_get_max_threads();
  ThreadEdgeBuffers buffers(threads, edgeCapacity, header.weighted);
  PartitionDegrees pdegrees(static_cast<std::size_t>(rho),
                            std::vector<std::uint32_t>(vertexCount, 0));
  readEdgelist(pdegrees, buffers, data.substr(header.headerLength), header.headerLength, header,
               beta, rho);

  PartitionedCsr pcsr(g, rho, vertexCount, edgeCapacity);
  std::size_t m = convertToCsr(pcsr, pdegrees, buffers, vertexCount, header.weighted);
  // Self-loops in symmetric files are stored once, so the CSR can end up
  // smaller than the doubled entry count.
  g.resize(vertexCount, m);
  return g;
}

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw std::runtime_error("error reading file: " + path);
  return std::move(buf).str();
}

void writeMtx(const CsrGraph& g, std::ostream& out) {
  out << "%%MatrixMarket matrix coordinate " << (g.weighted ? "real" : "pattern")
      << " general\n";
  out << g.n << ' ' << g.n << ' ' << g.m << '\n';
  char line[96];
  for (std::size_t u = 0; u < g.n; ++u) {
    auto uv = static_cast<VertexId>(u);
    auto ts = g.targets(uv);
    auto ws = g.weights(uv);
    for (std::size_t k = 0; k < ts.size(); ++k) {
      int len;
      if (g.weighted)
        len = std::snprintf(line, sizeof line, "%zu %u %.9g\n", u + 1, ts[k] + 1,
                            static_cast<double>(ws[k]));
      else
        len = std::snprintf(line, sizeof line, "%zu %u\n", u + 1, ts[k] + 1);
      out.write(line, len);
    }
  }
}

}  // namespace grapharena
