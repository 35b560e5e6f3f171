#include <omp.h>

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>

#include "grapharena/mtx.hpp"
#include "grapharena/random.hpp"
#include "test_util.hpp"

using namespace grapharena;

TEST_CASE("readHeader parses banner, field, and symmetry") {
  auto h = readHeader("%%MatrixMarket matrix coordinate real general\n4 4 6\n1 2 1.0\n");
  CHECK_FALSE(h.symmetric);
  CHECK(h.weighted);
  CHECK(h.rows == 4);
  CHECK(h.cols == 4);
  CHECK(h.entries == 6);
  CHECK(h.headerLength == std::string("%%MatrixMarket matrix coordinate real general\n4 4 6\n").size());

  auto h2 = readHeader("%%MatrixMarket matrix coordinate pattern symmetric\n3 3 2\n");
  CHECK(h2.symmetric);
  CHECK_FALSE(h2.weighted);
  CHECK(h2.rows == 3);
  CHECK(h2.entries == 2);

  CHECK_THROWS_AS(readHeader("%%MatrixMarket matrix array real general\n4 4 6\n"), MtxParseError);
  CHECK_THROWS_AS(readHeader("junk\n1 1 1\n"), MtxParseError);
  CHECK_THROWS_AS(readHeader("%%MatrixMarket matrix coordinate complex general\n1 1 1\n"),
                  MtxParseError);
  CHECK_THROWS_AS(readHeader("%%MatrixMarket matrix coordinate real general\n"), MtxParseError);
}

TEST_CASE("readHeader skips comments and reports byte offsets") {
  std::string text =
      "%%MatrixMarket matrix coordinate integer general\n"
      "% comment one\n"
      "%% comment two\n"
      "5 4 3\n"
      "1 2 10\n";
  auto h = readHeader(text);
  CHECK(h.weighted);
  CHECK(h.rows == 5);
  CHECK(h.cols == 4);
  CHECK(h.headerLength == text.size() - std::string("1 2 10\n").size());

  try {
    readHeader("%%MatrixMarket matrix coordinate real general\n% c\nxx yy\n");
    FAIL("expected MtxParseError");
  } catch (const MtxParseError& e) {
    CHECK(e.offset() > 0);
  }
}

TEST_CASE("getBlock respects line boundaries") {
  std::string data = "aa\nbb\ncc\n";  // 9 bytes
  CHECK(getBlock(data, 4, 4) == std::pair<std::size_t, std::size_t>{6, 9});
  CHECK(getBlock(data, 0, 4) == std::pair<std::size_t, std::size_t>{0, 6});
  CHECK(getBlock(data, 9, 4) == std::pair<std::size_t, std::size_t>{9, 9});
  CHECK(getBlock(data, 100, 4) == std::pair<std::size_t, std::size_t>{9, 9});
  CHECK(getBlock(data, 8, 4) == std::pair<std::size_t, std::size_t>{9, 9});
}

TEST_CASE("getBlock tiles every complete line exactly once") {
  SplitMix64 rng(99);
  for (int round = 0; round < 60; ++round) {
    // Random lines of random lengths, one token per line.
    std::string data;
    std::vector<std::string> lines;
    std::size_t count = 1 + rng.below(60);
    for (std::size_t i = 0; i < count; ++i) {
      std::string line(1 + rng.below(40), 'x');
      line += std::to_string(i);
      lines.push_back(line);
      data += line;
      data += '\n';
    }
    std::size_t beta = 8 + rng.below(4089);
    std::string reassembled;
    std::size_t prevEnd = 0;
    bool first = true;
    for (std::size_t i = 0;; i += beta) {
      auto [b, B] = getBlock(data, i, beta);
      if (!first) CHECK(b >= prevEnd);  // no overlap with the previous block
      if (b < B) {
        if (!first) CHECK(b == prevEnd);  // no gap either: blocks chain exactly
        reassembled.append(data, b, B - b);
        prevEnd = B;
        first = false;
      }
      if (i >= data.size()) break;
    }
    CHECK(reassembled == data);
  }
}

namespace {

// Run readEdgelist alone over a body and collect the union of all thread
// buffers as (source, target, weight) triples.
std::vector<std::tuple<VertexId, VertexId, EdgeWeight>> scanBody(const std::string& body,
                                                                 const MtxHeader& header,
                                                                 std::size_t beta = 8) {
  int threads = omp_get_max_threads();
  std::size_t cap = header.symmetric ? 2 * header.entries : header.entries;
  ThreadEdgeBuffers buffers(threads, cap, header.weighted);
  PartitionDegrees pdegrees(2, std::vector<std::uint32_t>(std::max(header.rows, header.cols), 0));
  readEdgelist(pdegrees, buffers, body, 0, header, beta, 2);
  std::vector<std::tuple<VertexId, VertexId, EdgeWeight>> out;
  for (int t = 0; t < buffers.threads(); ++t) {
    auto tu = static_cast<std::size_t>(t);
    for (std::size_t i = 0; i < buffers.counts[tu]; ++i)
      out.emplace_back(buffers.sources[tu][i], buffers.targets[tu][i],
                       header.weighted ? buffers.weights[tu][i] : EdgeWeight(1));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("readEdgelist records zero-based edges") {
  SUBCASE("symmetric bodies double every off-diagonal edge") {
    MtxHeader h{.symmetric = true, .weighted = false, .rows = 3, .cols = 3, .entries = 2};
    auto got = scanBody("1 2\n2 3\n", h);
    std::vector<std::tuple<VertexId, VertexId, EdgeWeight>> want = {
        {0, 1, 1}, {1, 0, 1}, {1, 2, 1}, {2, 1, 1}};
    CHECK(got == want);
  }
  SUBCASE("weighted general body") {
    MtxHeader h{.symmetric = false, .weighted = true, .rows = 2, .cols = 2, .entries = 1};
    auto got = scanBody("1 2 5.5\n", h);
    REQUIRE(got.size() == 1);
    CHECK(got[0] == std::tuple<VertexId, VertexId, EdgeWeight>{0, 1, 5.5f});
  }
  SUBCASE("self-loop in a general body is recorded once") {
    MtxHeader h{.symmetric = false, .weighted = false, .rows = 1, .cols = 1, .entries = 1};
    auto got = scanBody("1 1\n", h);
    REQUIRE(got.size() == 1);
    CHECK(got[0] == std::tuple<VertexId, VertexId, EdgeWeight>{0, 0, 1});
  }
  SUBCASE("symmetric self-loop is not doubled") {
    MtxHeader h{.symmetric = true, .weighted = false, .rows = 2, .cols = 2, .entries = 2};
    auto got = scanBody("1 1\n1 2\n", h);
    REQUIRE(got.size() == 3);  // (0,0) once, (0,1) and (1,0)
  }
}

TEST_CASE("readEdgelist rejects malformed records with offsets") {
  MtxHeader h{.symmetric = false, .weighted = false, .rows = 9, .cols = 9, .entries = 3};
  CHECK_THROWS_AS(scanBody("1 2\nx 3\n", h), MtxParseError);
  CHECK_THROWS_AS(scanBody("1\n", h), MtxParseError);
  CHECK_THROWS_AS(scanBody("0 2\n", h), MtxParseError);   // ids are 1-based
  CHECK_THROWS_AS(scanBody("1 10\n", h), MtxParseError);  // beyond max(rows, cols)
  MtxHeader hw{.symmetric = false, .weighted = true, .rows = 9, .cols = 9, .entries = 3};
  CHECK_THROWS_AS(scanBody("1 2 zz\n", hw), MtxParseError);
}

TEST_CASE("single-partition conversion produces the expected CSR") {
  std::string text =
      "%%MatrixMarket matrix coordinate pattern general\n"
      "3 3 3\n"
      "1 2\n1 3\n2 3\n";
  for (int rho : {1, 4}) {
    CsrGraph g = loadGraph(text, rho, 8);
    CHECK(g.n == 3);
    CHECK(g.m == 3);
    std::vector<std::uint64_t> offsets(g.offsets.begin(), g.offsets.end());
    CHECK(offsets == std::vector<std::uint64_t>{0, 2, 3, 3});
    CHECK(testutil::sortedRow(g, 0) ==
          std::vector<std::pair<VertexId, EdgeWeight>>{{1, 1.f}, {2, 1.f}});
    CHECK(testutil::sortedRow(g, 1) == std::vector<std::pair<VertexId, EdgeWeight>>{{2, 1.f}});
    CHECK(testutil::sortedRow(g, 2).empty());
  }
}

TEST_CASE("loadGraph handles the documented small cases") {
  SUBCASE("pattern symmetric") {
    CsrGraph g = loadGraph("%%MatrixMarket matrix coordinate pattern symmetric\n3 3 2\n1 2\n2 3\n");
    CHECK(g.n == 3);
    CHECK(g.m == 4);
    CHECK(testutil::sortedRow(g, 0) == std::vector<std::pair<VertexId, EdgeWeight>>{{1, 1.f}});
    CHECK(testutil::sortedRow(g, 1) ==
          std::vector<std::pair<VertexId, EdgeWeight>>{{0, 1.f}, {2, 1.f}});
    CHECK(testutil::sortedRow(g, 2) == std::vector<std::pair<VertexId, EdgeWeight>>{{1, 1.f}});
  }
  SUBCASE("weighted general") {
    CsrGraph g = loadGraph("%%MatrixMarket matrix coordinate real general\n2 2 1\n1 2 7.0\n");
    CHECK(g.n == 2);
    CHECK(g.m == 1);
    CHECK(g.weighted);
    CHECK(testutil::sortedRow(g, 0) == std::vector<std::pair<VertexId, EdgeWeight>>{{1, 7.f}});
  }
  SUBCASE("header-only file") {
    CsrGraph g = loadGraph("%%MatrixMarket matrix coordinate pattern general\n5 5 0\n");
    CHECK(g.n == 5);
    CHECK(g.m == 0);
    for (auto off : g.offsets) CHECK(off == 0);
  }
  SUBCASE("CRLF line endings") {
    CsrGraph g =
        loadGraph("%%MatrixMarket matrix coordinate pattern general\r\n2 2 2\r\n1 2\r\n2 1\r\n");
    CHECK(g.n == 2);
    CHECK(g.m == 2);
    CHECK(testutil::sortedRow(g, 0) == std::vector<std::pair<VertexId, EdgeWeight>>{{1, 1.f}});
  }
  SUBCASE("rectangular sizes use max(rows, cols)") {
    CsrGraph g = loadGraph("%%MatrixMarket matrix coordinate pattern general\n2 6 1\n1 6\n");
    CHECK(g.n == 6);
    CHECK(g.m == 1);
  }
  SUBCASE("no trailing newline on the last record") {
    CsrGraph g = loadGraph("%%MatrixMarket matrix coordinate real general\n3 3 2\n1 2 5\n3 1 2.5");
    CHECK(g.m == 2);
    CHECK(g.weights(2)[0] == 2.5f);
  }
  SUBCASE("blank lines and tabs inside the body") {
    CsrGraph g = loadGraph(
        "%%MatrixMarket matrix coordinate pattern general\n3 3 3\n\n1\t2\n\n 2 3 \n3 1\n\n");
    CHECK(g.n == 3);
    CHECK(g.m == 3);
  }
  SUBCASE("whitespace-padded size line") {
    CsrGraph g = loadGraph("%%MatrixMarket matrix coordinate pattern general\n  2 2 1  \n1 2\n");
    CHECK(g.n == 2);
    CHECK(g.m == 1);
  }
}

TEST_CASE("loader matches the reference parser across styles") {
  const std::string files[] = {
      "%%MatrixMarket matrix coordinate real general\n4 4 5\n1 2 1.5\n2 3 -2e2\n4 1 0.25\n"
      "3 3 1e-3\n1 4 +8\n",
      "%%MatrixMarket matrix coordinate real symmetric\n4 4 4\n2 1 3.5\n3 2 1.25\n4 4 9\n1 3 2\n",
      "%%MatrixMarket matrix coordinate pattern general\n6 6 4\n1 2\n2 2\n6 1\n3 5\n",
      "%%MatrixMarket matrix coordinate pattern symmetric\n5 5 3\n1 2\n3 3\n5 4\n",
      "%%MatrixMarket matrix coordinate integer general\n3 3 3\n1 1 4\n2 3 -7\n3 1 12\n",
  };
  for (const std::string& text : files) {
    CsrGraph g = loadGraph(text, 2, 16);
    auto ref = testutil::referenceParseMtx(text);
    CHECK(testutil::csrMatchesReference(g, ref));
    // Offsets are a valid CSR: nondecreasing, closed by m.
    REQUIRE(g.offsets.size() == g.n + 1);
    CHECK(g.offsets[0] == 0);
    for (std::size_t u = 0; u < g.n; ++u) CHECK(g.offsets[u] <= g.offsets[u + 1]);
    CHECK(g.offsets[g.n] == g.m);
    // Degree consistency against the reference parser.
    for (std::size_t u = 0; u < g.n; ++u) {
      auto uk = static_cast<VertexId>(u);
      std::size_t refDeg = 0;
      if (auto it = ref.adj.find(uk); it != ref.adj.end()) refDeg = it->second.size();
      CHECK(g.degree(uk) == refDeg);
    }
  }
}

TEST_CASE("parsed weights match the reference parser bit for bit") {
  std::ostringstream text;
  text << "%%MatrixMarket matrix coordinate real general\n100 100 99\n";
  SplitMix64 rng(31);
  for (int i = 1; i < 100; ++i) {
    // Up to 9 significant digits with scattered exponents and signs.
    std::uint64_t mant = rng.below(1000000000);
    int exp = int(rng.below(13)) - 6;
    text << i << ' ' << ((i % 7) + 1) << ' ' << (i % 3 == 0 ? "-" : "") << mant << 'e' << exp
         << '\n';
  }
  std::string data = text.str();
  CsrGraph g = loadGraph(data, 3, 64);
  auto ref = testutil::referenceParseMtx(data);
  REQUIRE(g.m == ref.m);
  for (std::size_t u = 0; u < g.n; ++u) {
    auto uk = static_cast<VertexId>(u);
    auto got = testutil::sortedRow(g, uk);
    auto want = ref.adj.count(uk) ? ref.adj.at(uk)
                                  : std::vector<std::pair<VertexId, EdgeWeight>>{};
    std::sort(want.begin(), want.end());
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
      CHECK(got[i].first == want[i].first);
      CHECK(std::bit_cast<std::uint32_t>(got[i].second) ==
            std::bit_cast<std::uint32_t>(want[i].second));
    }
  }
}

TEST_CASE("loads are identical across thread and partition counts") {
  // Build a moderately sized random file, then compare (offsets, sorted rows)
  // across configurations.
  CsrGraph synth;
  {
    std::ostringstream text;
    SplitMix64 rng(77);
    std::size_t n = 400, m = 5000;
    text << "%%MatrixMarket matrix coordinate real general\n" << n << ' ' << n << ' ' << m << '\n';
    for (std::size_t i = 0; i < m; ++i)
      text << 1 + rng.below(n) << ' ' << 1 + rng.below(n) << ' ' << rng.below(100) << '\n';
    std::string data = text.str();

    int savedThreads = omp_get_max_threads();
    std::vector<std::vector<std::uint64_t>> allOffsets;
    std::vector<std::size_t> allM;
    std::vector<std::vector<std::pair<VertexId, EdgeWeight>>> allRows;
    for (int threads : {1, 2, 4}) {
      omp_set_num_threads(threads);
      for (int rho : {1, 2, 4}) {
        CsrGraph g = loadGraph(data, rho, 512);
        allOffsets.emplace_back(g.offsets.begin(), g.offsets.end());
        allM.push_back(g.m);
        std::vector<std::pair<VertexId, EdgeWeight>> rows;
        for (std::size_t u = 0; u < g.n; ++u) {
          auto row = testutil::sortedRow(g, static_cast<VertexId>(u));
          rows.insert(rows.end(), row.begin(), row.end());
        }
        allRows.push_back(std::move(rows));
      }
    }
    omp_set_num_threads(savedThreads);
    for (std::size_t i = 1; i < allOffsets.size(); ++i) {
      CHECK(allOffsets[i] == allOffsets[0]);
      CHECK(allM[i] == allM[0]);
      CHECK(allRows[i] == allRows[0]);
    }
  }
  (void)synth;
}

TEST_CASE("writeMtx round-trips through loadGraph") {
  std::string text =
      "%%MatrixMarket matrix coordinate real general\n5 5 6\n"
      "1 2 0.5\n2 3 1.25\n3 1 -4\n4 5 3e3\n5 5 1\n1 5 2.75\n";
  CsrGraph g = loadGraph(text);
  std::ostringstream out;
  writeMtx(g, out);
  CsrGraph h = loadGraph(out.str());
  REQUIRE(g.n == h.n);
  REQUIRE(g.m == h.m);
  for (std::size_t u = 0; u < g.n; ++u)
    CHECK(testutil::sortedRow(g, static_cast<VertexId>(u)) ==
          testutil::sortedRow(h, static_cast<VertexId>(u)));
}
