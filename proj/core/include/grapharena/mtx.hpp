#pragma once
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "grapharena/csr.hpp"
#include "grapharena/types.hpp"

namespace grapharena {

/** Default size of the text chunk each thread parses at a time. */
inline constexpr std::size_t kDefaultBlockSize = 256 * 1024;
/** Default number of partitions used while scattering edges into the CSR. */
inline constexpr int kDefaultPartitions = 4;

/** Parsed MatrixMarket banner, comments and size line. */
struct MtxHeader {
  bool symmetric = false;
  bool weighted = false;
  std::uint64_t rows = 0;
  std::uint64_t cols = 0;
  std::uint64_t entries = 0;    // stored entries declared by the size line
  std::size_t headerLength = 0; // bytes consumed up to the first data line
};

/** Parse failure with the byte offset where the problem was found. */
class MtxParseError : public std::runtime_error {
 public:
  MtxParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/**
 * Parse the banner "%%MatrixMarket matrix coordinate <field> <symmetry>",
 * skip '%' comment lines, and read the "rows cols entries" size line.
 * Supported fields are pattern, real and integer; supported symmetries are
 * general and symmetric. Throws MtxParseError otherwise.
 */
MtxHeader readHeader(std::string_view data);

/**
 * Block [b, B) of data for grid position i with nominal width beta, adjusted
 * so no line is split: b moves forward to the next line start when it lands
 * mid-line, and B extends past the end of the line it lands in. Over the
 * grid i = 0, beta, 2*beta, ... every complete line lands in exactly one
 * block.
 * @returns begin and end byte offsets into data
 */
std::pair<std::size_t, std::size_t> getBlock(std::string_view data, std::size_t i, std::size_t beta);

/** Per-thread edge staging buffers filled while scanning the text body. */
struct ThreadEdgeBuffers {
  bool weighted = false;
  std::vector<std::vector<VertexId>> sources;    // [thread][i]
  std::vector<std::vector<VertexId>> targets;    // [thread][i]
  std::vector<std::vector<EdgeWeight>> weights;  // [thread][i], iff weighted
  std::vector<std::size_t> counts;               // edges recorded per thread

  ThreadEdgeBuffers() = default;
  /** Allocate buffers for `threads` threads of `edgeCapacity` edges each. */
  ThreadEdgeBuffers(int threads, std::size_t edgeCapacity, bool weighted);

  int threads() const noexcept { return static_cast<int>(counts.size()); }
};

/** Per-partition degree counters: pdegrees[p][u]. */
using PartitionDegrees = std::vector<std::vector<std::uint32_t>>;

/**
 * Per-partition CSR scratch. Partition 0 aliases the output graph's arrays,
 * so the merge step finalizes the result in place; partitions 1.. own their
 * backing storage here.
 */
struct PartitionedCsr {
  int rho = 1;
  std::vector<std::uint64_t*> poffsets;   // [p] -> n + 1 slots
  std::vector<VertexId*> pedgeKeys;       // [p] -> edge slots
  std::vector<EdgeWeight*> pedgeValues;   // [p] -> edge slots, iff weighted

  std::vector<std::vector<std::uint64_t>> offsetStore;
  std::vector<std::vector<VertexId>> keyStore;
  std::vector<std::vector<EdgeWeight>> valueStore;

  /** Wire partition 0 to the graph's arrays and allocate partitions 1..rho-1. */
  PartitionedCsr(CsrGraph& g, int rho, std::size_t vertexCount, std::size_t edgeCapacity);
};

/**
 * Scan the body text in blocks of beta bytes, parsing "u v [w]" records into
 * per-thread buffers with ids converted to zero-based. Unweighted files get
 * weight 1; symmetric files also record the reverse edge for u != v. Each
 * recorded edge bumps pdegrees[t mod rho][source] atomically.
 * @param bodyOffset offset of body within the whole file, for error reporting
 */
void readEdgelist(PartitionDegrees& pdegrees, ThreadEdgeBuffers& buffers, std::string_view body,
                  std::size_t bodyOffset, const MtxHeader& header, std::size_t beta, int rho);

/**
 * Turn the per-thread edge lists into the final CSR. Degrees of all
 * partitions are first accumulated into partition 0, per-partition offsets
 * are written shifted by one slot so they double as insertion cursors, each
 * thread scatters its edges into partition (thread mod rho), and partitions
 * 1.. are then merged per-vertex into partition 0, finalizing its offsets.
 * @returns total number of edges in the merged CSR
 */
std::size_t convertToCsr(PartitionedCsr& pcsr, PartitionDegrees& pdegrees,
                         const ThreadEdgeBuffers& buffers, std::size_t vertexCount, bool weighted);

/**
 * Load a MatrixMarket coordinate file, given as in-memory bytes, into a CSR
 * graph. Parallel over text blocks and vertices; the result is independent
 * of the thread count and partition count up to per-vertex edge order.
 */
CsrGraph loadGraph(std::string_view data, int rho = kDefaultPartitions,
                   std::size_t beta = kDefaultBlockSize);

/** Read a whole file into a string; throws std::runtime_error on failure. */
std::string readFile(const std::string& path);

/** Write a CSR graph as a MatrixMarket coordinate file (general, 1-based). */
void writeMtx(const CsrGraph& g, std::ostream& out);

}  // namespace grapharena
