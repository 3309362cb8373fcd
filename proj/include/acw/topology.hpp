#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "acw/kernel.hpp"
#include "acw/moves.hpp"
#include "acw/presentation.hpp"

namespace acw {

// The identity component of the move graph, restricted to presentations
// connected to <x,y | x,y> through states of length <= lmax. Vertices are
// relator sets (canonical forms); the vertex filtration is the presentation
// length and an edge's level is the larger endpoint filtration.
struct FilteredGraph {
  std::vector<PackedState> vertices;  // canonical key per id
  std::vector<uint8_t> filt;          // presentation length per id
  // edges_by_level[l] holds deduplicated unordered pairs (id, id) whose
  // larger endpoint filtration is l.
  std::vector<std::vector<std::pair<uint32_t, uint32_t>>> edges_by_level;
  uint32_t base = 0;
  int lmax = 0;
  MoveSet set = MoveSet::kPrime;

  uint64_t edge_count() const {
    uint64_t n = 0;
    for (const auto& b : edges_by_level) n += b.size();
    return n;
  }
};

// Chunked breadth-first enumeration with OpenMP-parallel expansion.
FilteredGraph enumerate_identity_component(int lmax, MoveSet set,
                                           int threads = 0);
// Single-threaded FIFO reference; kept as the test oracle for the parallel
// kernel. Produces the same vertex set, filtrations and edge set (ids may be
// numbered differently).
FilteredGraph enumerate_identity_component_serial(int lmax, MoveSet set);

inline constexpr int kConnInfinity = INT32_MAX;

// Minimax connection level to the base vertex per id (kConnInfinity when
// unreachable): a level-ordered union-find sweep.
std::vector<int> connectivity_values(const FilteredGraph& g);

struct ComponentRecord {
  int conn = 0;        // connectivity value shared by the members: the level
                       // at which their component reaches the base, and the
                       // first table row the record counts toward
  int death = 0;       // level at which the cluster's own bar closes; equals
                       // conn unless the cluster first merged a sibling
  int birth = 0;       // min member filtration
  uint64_t members = 0;
  int isolation = 0;   // bar length death - birth, >= 1
};

// Reduced persistent-H0 bars under the elder rule. A cluster dying into a
// sibling (rather than into the base component) closes its bar at the merge
// level but only exists in the subgraphs that contain its vertices, so it is
// indexed by their connectivity value. Zero-length bars are dropped.
std::vector<ComponentRecord> isolated_components(const FilteredGraph& g,
                                                 const std::vector<int>& conn);

// Verbatim alternative: vertices with conn > filt grouped by (conn,
// connectivity class one level below conn). Non-base clusters that merge
// each other before reaching the base form one record here but several bars
// above.
std::vector<ComponentRecord> isolated_components_literal(
    const FilteredGraph& g, const std::vector<int>& conn);

struct TableRow {
  int l = 0;
  uint64_t v = 0;
  uint64_t e = 0;
  uint64_t ic1 = 0;
  uint64_t ic2 = 0;
  uint64_t ic3 = 0;
};

// Cumulative rows for l = 3..lmax: vertex/edge counts of the full subgraph
// on {conn <= l} and isolated-component counts by isolation value.
std::vector<TableRow> persistence_table(const FilteredGraph& g);
std::vector<TableRow> persistence_table(int lmax, MoveSet set, int threads = 0);

// Binary graph dump: vertices.bin of (id, length) and edges.bin of
// (id, id, level), little-endian uint32 fields.
void dump_graph(const FilteredGraph& g, const std::string& dir);
FilteredGraph load_graph(const std::string& dir);

}  // namespace acw
