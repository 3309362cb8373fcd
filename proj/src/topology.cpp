#include "acw/topology.hpp"

#include <omp.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <queue>
#include <stdexcept>
#include <unordered_map>

namespace acw {
namespace {

FixedPres base_presentation() {
  FixedPres s;
  s.r[0].len = 1;
  s.r[0].a[0] = kLx;
  s.r[1].len = 1;
  s.r[1].a[0] = kLy;
  return s;
}

// Children of u under all 12 moves, bounded by presentation length lmax,
// deduplicated within the expansion, self-loops dropped.
struct Child {
  PackedState key;
  uint8_t len;
};

int expand(const FixedPres& u, MoveSet set, int lmax, PackedState self,
           Child out[kNumMoves]) {
  FixedWord scratch;
  int n = 0;
  for (int i = 1; i <= kNumMoves; ++i) {
    FixedPres v = u;
    apply_move_fixed(v, MoveId{set, i}, scratch);
    int len = fixed_length(v);
    if (len > lmax) continue;
    PackedState key = pack_canonical(v);
    if (key == self) continue;
    bool dup = false;
    for (int j = 0; j < n && !dup; ++j) dup = out[j].key == key;
    if (dup) continue;
    out[n].key = key;
    out[n].len = static_cast<uint8_t>(len);
    ++n;
  }
  return n;
}

struct UnionFind {
  std::vector<uint32_t> parent;

  explicit UnionFind(size_t n) : parent(n) {
    for (size_t i = 0; i < n; ++i) parent[i] = static_cast<uint32_t>(i);
  }

  uint32_t find(uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  void unite(uint32_t a, uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[a] = b;
  }
};

// An edge exists when some move maps one endpoint to the other; classical
// concatenations are one-directional, so every expansion emits its pairs and
// duplicates are removed per level bucket afterwards.
void dedup_edges(FilteredGraph& g) {
  for (auto& bucket : g.edges_by_level) {
    std::sort(bucket.begin(), bucket.end());
    bucket.erase(std::unique(bucket.begin(), bucket.end()), bucket.end());
    bucket.shrink_to_fit();
  }
}

}  // namespace

FilteredGraph enumerate_identity_component_serial(int lmax, MoveSet set) {
  if (lmax < 2) throw std::invalid_argument("lmax must be >= 2");
  FilteredGraph g;
  g.lmax = lmax;
  g.set = set;
  g.edges_by_level.resize(static_cast<size_t>(lmax) + 1);

  VisitedMap visited;
  FixedPres base = base_presentation();
  PackedState base_key = pack_canonical(base);
  visited.insert_or_get(base_key);
  g.vertices.push_back(base_key);
  g.filt.push_back(2);
  g.base = 0;

  std::queue<uint32_t> q;
  q.push(0);
  Child children[kNumMoves];
  while (!q.empty()) {
    uint32_t uid = q.front();
    q.pop();
    FixedPres u = unpack_state(g.vertices[uid]);
    int nc = expand(u, set, lmax, g.vertices[uid], children);
    for (int c = 0; c < nc; ++c) {
      auto [vid, inserted] = visited.insert_or_get(children[c].key);
      if (inserted) {
        g.vertices.push_back(children[c].key);
        g.filt.push_back(children[c].len);
        q.push(vid);
      }
      int level = std::max<int>(g.filt[uid], children[c].len);
      g.edges_by_level[static_cast<size_t>(level)].emplace_back(
          std::min(uid, vid), std::max(uid, vid));
    }
  }
  dedup_edges(g);
  return g;
}

FilteredGraph enumerate_identity_component(int lmax, MoveSet set, int threads) {
  if (lmax < 2) throw std::invalid_argument("lmax must be >= 2");
  if (threads <= 0) threads = omp_get_max_threads();
  FilteredGraph g;
  g.lmax = lmax;
  g.set = set;
  g.edges_by_level.resize(static_cast<size_t>(lmax) + 1);

  VisitedMap visited;
  FixedPres base = base_presentation();
  PackedState base_key = pack_canonical(base);
  visited.insert_or_get(base_key);
  g.vertices.push_back(base_key);
  g.filt.push_back(2);
  g.base = 0;

  struct Emit {
    uint32_t uid;
    Child child;
  };
  std::vector<std::vector<Emit>> local(static_cast<size_t>(threads));

  // The frontier is simply the id sequence: every inserted vertex is expanded
  // exactly once, in chunks large enough to keep all threads busy.
  constexpr size_t kChunk = 1 << 15;
  size_t next = 0;
  while (next < g.vertices.size()) {
    size_t hi = std::min(g.vertices.size(), next + kChunk);
#pragma omp parallel num_threads(threads)
    {
      int t = omp_get_thread_num();
      auto& out = local[static_cast<size_t>(t)];
      out.clear();
      Child children[kNumMoves];
#pragma omp for schedule(dynamic, 64)
      for (size_t i = next; i < hi; ++i) {
        FixedPres u = unpack_state(g.vertices[i]);
        int nc = expand(u, set, lmax, g.vertices[i], children);
        for (int c = 0; c < nc; ++c) {
          out.push_back(Emit{static_cast<uint32_t>(i), children[c]});
        }
      }
    }
    for (auto& out : local) {
      for (const Emit& e : out) {
        auto [vid, inserted] = visited.insert_or_get(e.child.key);
        if (inserted) {
          g.vertices.push_back(e.child.key);
          g.filt.push_back(e.child.len);
        }
        int level = std::max<int>(g.filt[e.uid], e.child.len);
        g.edges_by_level[static_cast<size_t>(level)].emplace_back(
            std::min(e.uid, vid), std::max(e.uid, vid));
      }
    }
    next = hi;
  }
  dedup_edges(g);
  return g;
}

std::vector<int> connectivity_values(const FilteredGraph& g) {
  std::vector<int> conn(g.vertices.size(), kConnInfinity);
  UnionFind uf(g.vertices.size());
  // Vertices not yet connected to the base, compacted as they resolve.
  std::vector<uint32_t> pending;
  pending.reserve(g.vertices.size());
  for (uint32_t v = 0; v < g.vertices.size(); ++v) {
    if (v != g.base) pending.push_back(v);
  }
  conn[g.base] = g.filt[g.base];

  for (int level = 0; level < static_cast<int>(g.edges_by_level.size());
       ++level) {
    for (auto [a, b] : g.edges_by_level[static_cast<size_t>(level)]) {
      uf.unite(a, b);
    }
    uint32_t broot = uf.find(g.base);
    size_t keep = 0;
    for (size_t i = 0; i < pending.size(); ++i) {
      uint32_t v = pending[i];
      if (g.filt[v] <= level && uf.find(v) == broot) {
        conn[v] = level;
      } else {
        pending[keep++] = v;
      }
    }
    pending.resize(keep);
  }
  return conn;
}

std::vector<ComponentRecord> isolated_components(const FilteredGraph& g,
                                                 const std::vector<int>& conn) {
  // Reduced persistent-H0 bars with the elder rule: every cluster is born at
  // its earliest vertex filtration; when two clusters join, the younger one
  // dies (the base cluster always survives) and leaves a bar from its birth
  // to the joining level. Zero-length bars are not isolated and are dropped.
  // The record's conn is the connectivity value of the cluster members; a
  // sibling-merge bar first appears in the subgraph of that level.
  std::vector<uint32_t> parent(g.vertices.size());
  std::vector<int> birth(g.vertices.size());
  std::vector<uint64_t> size(g.vertices.size(), 1);
  for (uint32_t v = 0; v < g.vertices.size(); ++v) {
    parent[v] = v;
    birth[v] = g.filt[v];
  }
  auto find = [&](uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };

  std::vector<ComponentRecord> records;
  for (int level = 0; level < static_cast<int>(g.edges_by_level.size());
       ++level) {
    for (auto [a, b] : g.edges_by_level[static_cast<size_t>(level)]) {
      uint32_t ra = find(a), rb = find(b);
      if (ra == rb) continue;
      uint32_t rbase = find(g.base);
      uint32_t survivor, dying;
      if (ra == rbase || (rb != rbase && birth[ra] <= birth[rb])) {
        survivor = ra;
        dying = rb;
      } else {
        survivor = rb;
        dying = ra;
      }
      if (level - birth[dying] >= 1) {
        records.push_back(ComponentRecord{conn[dying], level, birth[dying],
                                          size[dying], level - birth[dying]});
      }
      parent[dying] = survivor;
      size[survivor] += size[dying];
    }
  }
  std::sort(records.begin(), records.end(), [](const auto& a, const auto& b) {
    if (a.conn != b.conn) return a.conn < b.conn;
    return a.birth < b.birth;
  });
  return records;
}

std::vector<ComponentRecord> isolated_components_literal(
    const FilteredGraph& g, const std::vector<int>& conn) {
  // The verbatim grouping: vertices with conn > filt, bucketed by their
  // connectivity value and joined one level below it. Differs from the bar
  // decomposition when non-base clusters merge each other before reaching
  // the base.
  int max_level = static_cast<int>(g.edges_by_level.size());
  std::vector<std::vector<uint32_t>> by_conn(static_cast<size_t>(max_level) + 1);
  for (uint32_t v = 0; v < g.vertices.size(); ++v) {
    if (conn[v] == kConnInfinity || conn[v] <= g.filt[v]) continue;
    if (conn[v] <= max_level) by_conn[static_cast<size_t>(conn[v])].push_back(v);
  }

  std::vector<ComponentRecord> records;
  UnionFind uf(g.vertices.size());
  for (int level = 0; level <= max_level; ++level) {
    // State currently reflects levels < level: group the vertices whose
    // connectivity value is exactly `level` by their component one step
    // below it.
    struct Acc {
      uint64_t members = 0;
      int birth = kConnInfinity;
    };
    std::unordered_map<uint32_t, Acc> groups;
    for (uint32_t v : by_conn[static_cast<size_t>(level)]) {
      Acc& a = groups[uf.find(v)];
      a.members++;
      a.birth = std::min(a.birth, static_cast<int>(g.filt[v]));
    }
    for (const auto& [root, acc] : groups) {
      records.push_back(ComponentRecord{level, level, acc.birth, acc.members,
                                        level - acc.birth});
    }
    if (level < static_cast<int>(g.edges_by_level.size())) {
      for (auto [a, b] : g.edges_by_level[static_cast<size_t>(level)]) {
        uf.unite(a, b);
      }
    }
  }
  std::sort(records.begin(), records.end(), [](const auto& a, const auto& b) {
    if (a.conn != b.conn) return a.conn < b.conn;
    return a.birth < b.birth;
  });
  return records;
}

std::vector<TableRow> persistence_table(const FilteredGraph& g) {
  std::vector<int> conn = connectivity_values(g);
  std::vector<ComponentRecord> comps = isolated_components(g, conn);

  std::vector<uint64_t> vhist(static_cast<size_t>(g.lmax) + 2, 0);
  for (uint32_t v = 0; v < g.vertices.size(); ++v) {
    if (conn[v] != kConnInfinity && conn[v] <= g.lmax) {
      vhist[static_cast<size_t>(conn[v])]++;
    }
  }
  std::vector<uint64_t> ehist(static_cast<size_t>(g.lmax) + 2, 0);
  for (const auto& bucket : g.edges_by_level) {
    for (auto [a, b] : bucket) {
      int lvl = std::max(conn[a], conn[b]);
      if (lvl != kConnInfinity && lvl <= g.lmax) {
        ehist[static_cast<size_t>(lvl)]++;
      }
    }
  }

  std::vector<TableRow> rows;
  uint64_t v_cum = vhist[0] + vhist[1] + vhist[2];
  uint64_t e_cum = ehist[0] + ehist[1] + ehist[2];
  for (int l = 3; l <= g.lmax; ++l) {
    v_cum += vhist[static_cast<size_t>(l)];
    e_cum += ehist[static_cast<size_t>(l)];
    TableRow row;
    row.l = l;
    row.v = v_cum;
    row.e = e_cum;
    for (const ComponentRecord& c : comps) {
      if (c.conn > l) continue;
      if (c.isolation == 1) row.ic1++;
      if (c.isolation == 2) row.ic2++;
      if (c.isolation == 3) row.ic3++;
    }
    rows.push_back(row);
  }
  return rows;
}

std::vector<TableRow> persistence_table(int lmax, MoveSet set, int threads) {
  FilteredGraph g = enumerate_identity_component(lmax, set, threads);
  return persistence_table(g);
}

void dump_graph(const FilteredGraph& g, const std::string& dir) {
  std::filesystem::create_directories(dir);
  auto write_u32 = [](std::ofstream& f, uint32_t x) {
    unsigned char b[4] = {static_cast<unsigned char>(x),
                          static_cast<unsigned char>(x >> 8),
                          static_cast<unsigned char>(x >> 16),
                          static_cast<unsigned char>(x >> 24)};
    f.write(reinterpret_cast<char*>(b), 4);
  };
  {
    std::ofstream f(dir + "/vertices.bin", std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + dir + "/vertices.bin");
    for (uint32_t v = 0; v < g.vertices.size(); ++v) {
      write_u32(f, v);
      write_u32(f, g.filt[v]);
    }
  }
  {
    std::ofstream f(dir + "/edges.bin", std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + dir + "/edges.bin");
    for (int level = 0; level < static_cast<int>(g.edges_by_level.size());
         ++level) {
      for (auto [a, b] : g.edges_by_level[static_cast<size_t>(level)]) {
        write_u32(f, a);
        write_u32(f, b);
        write_u32(f, static_cast<uint32_t>(level));
      }
    }
  }
}

FilteredGraph load_graph(const std::string& dir) {
  FilteredGraph g;
  auto read_all = [](const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path);
    return std::vector<unsigned char>(std::istreambuf_iterator<char>(f), {});
  };
  auto u32at = [](const std::vector<unsigned char>& b, size_t i) {
    return static_cast<uint32_t>(b[i]) | (static_cast<uint32_t>(b[i + 1]) << 8) |
           (static_cast<uint32_t>(b[i + 2]) << 16) |
           (static_cast<uint32_t>(b[i + 3]) << 24);
  };
  auto vbytes = read_all(dir + "/vertices.bin");
  if (vbytes.size() % 8 != 0) throw std::runtime_error("corrupt vertices.bin");
  size_t nverts = vbytes.size() / 8;
  g.vertices.resize(nverts);  // packed keys are not stored in the dump
  g.filt.resize(nverts);
  int max_filt = 2;
  for (size_t i = 0; i < nverts; ++i) {
    uint32_t id = u32at(vbytes, i * 8);
    uint32_t len = u32at(vbytes, i * 8 + 4);
    if (id >= nverts) throw std::runtime_error("corrupt vertices.bin");
    g.filt[id] = static_cast<uint8_t>(len);
    max_filt = std::max(max_filt, static_cast<int>(len));
  }
  auto ebytes = read_all(dir + "/edges.bin");
  if (ebytes.size() % 12 != 0) throw std::runtime_error("corrupt edges.bin");
  g.lmax = max_filt;
  g.edges_by_level.resize(static_cast<size_t>(max_filt) + 1);
  for (size_t i = 0; i + 12 <= ebytes.size(); i += 12) {
    uint32_t a = u32at(ebytes, i);
    uint32_t b = u32at(ebytes, i + 4);
    uint32_t level = u32at(ebytes, i + 8);
    if (a >= nverts || b >= nverts || level > static_cast<uint32_t>(max_filt)) {
      throw std::runtime_error("corrupt edges.bin");
    }
    g.edges_by_level[level].emplace_back(a, b);
  }
  g.base = 0;
  return g;
}

}  // namespace acw
