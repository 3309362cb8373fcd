#include "acw/neighborhoods.hpp"

#include <omp.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "acw/kernel.hpp"

namespace acw {
namespace {

// Words here can outgrow the packable range (lengths are unbounded), so the
// visited key is the serialized canonical form: r_first, 0xff, r_second.
std::string canonical_key(const Presentation& p) {
  CanonicalForm c = canonicalize(p);
  std::string key;
  key.reserve(c.first.size() + c.second.size() + 1);
  key.append(c.first);
  key.push_back(static_cast<char>(0xff));
  key.append(c.second);
  return key;
}

Presentation from_key(const std::string& key) {
  size_t sep = key.find(static_cast<char>(0xff));
  return Presentation{key.substr(0, sep), key.substr(sep + 1)};
}

std::vector<std::string> neighborhood_keys(const Presentation& p, int k,
                                           MoveSet set) {
  if (k < 0) throw std::invalid_argument("k must be >= 0");
  CanonicalForm seed = canonicalize(p);
  std::unordered_set<std::string> visited;
  std::vector<std::string> order;
  order.push_back(canonical_key(as_presentation(seed)));
  visited.insert(order[0]);
  size_t frontier_begin = 0;
  for (int depth = 0; depth < k; ++depth) {
    size_t frontier_end = order.size();
    for (size_t i = frontier_begin; i < frontier_end; ++i) {
      Presentation u = from_key(order[i]);
      for (int m = 1; m <= kNumMoves; ++m) {
        Presentation v = apply_move(u, MoveId{set, m});
        std::string key = canonical_key(v);
        if (visited.insert(key).second) order.push_back(std::move(key));
      }
    }
    frontier_begin = frontier_end;
  }
  return order;
}

}  // namespace

std::vector<CanonicalForm> k_neighborhood(const Presentation& p, int k,
                                          MoveSet set) {
  std::vector<CanonicalForm> out;
  for (const std::string& key : neighborhood_keys(p, k, set)) {
    Presentation q = from_key(key);
    out.push_back(CanonicalForm{q.r1, q.r2});
  }
  return out;
}

uint64_t k_neighborhood_size(const Presentation& p, int k, MoveSet set) {
  return neighborhood_keys(p, k, set).size();
}

std::vector<uint64_t> neighborhood_sizes(const std::vector<Presentation>& seeds,
                                         int k, MoveSet set, int threads) {
  std::vector<uint64_t> sizes(seeds.size());
  if (threads <= 0) threads = omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (size_t i = 0; i < seeds.size(); ++i) {
    sizes[i] = k_neighborhood_size(seeds[i], k, set);
  }
  return sizes;
}

NeighborhoodStats neighborhood_stats(std::vector<uint64_t> sizes) {
  if (sizes.empty()) throw std::invalid_argument("no sizes");
  NeighborhoodStats st;
  st.sizes = sizes;
  std::vector<uint64_t> sorted = std::move(sizes);
  std::sort(sorted.begin(), sorted.end());
  st.min = sorted.front();
  st.max = sorted.back();
  double sum = 0;
  for (uint64_t s : sorted) sum += static_cast<double>(s);
  st.mean = sum / static_cast<double>(sorted.size());
  st.median = sorted[sorted.size() / 2];
  st.distinct =
      static_cast<uint64_t>(std::set<uint64_t>(sorted.begin(), sorted.end()).size());
  return st;
}

std::vector<uint64_t> NeighborhoodStats::histogram(int bins) const {
  std::vector<uint64_t> h(static_cast<size_t>(bins), 0);
  double lo = static_cast<double>(min);
  double width = (static_cast<double>(max) - lo) / bins;
  for (uint64_t s : sizes) {
    int b = width > 0 ? static_cast<int>((static_cast<double>(s) - lo) / width)
                      : 0;
    b = std::clamp(b, 0, bins - 1);
    h[static_cast<size_t>(b)]++;
  }
  return h;
}

LabeledReport band_report(
    const std::vector<uint64_t>& sizes, const std::vector<bool>& labels,
    const std::vector<std::pair<uint64_t, uint64_t>>& bands) {
  if (sizes.size() != labels.size()) {
    throw std::invalid_argument("labels must cover the dataset");
  }
  LabeledReport rep;
  for (const auto& b : bands) rep.bands.push_back(BandReport{b, 0, 0});
  uint64_t solved_outside = 0, unsolved_inside = 0;
  for (size_t i = 0; i < sizes.size(); ++i) {
    bool solved = labels[i];
    (solved ? rep.solved_total : rep.unsolved_total)++;
    bool inside_any = false;
    for (auto& band : rep.bands) {
      if (sizes[i] >= band.band.first && sizes[i] <= band.band.second) {
        (solved ? band.solved_inside : band.unsolved_inside)++;
        inside_any = true;
      }
    }
    if (solved && !inside_any) solved_outside++;
    if (!solved && inside_any) unsolved_inside++;
  }
  if (rep.solved_total > 0) {
    rep.solved_outside_fraction =
        static_cast<double>(solved_outside) / static_cast<double>(rep.solved_total);
  }
  if (rep.unsolved_total > 0) {
    rep.unsolved_inside_fraction = static_cast<double>(unsolved_inside) /
                                   static_cast<double>(rep.unsolved_total);
  }
  return rep;
}

}  // namespace acw
