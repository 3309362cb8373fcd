#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "acw/moves.hpp"
#include "acw/presentation.hpp"

namespace acw {

// Relator-set states reachable from p by at most k moves, unbounded relator
// lengths, including p itself. The seed is canonicalized before the sweep.
std::vector<CanonicalForm> k_neighborhood(const Presentation& p, int k,
                                          MoveSet set = MoveSet::kPrime);
uint64_t k_neighborhood_size(const Presentation& p, int k,
                             MoveSet set = MoveSet::kPrime);

// Sizes for a whole dataset, parallel across seeds.
std::vector<uint64_t> neighborhood_sizes(const std::vector<Presentation>& seeds,
                                         int k, MoveSet set = MoveSet::kPrime,
                                         int threads = 0);

struct NeighborhoodStats {
  uint64_t min = 0;
  uint64_t max = 0;
  double mean = 0.0;
  uint64_t median = 0;
  uint64_t distinct = 0;
  // histogram over [min, max] split into `bins` equal-width bins
  std::vector<uint64_t> histogram(int bins) const;
  std::vector<uint64_t> sizes;  // in seed order
};

NeighborhoodStats neighborhood_stats(std::vector<uint64_t> sizes);

struct BandReport {
  std::pair<uint64_t, uint64_t> band;
  uint64_t solved_inside = 0;
  uint64_t unsolved_inside = 0;
};

struct LabeledReport {
  uint64_t solved_total = 0;
  uint64_t unsolved_total = 0;
  std::vector<BandReport> bands;
  double solved_outside_fraction = 0.0;    // share of solved outside all bands
  double unsolved_inside_fraction = 0.0;   // share of unsolved inside some band
};

// labels[i]: true = solved. Bands default to the three reported unsolved
// concentration bands.
LabeledReport band_report(
    const std::vector<uint64_t>& sizes, const std::vector<bool>& labels,
    const std::vector<std::pair<uint64_t, uint64_t>>& bands = {
        {89575, 89575}, {89715, 89831}, {89844, 89872}});

}  // namespace acw
