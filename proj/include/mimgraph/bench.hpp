#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "mimgraph/scene.hpp"

namespace mimgraph {

inline constexpr std::uint64_t kDefaultBenchSeed = 20051;

/// 20 species on a jittered 5 x 4 lattice joined by 10 routed reactions.
SceneMap bench_scene(std::uint64_t seed);

struct BenchRow {
  int grid_n = 0;
  double median_micros = 0.0;
  std::vector<double> micros;  // one sample per trial
};

/// Times `route` for `trials` random species pairs of the bench scene. Every
/// pair is routed once per grid size, sizes interleaved within a trial.
std::vector<BenchRow> run_bench(const std::vector<int>& grids, int trials, std::uint64_t seed);

void write_bench_table(std::ostream& out, const std::vector<BenchRow>& rows);
void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);

}  // namespace mimgraph
