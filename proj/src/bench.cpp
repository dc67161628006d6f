#include "mimgraph/bench.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <random>

#include <fmt/format.h>

#include "mimgraph/router.hpp"

namespace mimgraph {

namespace {

constexpr int kCols = 5;
constexpr int kRows = 4;
constexpr double kPitchX = 200.0;
constexpr double kPitchY = 160.0;
constexpr double kJitter = 30.0;

std::string species_id(int i) { return fmt::format("s{:02}", i); }

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : (v[m - 1] + v[m]) / 2.0;
}

}  // namespace

SceneMap bench_scene(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> jitter(-kJitter, kJitter);
  SceneMap map;
  map.meta().name = "bench";
  for (int r = 0; r < kRows; ++r) {
    for (int c = 0; c < kCols; ++c) {
      SpeciesNode n;
      n.id = species_id(r * kCols + c);
      n.label = n.id;
      n.position = {c * kPitchX + jitter(rng), r * kPitchY + jitter(rng)};
      map.add_species(std::move(n));
    }
  }
  std::uniform_int_distribution<int> pick(0, kCols * kRows - 1);
  while (map.edges().size() < 10) {
    const int a = pick(rng);
    const int b = pick(rng);
    if (a == b) continue;
    try {
      map.add_interaction(Glyph::covalent_modification, SpeciesAnchor{species_id(a), std::nullopt, 0.5},
                          SpeciesAnchor{species_id(b), std::nullopt, 0.5});
    } catch (const Error&) {
      // Coincident anchor points; draw another pair.
    }
  }
  return map;
}

std::vector<BenchRow> run_bench(const std::vector<int>& grids, int trials, std::uint64_t seed) {
  const SceneMap scene = bench_scene(seed);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_int_distribution<int> pick(0, kCols * kRows - 1);

  std::vector<BenchRow> rows(grids.size());
  for (std::size_t i = 0; i < grids.size(); ++i) rows[i].grid_n = grids[i];

  for (int t = 0; t < trials; ++t) {
    int a = pick(rng);
    int b = pick(rng);
    while (b == a) b = pick(rng);
    const Anchor from = SpeciesAnchor{species_id(a), std::nullopt, 0.5};
    const Anchor to = SpeciesAnchor{species_id(b), std::nullopt, 0.5};
    for (BenchRow& row : rows) {
      RouteOptions options;
      options.grid_n = row.grid_n;
      const auto start = std::chrono::steady_clock::now();
      const RouteResult r = route(scene, from, to, options);
      const auto stop = std::chrono::steady_clock::now();
      (void)r;
      row.micros.push_back(std::chrono::duration<double, std::micro>(stop - start).count());
    }
  }
  for (BenchRow& row : rows) {
    if (!row.micros.empty()) row.median_micros = median(row.micros);
  }
  return rows;
}

void write_bench_table(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << fmt::format("{:>6} {:>6} {:>7} {:>12}\n", "grid", "nodes", "trials", "median_us");
  for (const BenchRow& row : rows) {
    out << fmt::format("{:>6} {:>6} {:>7} {:>12.1f}\n", row.grid_n, row.grid_n * row.grid_n,
                       row.micros.size(), row.median_micros);
  }
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << "grid_n,trial,micros\n";
  for (const BenchRow& row : rows) {
    for (std::size_t t = 0; t < row.micros.size(); ++t) {
      out << fmt::format("{},{},{:.3f}\n", row.grid_n, t, row.micros[t]);
    }
  }
}

}  // namespace mimgraph
