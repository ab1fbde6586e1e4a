#include "dcjperm/oracle.hpp"

#include <set>

#include <doctest.h>

#include "dcjperm/dcj.hpp"
#include "testutil.hpp"

using namespace dcjperm;
using testutil::genome_of;
using testutil::uniform_int;

namespace {

const Genome kConjA = genome_of(6, {{1, 2}, {3, 4}, {5, 6}});
const Genome kConjB = genome_of(6, {{1, 6}, {2, 3}, {4, 5}});
const Genome kMixedA = genome_of(8, {{1, 6}, {2, 3}, {4, 5}, {7, 8}});
const Genome kMixedB = genome_of(8, {{1, 2}, {3, 4}, {5, 6}});
const Genome kFigure =
    genome_of(12, {{2, 5}, {3, 6}, {4, 7}, {9, 12}, {10, 11}});

}  // namespace

TEST_CASE("breadth-first search distances") {
  CHECK(bfs_distance(kConjA, kConjA) == 0);
  CHECK(bfs_distance(Genome(Permutation::identity(2)),
                     genome_of(2, {{1, 2}})) == 1);
  CHECK(bfs_distance(kConjA, kConjB) == 2);
  CHECK(bfs_distance(kMixedA, kMixedB) == 3);
  CHECK_THROWS_AS(bfs_distance(kConjA, kMixedA), SizeMismatch);
  CHECK_THROWS_AS(bfs_distance(Genome(Permutation::identity(12)), kFigure),
                  TooLargeError);
}

TEST_CASE("breadth-first search reaches the whole genome space") {
  const auto map2 = bfs_distance_map(genome_of(4, {{1, 2}}));
  CHECK(map2.size() == 10);
  CHECK(map2.at(Permutation::from_cycles(4, {{1, 2}})) == 0);

  for (int n = 0; n <= 3; ++n) {
    const auto map = bfs_distance_map(Genome(Permutation::identity(2 * n)));
    CHECK(BigInt(map.size()) == count_genomes(n));
    for (const auto& [perm, d] : map) CHECK(d <= n);
  }

  // No genome on three regions is more than three operations from any other.
  std::mt19937_64 rng(40);
  for (int trial = 0; trial < 5; ++trial) {
    const auto map = bfs_distance_map(random_genome(3, rng()));
    CHECK(map.size() == 76);
    for (const auto& [perm, d] : map) CHECK(d <= 3);
  }
}

TEST_CASE("adjacency graph statistics") {
  SUBCASE("a genome against itself") {
    const AdjacencyGraphStats self = adjacency_graph(kFigure, kFigure);
    CHECK(self.cycles == 5);
    CHECK(self.odd_paths == 2);
    CHECK(self.even_paths == 0);
    CHECK(adjacency_distance(kFigure, kFigure) == 0);
  }
  SUBCASE("single-component example") {
    const AdjacencyGraphStats stats = adjacency_graph(kConjA, kConjB);
    CHECK(stats.cycles == 1);
    CHECK(stats.odd_paths == 0);
    CHECK(stats.even_paths == 0);
    CHECK(adjacency_distance(kConjA, kConjB) == 2);
  }
  SUBCASE("mixed example") {
    const AdjacencyGraphStats stats = adjacency_graph(kMixedA, kMixedB);
    CHECK(stats.cycles == 1);
    CHECK(stats.odd_paths == 0);
    CHECK(stats.even_paths == 1);
    CHECK(adjacency_distance(kMixedA, kMixedB) == 3);
  }
}

TEST_CASE("odd path counts are even") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = uniform_int(rng, 1, 12);
    const Genome a = random_genome(n, rng());
    const Genome b = random_genome(n, rng());
    CHECK(adjacency_graph(a, b).odd_paths % 2 == 0);
  }
}

TEST_CASE("adjacency distance matches the closed form up to fifty regions") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = uniform_int(rng, 1, 50);
    const Genome a = random_genome(n, rng());
    const Genome b = random_genome(n, rng());
    CHECK(adjacency_distance(a, b) == distance_total(a, b));
  }
}

TEST_CASE("adjacency distance matches the closed form beyond the search guard") {
  std::mt19937_64 rng(45);
  for (int trial = 0; trial < 10000; ++trial) {
    const int n = uniform_int(rng, 6, 8);
    const Genome a = random_genome(n, rng());
    const Genome b = random_genome(n, rng());
    CHECK(adjacency_distance(a, b) == distance_total(a, b));
  }
}

TEST_CASE("vertex sets round-trip through genomes") {
  const VertexSet parts = vertex_set(kFigure);
  CHECK(parts.size() == 7);
  CHECK(parts.contains({1}));
  CHECK(parts.contains({2, 5}));
  CHECK(genome_from_vertex_set(parts) == kFigure);

  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    const Genome g = random_genome(uniform_int(rng, 1, 8), rng());
    CHECK(genome_from_vertex_set(vertex_set(g)) == g);
  }

  CHECK_THROWS_AS(genome_from_vertex_set(VertexSet{{1, 2, 3}}), SpecError);
  CHECK_THROWS_AS(genome_from_vertex_set(VertexSet{{1}, {3, 4}}), SpecError);
}

TEST_CASE("set-level DCJ rewrites") {
  CHECK(graph_dcj_apply(VertexSet{{1, 3}, {2, 4}}, 1, 2) ==
        VertexSet{{2, 3}, {1, 4}});
  CHECK(graph_dcj_apply(VertexSet{{1, 2}}, 1, 2) == VertexSet{{1}, {2}});
  CHECK(graph_dcj_apply(VertexSet{{1}, {2}}, 1, 2) == VertexSet{{1, 2}});
  CHECK(graph_dcj_apply(VertexSet{{1, 2}, {3}}, 2, 3) ==
        VertexSet{{1, 3}, {2}});
  CHECK_THROWS_AS(graph_dcj_apply(VertexSet{{1, 2}}, 1, 1), SamePointError);
  CHECK_THROWS_AS(graph_dcj_apply(VertexSet{{1, 2}}, 1, 9), RangeError);
}

TEST_CASE("set-level and permutation-level DCJ commute") {
  for (const Genome& g : enumerate_genomes(2)) {
    for (Point i = 1; i <= 4; ++i)
      for (Point j = i + 1; j <= 4; ++j)
        CHECK(genome_from_vertex_set(graph_dcj_apply(vertex_set(g), i, j)) ==
              apply_dcj(g, i, j).genome);
  }
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = uniform_int(rng, 1, 5);
    const Genome g = random_genome(n, rng());
    const Point i = uniform_int(rng, 1, 2 * n);
    Point j = uniform_int(rng, 1, 2 * n - 1);
    if (j >= i) ++j;
    CHECK(genome_from_vertex_set(graph_dcj_apply(vertex_set(g), i, j)) ==
          apply_dcj(g, i, j).genome);
  }
}

TEST_CASE("the three distance computations agree on a sample") {
  const std::vector<Genome> space = enumerate_genomes(3);
  for (std::size_t s = 0; s < space.size(); s += 15) {
    const auto map = bfs_distance_map(space[s]);
    for (const Genome& target : space) {
      const int bfs = map.at(target.perm());
      CHECK(bfs == distance_total(space[s], target));
      CHECK(bfs == adjacency_distance(space[s], target));
    }
  }
}
