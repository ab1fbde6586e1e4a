#pragma once

#include <set>
#include <unordered_map>
#include <vector>

#include "dcjperm/genome.hpp"
#include "dcjperm/perm.hpp"

namespace dcjperm {

inline constexpr int kBfsRegionGuard = 5;

// Shortest number of DCJ operations from g1 to g2, by breadth-first search
// over the genome space. Guarded to n <= kBfsRegionGuard unless allow_large.
int bfs_distance(const Genome& g1, const Genome& g2, bool allow_large = false);

// Distances from source to every genome on the same regions.
std::unordered_map<Permutation, int> bfs_distance_map(const Genome& source,
                                                      bool allow_large = false);

struct AdjacencyGraphStats {
  int cycles = 0;
  int odd_paths = 0;
  int even_paths = 0;
};

// The bipartite multigraph on the adjacencies and telomeres of both genomes,
// one edge per shared extremity, decomposed into cycles and paths. Path
// length counts edges, so two genomes sharing a telomere contribute an odd
// path of length 1.
AdjacencyGraphStats adjacency_graph(const Genome& g1, const Genome& g2);

// n - (cycles + odd_paths/2).
int adjacency_distance(const Genome& g1, const Genome& g2);

// A genome as a partition of {1..2n} into adjacencies (pairs) and telomeres
// (singletons); each part is sorted.
using VertexSet = std::set<std::vector<Point>>;

VertexSet vertex_set(const Genome& g);
Genome genome_from_vertex_set(const VertexSet& v);

// The set-level DCJ rewrite: split the part {i,j}, merge the parts {i},{j},
// or swap i and j between their parts.
VertexSet graph_dcj_apply(const VertexSet& v, Point i, Point j);

}  // namespace dcjperm
