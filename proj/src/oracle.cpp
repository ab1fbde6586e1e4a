#include "dcjperm/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <string>

#include "dcjperm/dcj.hpp"

namespace dcjperm {

namespace {

void require_same_regions(const Genome& g1, const Genome& g2) {
  if (g1.degree() != g2.degree())
    throw SizeMismatch("genomes on " + std::to_string(g1.regions()) +
                       " and " + std::to_string(g2.regions()) +
                       " regions are not comparable");
}

void check_bfs_guard(const Genome& g, bool allow_large) {
  if (g.regions() > kBfsRegionGuard && !allow_large)
    throw TooLargeError("refusing breadth-first search over " +
                        std::to_string(g.regions()) +
                        " regions without the large-input override");
}

// Visits every genome reachable from source in breadth-first order; stops
// early once the visitor returns false.
template <typename Visit>
void bfs(const Genome& source, Visit&& visit) {
  const int degree = source.degree();
  std::unordered_map<Permutation, int> dist;
  dist.emplace(source.perm(), 0);
  std::deque<std::pair<Genome, int>> frontier{{source, 0}};
  if (!visit(source, 0)) return;
  while (!frontier.empty()) {
    const auto [current, d] = std::move(frontier.front());
    frontier.pop_front();
    for (Point i = 1; i <= degree; ++i) {
      for (Point j = i + 1; j <= degree; ++j) {
        Genome next = apply_dcj(current, i, j).genome;
        auto [it, inserted] = dist.emplace(next.perm(), d + 1);
        if (!inserted) continue;
        if (!visit(next, d + 1)) return;
        frontier.emplace_back(std::move(next), d + 1);
      }
    }
  }
}

}  // namespace

int bfs_distance(const Genome& g1, const Genome& g2, bool allow_large) {
  require_same_regions(g1, g2);
  check_bfs_guard(g1, allow_large);
  int found = -1;
  bfs(g1, [&](const Genome& g, int d) {
    if (g == g2) {
      found = d;
      return false;
    }
    return true;
  });
  assert(found >= 0);
  return found;
}

std::unordered_map<Permutation, int> bfs_distance_map(const Genome& source,
                                                      bool allow_large) {
  check_bfs_guard(source, allow_large);
  std::unordered_map<Permutation, int> map;
  bfs(source, [&](const Genome& g, int d) {
    map.emplace(g.perm(), d);
    return true;
  });
  return map;
}

namespace {

// Nodes are the adjacencies and telomeres of one genome; part_of[x] gives
// the node holding extremity x.
std::vector<int> label_parts(const Permutation& pi, int& node_count) {
  std::vector<int> part_of(static_cast<std::size_t>(pi.degree()) + 1, -1);
  for (Point x = 1; x <= pi.degree(); ++x) {
    if (part_of[x] >= 0) continue;
    part_of[x] = node_count;
    if (pi(x) != x) part_of[pi(x)] = node_count;
    ++node_count;
  }
  return part_of;
}

}  // namespace

AdjacencyGraphStats adjacency_graph(const Genome& g1, const Genome& g2) {
  require_same_regions(g1, g2);
  const int degree = g1.degree();

  int node_count = 0;
  const std::vector<int> part1 = label_parts(g1.perm(), node_count);
  const std::vector<int> part2 = label_parts(g2.perm(), node_count);

  // One edge per extremity, joining the two parts that contain it.
  struct Edge {
    int u;
    int v;
  };
  std::vector<Edge> edges;
  std::vector<std::vector<int>> incident(node_count);
  for (Point x = 1; x <= degree; ++x) {
    const int u = part1[x];
    const int v = part2[x];
    incident[u].push_back(static_cast<int>(edges.size()));
    incident[v].push_back(static_cast<int>(edges.size()));
    edges.push_back({u, v});
  }

  std::vector<char> used(edges.size(), 0);
  const auto walk_from = [&](int node) {
    // Follows unused edges until none remain at the current node; every
    // node has degree at most 2, so the trail never branches.
    int length = 0;
    int at = node;
    for (;;) {
      int next_edge = -1;
      for (int e : incident[at])
        if (!used[e]) {
          next_edge = e;
          break;
        }
      if (next_edge < 0) return length;
      used[next_edge] = 1;
      ++length;
      at = edges[next_edge].u == at ? edges[next_edge].v : edges[next_edge].u;
    }
  };

  AdjacencyGraphStats stats;
  // Paths start at degree-1 nodes (telomeres).
  for (int node = 0; node < node_count; ++node) {
    if (incident[node].size() != 1 || used[incident[node].front()]) continue;
    const int length = walk_from(node);
    if (length % 2 == 1)
      ++stats.odd_paths;
    else
      ++stats.even_paths;
  }
  // Remaining edges close into cycles.
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (used[e]) continue;
    walk_from(edges[e].u);
    ++stats.cycles;
  }
  return stats;
}

int adjacency_distance(const Genome& g1, const Genome& g2) {
  const AdjacencyGraphStats stats = adjacency_graph(g1, g2);
  assert(stats.odd_paths % 2 == 0);
  return g1.regions() - stats.cycles - stats.odd_paths / 2;
}

VertexSet vertex_set(const Genome& g) {
  VertexSet parts;
  const Permutation& pi = g.perm();
  for (Point x = 1; x <= pi.degree(); ++x) {
    if (pi(x) == x)
      parts.insert({x});
    else if (x < pi(x))
      parts.insert({x, pi(x)});
  }
  return parts;
}

Genome genome_from_vertex_set(const VertexSet& v) {
  Point degree = 0;
  for (const std::vector<Point>& part : v)
    for (Point x : part) degree = std::max(degree, x);
  std::vector<Cycle> pairs;
  for (const std::vector<Point>& part : v) {
    if (part.empty() || part.size() > 2)
      throw SpecError("vertex set parts must hold one or two extremities");
    if (part.size() == 2) pairs.push_back({part[0], part[1]});
  }
  // from_cycles rejects repeated points; the Genome constructor rejects odd
  // degree, so a non-partition cannot slip through silently.
  Permutation pi = Permutation::from_cycles(degree, pairs);
  int covered = 0;
  for (const std::vector<Point>& part : v)
    covered += static_cast<int>(part.size());
  if (covered != degree)
    throw SpecError("vertex set does not cover 1.." + std::to_string(degree));
  return Genome(std::move(pi));
}

VertexSet graph_dcj_apply(const VertexSet& v, Point i, Point j) {
  if (i == j) throw SamePointError("DCJ targets must be distinct");
  const std::vector<Point>* part_i = nullptr;
  const std::vector<Point>* part_j = nullptr;
  for (const std::vector<Point>& part : v) {
    for (Point x : part) {
      if (x == i) part_i = &part;
      if (x == j) part_j = &part;
    }
  }
  if (part_i == nullptr || part_j == nullptr)
    throw RangeError("DCJ targets must be extremities of the genome");

  VertexSet out;
  if (part_i == part_j) {
    // Splitting an adjacency into two telomeres.
    for (const std::vector<Point>& part : v)
      if (&part != part_i) out.insert(part);
    out.insert({i});
    out.insert({j});
    return out;
  }
  if (part_i->size() == 1 && part_j->size() == 1) {
    // Fusing two telomeres into an adjacency.
    for (const std::vector<Point>& part : v)
      if (&part != part_i && &part != part_j) out.insert(part);
    out.insert({std::min(i, j), std::max(i, j)});
    return out;
  }
  // Swap i and j between their parts.
  for (const std::vector<Point>& part : v) {
    if (&part != part_i && &part != part_j) {
      out.insert(part);
      continue;
    }
    std::vector<Point> swapped;
    for (Point x : part) {
      if (x == i)
        swapped.push_back(j);
      else if (x == j)
        swapped.push_back(i);
      else
        swapped.push_back(x);
    }
    std::sort(swapped.begin(), swapped.end());
    out.insert(std::move(swapped));
  }
  return out;
}

}  // namespace dcjperm
