#include "dcjperm/dcj.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <unordered_set>

namespace dcjperm {

std::string to_string(ComponentKind kind) {
  switch (kind) {
    case ComponentKind::trivial: return "trivial";
    case ComponentKind::conjugate: return "conjugate";
    case ComponentKind::non_conjugate: return "non_conjugate";
  }
  return "?";
}

std::string to_string(DcjMode mode) {
  return mode == DcjMode::multiply ? "multiply" : "conjugate";
}

DcjResult apply_dcj(const Genome& g, Point i, Point j) {
  const Permutation& pi = g.perm();
  const int degree = pi.degree();
  if (i < 1 || i > degree || j < 1 || j > degree)
    throw RangeError("DCJ targets must lie in 1.." + std::to_string(degree));
  if (i == j) throw SamePointError("DCJ targets must be distinct");

  const bool both_fixed = pi(i) == i && pi(j) == j;
  const DcjMode mode =
      both_fixed || pi(i) == j ? DcjMode::multiply : DcjMode::conjugate;
  const Permutation t = Permutation::transposition(degree, i, j);
  Permutation result = mode == DcjMode::multiply ? t * pi : t * pi * t;
  return {Genome(std::move(result)), {i, j, mode}};
}

namespace {

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int size) : parent(static_cast<std::size_t>(size) + 1) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Restriction of p to the given points, extended by fixed points elsewhere.
Permutation restrict_to(const Permutation& p, const std::vector<Point>& points) {
  std::vector<Cycle> kept;
  for (Point x : points)
    if (p(x) != x && x < p(x)) kept.push_back({x, p(x)});
  return Permutation::from_cycles(p.degree(), kept);
}

void require_same_regions(const Genome& g1, const Genome& g2) {
  if (g1.degree() != g2.degree())
    throw SizeMismatch("genomes on " + std::to_string(g1.regions()) +
                       " and " + std::to_string(g2.regions()) +
                       " regions are not comparable");
}

}  // namespace

ComponentPartition components(const Genome& g1, const Genome& g2) {
  require_same_regions(g1, g2);
  const Permutation& a = g1.perm();
  const Permutation& b = g2.perm();
  const int degree = a.degree();

  UnionFind uf(degree);
  for (Point x = 1; x <= degree; ++x) {
    uf.unite(x, a(x));
    uf.unite(x, b(x));
  }

  std::map<int, std::vector<Point>> classes;
  for (Point x = 1; x <= degree; ++x) classes[uf.find(x)].push_back(x);

  ComponentPartition partition;
  for (auto& [root, points] : classes) {
    Component c;
    c.points = std::move(points);
    c.sub1 = restrict_to(a, c.points);
    c.sub2 = restrict_to(b, c.points);
    for (Point x : c.points) {
      if (a(x) == x) c.fixed1.push_back(x);
      if (b(x) == x) c.fixed2.push_back(x);
    }
    if (c.sub1 == c.sub2) {
      c.kind = ComponentKind::trivial;
    } else if (c.fixed1.size() == c.fixed2.size()) {
      c.kind = ComponentKind::conjugate;
    } else {
      c.kind = ComponentKind::non_conjugate;
    }
    partition.classes.push_back(std::move(c));
  }
  std::sort(partition.classes.begin(), partition.classes.end(),
            [](const Component& lhs, const Component& rhs) {
              return lhs.points.front() < rhs.points.front();
            });
  return partition;
}

std::vector<Cycle> component_product(const Component& c) {
  const Permutation product = c.sub2 * c.sub1;
  std::vector<char> member(static_cast<std::size_t>(product.degree()) + 1, 0);
  for (Point x : c.points) member[x] = 1;
  std::vector<Cycle> cycles;
  for (Cycle& cycle : product.cycles())
    if (member[cycle.front()]) cycles.push_back(std::move(cycle));
  return cycles;
}

int component_distance(const Component& c) {
  if (c.kind == ComponentKind::trivial) return 0;
  const std::vector<Cycle> cycles = component_product(c);
  const int lt =
      static_cast<int>(c.points.size()) - static_cast<int>(cycles.size());
  return c.kind == ComponentKind::conjugate ? lt / 2 : (lt + 1) / 2;
}

namespace {

// Cycles of b*a that hold two distinct telomeres of the same genome; these
// are exactly the classes needing one extra non-conjugation step.
int special_cycle_count(const Permutation& a, const Permutation& b) {
  const Permutation product = b * a;
  int count = 0;
  for (const Cycle& cycle : product.cycles()) {
    int fixed_a = 0;
    int fixed_b = 0;
    for (Point x : cycle) {
      if (a(x) == x) ++fixed_a;
      if (b(x) == x) ++fixed_b;
    }
    if (fixed_a >= 2 || fixed_b >= 2) ++count;
  }
  return count;
}

}  // namespace

int distance_total(const Genome& g1, const Genome& g2) {
  require_same_regions(g1, g2);
  const Permutation product = g2.perm() * g1.perm();
  const int lt = product.transposition_length();
  const int nc = special_cycle_count(g1.perm(), g2.perm());
  assert((lt + nc) % 2 == 0);
  return (lt + nc) / 2;
}

DistanceReport distance(const Genome& g1, const Genome& g2) {
  const ComponentPartition partition = components(g1, g2);
  DistanceReport report;
  const Permutation product = g2.perm() * g1.perm();
  report.lt = product.transposition_length();
  report.nc = special_cycle_count(g1.perm(), g2.perm());
  report.total = (report.lt + report.nc) / 2;
  int sum = 0;
  for (std::size_t k = 0; k < partition.classes.size(); ++k) {
    const int d = component_distance(partition.classes[k]);
    report.per_component.emplace_back(static_cast<int>(k), d);
    sum += d;
  }
  assert(sum == report.total);
  return report;
}

namespace {

// The conjugating cycle sorting source into target on one class. When the
// class has no telomere the product splits into two cycles and either one
// works; we take the one through the smallest point. Otherwise the product
// is a single odd cycle and the element must run from target's telomere to
// source's telomere, so that the wrap-around carries one onto the other.
Cycle conjugating_cycle(const Permutation& source, const Permutation& target,
                        const std::vector<Point>& points) {
  const Permutation product = target * source;
  std::vector<Point> source_fixed;
  std::vector<Point> target_fixed;
  for (Point x : points) {
    if (source(x) == x) source_fixed.push_back(x);
    if (target(x) == x) target_fixed.push_back(x);
  }
  assert(source_fixed.size() == target_fixed.size());
  assert(source_fixed.size() <= 1);

  Cycle g;
  if (source_fixed.empty()) {
    std::vector<char> member(static_cast<std::size_t>(product.degree()) + 1, 0);
    for (Point x : points) member[x] = 1;
    for (Cycle& cycle : product.cycles()) {
      if (member[cycle.front()]) {
        g = std::move(cycle);
        break;
      }
    }
  } else {
    const int half = (static_cast<int>(points.size()) - 1) / 2;
    Point x = target_fixed.front();
    for (int k = 0; k <= half; ++k) {
      g.push_back(x);
      x = product(x);
    }
    // Canonical rotation: smallest point first.
    auto min_it = std::min_element(g.begin(), g.end());
    std::rotate(g.begin(), min_it, g.end());
  }
  assert(conjugate(source, Permutation::from_cycles(source.degree(), {g})) ==
         target);
  return g;
}

}  // namespace

Cycle sorting_element(const Component& c) {
  if (c.kind != ComponentKind::conjugate)
    throw NotConjugateError(
        "sorting element requires conjugate sub-permutations");
  return conjugating_cycle(c.sub1, c.sub2, c.points);
}

namespace {

void append_step(std::vector<ScenarioStep>& steps, Genome& current, Point i,
                 Point j, DcjMode expected) {
  DcjResult result = apply_dcj(current, i, j);
  assert(result.op.mode == expected);
  (void)expected;
  current = result.genome;
  steps.push_back({result.op, std::move(result.genome)});
}

// Conjugation steps carrying current's restriction onto target: the star
// factorization (a,p_u)...(a,p_1) of the conjugating cycle (a,p_1,...,p_u),
// applied right to left.
void append_conjugation_steps(std::vector<ScenarioStep>& steps,
                              Genome& current,
                              const Permutation& target,
                              const std::vector<Point>& points) {
  const Permutation source = restrict_to(current.perm(), points);
  if (source == target) return;
  const Cycle g = conjugating_cycle(source, target, points);
  for (std::size_t k = 1; k < g.size(); ++k)
    append_step(steps, current, g.front(), g[k], DcjMode::conjugate);
}

}  // namespace

Scenario optimal_scenario(const Genome& g1, const Genome& g2) {
  const ComponentPartition partition = components(g1, g2);
  Scenario scenario{g1, {}};
  Genome current = g1;
  for (const Component& c : partition.classes) {
    switch (c.kind) {
      case ComponentKind::trivial:
        break;
      case ComponentKind::conjugate:
        append_conjugation_steps(scenario.steps, current, c.sub2, c.points);
        break;
      case ComponentKind::non_conjugate:
        if (c.fixed1.size() == 2) {
          // Both telomeres in the current genome: fuse them first, then the
          // class is conjugate to its target.
          append_step(scenario.steps, current, c.fixed1[0], c.fixed1[1],
                      DcjMode::multiply);
          append_conjugation_steps(scenario.steps, current, c.sub2, c.points);
        } else {
          // Both telomeres in the target genome: sort towards the target
          // with the extra adjacency in place, then split it off last.
          const Point i = c.fixed2[0];
          const Point j = c.fixed2[1];
          const Permutation fused_target =
              Permutation::transposition(current.degree(), i, j) * c.sub2;
          append_conjugation_steps(scenario.steps, current, fused_target,
                                   c.points);
          append_step(scenario.steps, current, i, j, DcjMode::multiply);
        }
        break;
    }
  }
  assert(current == g2);
  return scenario;
}

BigInt count_optimal_scenarios(const Genome& g1, const Genome& g2) {
  require_same_regions(g1, g2);
  if (g1.perm().cycle_type() != g2.perm().cycle_type())
    throw ClosedFormUnavailable("genomes are not conjugate as permutations");
  const ComponentPartition partition = components(g1, g2);
  int non_trivial = 0;
  for (const Component& c : partition.classes)
    if (c.kind != ComponentKind::trivial) ++non_trivial;
  if (non_trivial != 1)
    throw ClosedFormUnavailable(
        "closed form requires exactly one non-trivial component, found " +
        std::to_string(non_trivial));
  const int d = distance_total(g1, g2);
  return boost::multiprecision::pow(BigInt(d + 1),
                                    static_cast<unsigned>(d - 1));
}

namespace {

struct ScenarioSearch {
  const Genome& target;
  std::size_t limit;
  std::vector<ScenarioStep> prefix;
  ScenarioEnumeration result;

  // Returns false once the limit is reached and enumeration must stop.
  bool visit(const Genome& current, int remaining) {
    if (remaining == 0) {
      if (result.scenarios.size() >= limit) {
        result.truncated = true;
        return false;
      }
      Scenario s;
      s.origin = target;  // placeholder, fixed up by caller
      s.steps = prefix;
      result.scenarios.push_back(std::move(s));
      return true;
    }
    // Distinct target pairs can produce the same genome; branch once per
    // resulting genome, recording the smallest pair.
    const int degree = current.degree();
    std::unordered_set<Permutation> seen;
    for (Point i = 1; i <= degree; ++i) {
      for (Point j = i + 1; j <= degree; ++j) {
        DcjResult next = apply_dcj(current, i, j);
        if (!seen.insert(next.genome.perm()).second) continue;
        if (distance_total(next.genome, target) != remaining - 1) continue;
        prefix.push_back({next.op, next.genome});
        const bool keep_going = visit(next.genome, remaining - 1);
        prefix.pop_back();
        if (!keep_going) return false;
      }
    }
    return true;
  }
};

}  // namespace

ScenarioEnumeration enumerate_scenarios(const Genome& g1, const Genome& g2,
                                        std::size_t limit, bool allow_large) {
  const int d = distance_total(g1, g2);
  if (d > kScenarioDistanceGuard && !allow_large)
    throw TooLargeError("refusing to enumerate scenarios at distance " +
                        std::to_string(d) +
                        " without the large-input override");
  ScenarioSearch search{g2, limit, {}, {}};
  search.visit(g1, d);
  for (Scenario& s : search.result.scenarios) s.origin = g1;
  return std::move(search.result);
}

}  // namespace dcjperm
