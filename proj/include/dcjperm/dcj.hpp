#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "dcjperm/genome.hpp"
#include "dcjperm/perm.hpp"

namespace dcjperm {

// How a DCJ operation acted on the genome it was applied to: left
// multiplication by (i,j) when i,j were both telomeres or formed an
// adjacency, conjugation by (i,j) otherwise.
enum class DcjMode { multiply, conjugate };

struct DcjOperation {
  Point i;
  Point j;
  DcjMode mode;

  friend bool operator==(const DcjOperation&, const DcjOperation&) = default;
};

struct DcjResult {
  Genome genome;
  DcjOperation op;
};

// The DCJ operator on targets i != j: (i,j)*g when i,j are both fixed or
// g(i)=j, else (i,j)*g*(i,j). Applying the same targets twice restores g.
DcjResult apply_dcj(const Genome& g, Point i, Point j);

enum class ComponentKind { trivial, conjugate, non_conjugate };

std::string to_string(ComponentKind kind);
std::string to_string(DcjMode mode);

// One equivalence class of {1..2n} closed under both genomes, together with
// the two induced sub-permutations (restrictions extended by fixed points to
// the full degree).
struct Component {
  std::vector<Point> points;   // ascending
  Permutation sub1;
  Permutation sub2;
  std::vector<Point> fixed1;   // telomeres of genome 1 inside the class
  std::vector<Point> fixed2;
  ComponentKind kind;
};

struct ComponentPartition {
  std::vector<Component> classes;  // ordered by smallest point
};

// Partition of {1..2n} generated by the orbits of both genomes' pairings.
// Throws SizeMismatch when the genomes have different region counts.
ComponentPartition components(const Genome& g1, const Genome& g2);

// Cycles of sub2*sub1 restricted to the class: two cycles of equal length
// when the class holds no telomere of either genome, one cycle otherwise.
std::vector<Cycle> component_product(const Component& c);

// 0 for trivial classes, half the transposition length of sub2*sub1 for
// conjugate ones, and half of (length + 1) for non-conjugate ones.
int component_distance(const Component& c);

struct DistanceReport {
  int total;  // (lt + nc) / 2
  int lt;     // transposition length of the permutation product
  int nc;     // product cycles holding two same-genome telomeres
  std::vector<std::pair<int, int>> per_component;  // (class index, distance)
};

DistanceReport distance(const Genome& g1, const Genome& g2);

// The distance alone, skipping the per-component breakdown.
int distance_total(const Genome& g1, const Genome& g2);

// A cycle g with conjugate(sub1, g) = sub2 and transposition length equal to
// the component distance. Throws NotConjugateError for other kinds.
Cycle sorting_element(const Component& c);

struct ScenarioStep {
  DcjOperation op;
  Genome genome;
};

// A chain of genomes, each one DCJ operation away from the previous.
struct Scenario {
  Genome origin;
  std::vector<ScenarioStep> steps;

  const Genome& final_genome() const {
    return steps.empty() ? origin : steps.back().genome;
  }
};

// Deterministic minimum-length scenario transforming g1 into g2, built
// component by component in ascending order of smallest point.
Scenario optimal_scenario(const Genome& g1, const Genome& g2);

// (d+1)^(d-1) for genome pairs that are conjugate as permutations and whose
// partition has exactly one non-trivial class; throws ClosedFormUnavailable
// otherwise.
BigInt count_optimal_scenarios(const Genome& g1, const Genome& g2);

struct ScenarioEnumeration {
  std::vector<Scenario> scenarios;
  bool truncated = false;
};

inline constexpr int kScenarioDistanceGuard = 5;

// Every optimal scenario from g1 to g2, found by depth-first search over
// distance-decreasing neighbors. Two target pairs producing the same genome
// yield the same scenario, so branching is deduplicated by the resulting
// genome. Guarded to distance <= kScenarioDistanceGuard unless allow_large.
ScenarioEnumeration enumerate_scenarios(
    const Genome& g1, const Genome& g2,
    std::size_t limit = static_cast<std::size_t>(-1),
    bool allow_large = false);

}  // namespace dcjperm
