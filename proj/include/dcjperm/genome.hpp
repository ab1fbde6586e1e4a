#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dcjperm/perm.hpp"

namespace dcjperm {

using BigInt = boost::multiprecision::cpp_int;

enum class GeneEnd { tail, head };

// One end of a gene. Gene ids are 1..n.
struct Extremity {
  int gene;
  GeneEnd end;

  friend bool operator==(const Extremity&, const Extremity&) = default;
};

// Label assignment for extremities: tail of gene i -> 2i-1, head -> 2i.
Point phi(const Extremity& e);
Extremity phi_inverse(Point label);

enum class ChromosomeShape { linear, circular };

// Ordered signed gene ids; a negative id means the gene lies in reverse
// orientation.
struct Chromosome {
  ChromosomeShape shape;
  std::vector<int> genes;

  friend bool operator==(const Chromosome&, const Chromosome&) = default;
};

// Chromosome-level description of a genome on genes 1..n_regions, each id
// appearing exactly once across all chromosomes.
struct GenomeSpec {
  int n_regions = 0;
  std::vector<Chromosome> chromosomes;

  friend bool operator==(const GenomeSpec&, const GenomeSpec&) = default;
};

// A genome on n regions: an involution on {1..2n} whose 2-cycles are the
// adjacencies and whose fixed points are the telomeres.
class Genome {
 public:
  // The empty genome on zero regions.
  Genome() = default;

  // Validates the invariants; throws NotInvolutionError or OddDegreeError.
  explicit Genome(Permutation perm);

  const Permutation& perm() const { return perm_; }
  int regions() const { return perm_.degree() / 2; }
  int degree() const { return perm_.degree(); }

  friend bool operator==(const Genome&, const Genome&) = default;

 private:
  Permutation perm_;
};

// Wraps a permutation as a Genome; throws if it is not an involution of
// even degree.
inline Genome validate(const Permutation& p) { return Genome(p); }

// Chromosome description -> genomic permutation. Throws SpecError on
// duplicate/missing/zero gene ids or empty chromosomes.
Genome encode(const GenomeSpec& spec);

// Inverse of encode, producing the canonical description: linear
// chromosomes before circular ones, each group ordered by smallest gene id;
// a linear chromosome is read from the telomere giving the smaller signed
// reading; a circular chromosome starts at its smallest gene id, forward
// oriented.
GenomeSpec decode(const Genome& g);

// Number of genomes on n regions: sum over t of C(2n,2t)(2t-1)!!.
BigInt count_genomes(int n);

// Every involution on {1..2n}, emitted by increasing number of adjacencies
// and lexicographic adjacency list within that. Guarded to n <= 6 unless
// allow_large; throws TooLargeError.
std::vector<Genome> enumerate_genomes(int n, bool allow_large = false);

// Uniformly random genome, deterministic in (n, seed).
Genome random_genome(int n, std::uint64_t seed);

// Text format: one chromosome per line, "L" or "C" followed by signed gene
// ids, whitespace separated; blank lines and lines starting with '#' are
// ignored; n is inferred. Throws ParseError (syntax) or SpecError (ids).
GenomeSpec parse_genome_file(const std::string& text);
std::string render_genome_file(const GenomeSpec& spec);

}  // namespace dcjperm
