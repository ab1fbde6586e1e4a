#include "dcjperm/genome.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <cstdlib>
#include <random>
#include <sstream>
#include <utility>

namespace dcjperm {

Point phi(const Extremity& e) {
  if (e.gene < 1) throw RangeError("gene id must be positive");
  return e.end == GeneEnd::tail ? 2 * e.gene - 1 : 2 * e.gene;
}

Extremity phi_inverse(Point label) {
  if (label < 1) throw RangeError("extremity label must be positive");
  if (label % 2 == 1) return {(label + 1) / 2, GeneEnd::tail};
  return {label / 2, GeneEnd::head};
}

Genome::Genome(Permutation perm) : perm_(std::move(perm)) {
  if (perm_.degree() % 2 != 0)
    throw OddDegreeError("genomic permutations act on an even number of "
                         "extremity labels, got degree " +
                         std::to_string(perm_.degree()));
  if (!perm_.is_involution())
    throw NotInvolutionError(
        "permutation has a cycle longer than 2 and is not a genome");
}

namespace {

// Extremity labels at the two ends of a signed gene as it lies on a
// chromosome read left to right.
Point left_label(int signed_gene) {
  const int a = std::abs(signed_gene);
  return signed_gene > 0 ? 2 * a - 1 : 2 * a;
}

Point right_label(int signed_gene) {
  const int a = std::abs(signed_gene);
  return signed_gene > 0 ? 2 * a : 2 * a - 1;
}

void validate_spec(const GenomeSpec& spec) {
  if (spec.n_regions < 0) throw SpecError("negative region count");
  std::vector<char> seen(static_cast<std::size_t>(spec.n_regions) + 1, 0);
  int total = 0;
  for (const Chromosome& chrom : spec.chromosomes) {
    if (chrom.genes.empty()) throw SpecError("empty chromosome");
    for (int gene : chrom.genes) {
      if (gene == 0) throw SpecError("gene id 0 is not allowed");
      const int a = std::abs(gene);
      if (a > spec.n_regions)
        throw SpecError("gene id " + std::to_string(a) + " outside 1.." +
                        std::to_string(spec.n_regions));
      if (seen[a])
        throw SpecError("duplicate gene id " + std::to_string(a));
      seen[a] = 1;
      ++total;
    }
  }
  if (total != spec.n_regions)
    throw SpecError("gene ids must cover 1.." +
                    std::to_string(spec.n_regions) + " exactly once");
}

// Orders two readings of the same chromosome: smaller gene id first, and a
// forward gene before its reversal.
bool token_less(int x, int y) {
  if (std::abs(x) != std::abs(y)) return std::abs(x) < std::abs(y);
  return x > y;
}

bool reading_less(const std::vector<int>& x, const std::vector<int>& y) {
  const std::size_t m = std::min(x.size(), y.size());
  for (std::size_t k = 0; k < m; ++k)
    if (x[k] != y[k]) return token_less(x[k], y[k]);
  return x.size() < y.size();
}

int min_abs_gene(const Chromosome& chrom) {
  int best = std::abs(chrom.genes.front());
  for (int g : chrom.genes) best = std::min(best, std::abs(g));
  return best;
}

}  // namespace

Genome encode(const GenomeSpec& spec) {
  validate_spec(spec);
  std::vector<Cycle> adjacencies;
  for (const Chromosome& chrom : spec.chromosomes) {
    const std::vector<int>& genes = chrom.genes;
    for (std::size_t k = 0; k + 1 < genes.size(); ++k)
      adjacencies.push_back({right_label(genes[k]), left_label(genes[k + 1])});
    if (chrom.shape == ChromosomeShape::circular)
      adjacencies.push_back(
          {right_label(genes.back()), left_label(genes.front())});
  }
  return Genome(
      Permutation::from_cycles(2 * spec.n_regions, adjacencies));
}

GenomeSpec decode(const Genome& g) {
  const Permutation& pi = g.perm();
  const int n = g.regions();
  std::vector<char> gene_done(static_cast<std::size_t>(n) + 1, 0);
  std::vector<Chromosome> linear;
  std::vector<Chromosome> circular;

  const auto partner = [](Point e) { return e % 2 == 1 ? e + 1 : e - 1; };
  const auto gene_of = [](Point e) { return (e + 1) / 2; };

  // Linear chromosomes start and end at telomeres.
  for (Point t = 1; t <= 2 * n; ++t) {
    if (pi(t) != t) continue;
    if (gene_done[gene_of(t)]) continue;
    std::vector<int> genes;
    Point entry = t;
    for (;;) {
      const int a = gene_of(entry);
      genes.push_back(entry % 2 == 1 ? a : -a);
      gene_done[a] = 1;
      const Point exit = partner(entry);
      if (pi(exit) == exit) break;
      entry = pi(exit);
    }
    std::vector<int> reversed(genes.rbegin(), genes.rend());
    for (int& x : reversed) x = -x;
    if (reading_less(reversed, genes)) genes = std::move(reversed);
    linear.push_back({ChromosomeShape::linear, std::move(genes)});
  }

  // Whatever remains lies on circular chromosomes; start each at its
  // smallest gene id, forward oriented.
  for (int a = 1; a <= n; ++a) {
    if (gene_done[a]) continue;
    std::vector<int> genes;
    Point entry = 2 * a - 1;
    do {
      const int b = gene_of(entry);
      genes.push_back(entry % 2 == 1 ? b : -b);
      gene_done[b] = 1;
      entry = pi(partner(entry));
    } while (gene_of(entry) != a);
    circular.push_back({ChromosomeShape::circular, std::move(genes)});
  }

  const auto by_min_gene = [](const Chromosome& lhs, const Chromosome& rhs) {
    return min_abs_gene(lhs) < min_abs_gene(rhs);
  };
  std::sort(linear.begin(), linear.end(), by_min_gene);
  std::sort(circular.begin(), circular.end(), by_min_gene);

  GenomeSpec spec;
  spec.n_regions = n;
  spec.chromosomes = std::move(linear);
  spec.chromosomes.insert(spec.chromosomes.end(),
                          std::make_move_iterator(circular.begin()),
                          std::make_move_iterator(circular.end()));
  return spec;
}

BigInt count_genomes(int n) {
  if (n < 0) throw RangeError("region count must be non-negative");
  BigInt total = 0;
  BigInt binom = 1;  // C(2n, 2t)
  BigInt dfac = 1;   // (2t-1)!!, empty product for t = 0
  for (int t = 0; t <= n; ++t) {
    if (t > 0) {
      binom = binom * (2 * n - 2 * t + 2) / (2 * t - 1);
      binom = binom * (2 * n - 2 * t + 1) / (2 * t);
      dfac *= 2 * t - 1;
    }
    total += binom * dfac;
  }
  return total;
}

namespace {

void gen_matchings(int two_n, int pairs_left, int start,
                   std::vector<char>& used,
                   std::vector<std::pair<Point, Point>>& pairs,
                   std::vector<Genome>& out) {
  if (pairs_left == 0) {
    std::vector<Cycle> cycles;
    cycles.reserve(pairs.size());
    for (const auto& [a, b] : pairs) cycles.push_back({a, b});
    out.push_back(Genome(Permutation::from_cycles(two_n, cycles)));
    return;
  }
  for (int a = start; a <= two_n; ++a) {
    if (used[a]) continue;
    used[a] = 1;
    for (int b = a + 1; b <= two_n; ++b) {
      if (used[b]) continue;
      used[b] = 1;
      pairs.emplace_back(a, b);
      gen_matchings(two_n, pairs_left - 1, a + 1, used, pairs, out);
      pairs.pop_back();
      used[b] = 0;
    }
    used[a] = 0;
  }
}

}  // namespace

std::vector<Genome> enumerate_genomes(int n, bool allow_large) {
  if (n < 0) throw RangeError("region count must be non-negative");
  if (n > 6 && !allow_large)
    throw TooLargeError("refusing to enumerate " + std::to_string(n) +
                        " regions without the large-input override");
  std::vector<Genome> out;
  std::vector<char> used(static_cast<std::size_t>(2 * n) + 1, 0);
  std::vector<std::pair<Point, Point>> pairs;
  for (int m = 0; m <= n; ++m)
    gen_matchings(2 * n, m, 1, used, pairs, out);
  return out;
}

namespace {

// Unbiased draw from [0, bound) using rejection; bound >= 1.
std::uint64_t uniform_u64_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

BigInt uniform_bigint_below(std::mt19937_64& rng, const BigInt& bound) {
  if (bound <= 1) return 0;
  const unsigned bits = boost::multiprecision::msb(bound) + 1;
  const BigInt mask = (BigInt(1) << bits) - 1;
  for (;;) {
    BigInt x = 0;
    for (unsigned filled = 0; filled < bits; filled += 64) {
      x <<= 64;
      x |= BigInt(rng());
    }
    x &= mask;
    if (x < bound) return x;
  }
}

}  // namespace

Genome random_genome(int n, std::uint64_t seed) {
  if (n < 0) throw RangeError("region count must be non-negative");
  std::mt19937_64 rng(seed);

  // Weight of drawing exactly 2t telomeres: C(2n,2t) ways to place them
  // times (2n-2t-1)!! pairings of the rest.
  std::vector<BigInt> weights(static_cast<std::size_t>(n) + 1);
  BigInt binom = 1;
  for (int t = 0; t <= n; ++t) {
    if (t > 0) {
      binom = binom * (2 * n - 2 * t + 2) / (2 * t - 1);
      binom = binom * (2 * n - 2 * t + 1) / (2 * t);
    }
    BigInt dfac = 1;
    for (int k = 2 * n - 2 * t - 1; k > 1; k -= 2) dfac *= k;
    weights[t] = binom * dfac;
  }
  BigInt total = 0;
  for (const BigInt& w : weights) total += w;

  int telomere_pairs = n;
  BigInt r = uniform_bigint_below(rng, total);
  for (int t = 0; t <= n; ++t) {
    if (r < weights[t]) {
      telomere_pairs = t;
      break;
    }
    r -= weights[t];
  }

  // Uniform set of 2t fixed points via a partial shuffle.
  std::vector<Point> points(static_cast<std::size_t>(2 * n));
  for (int p = 1; p <= 2 * n; ++p) points[p - 1] = p;
  const int fixed_count = 2 * telomere_pairs;
  for (int k = 0; k < fixed_count; ++k) {
    const std::size_t j =
        k + uniform_u64_below(rng, static_cast<std::uint64_t>(2 * n - k));
    std::swap(points[k], points[j]);
  }
  std::vector<Point> rest(points.begin() + fixed_count, points.end());
  std::sort(rest.begin(), rest.end());

  // Uniform perfect matching: repeatedly pair the smallest remaining point
  // with a uniformly chosen partner.
  std::vector<Cycle> adjacencies;
  while (!rest.empty()) {
    const Point a = rest.front();
    rest.erase(rest.begin());
    const std::size_t j = uniform_u64_below(rng, rest.size());
    const Point b = rest[j];
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(j));
    adjacencies.push_back({a, b});
  }
  return Genome(Permutation::from_cycles(2 * n, adjacencies));
}

namespace {

struct Token {
  std::string text;
  int column;
};

std::vector<Token> tokenize_line(const std::string& line) {
  std::vector<Token> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() &&
           std::isspace(static_cast<unsigned char>(line[pos])))
      ++pos;
    if (pos >= line.size()) break;
    const std::size_t start = pos;
    while (pos < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[pos])))
      ++pos;
    tokens.push_back(
        {line.substr(start, pos - start), static_cast<int>(start) + 1});
  }
  return tokens;
}

int parse_gene_token(const Token& tok, int line_no) {
  const std::string& s = tok.text;
  std::size_t k = 0;
  if (k < s.size() && s[k] == '-') ++k;
  if (k >= s.size())
    throw ParseError("expected gene id, got '" + s + "'", line_no, tok.column);
  for (; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k])))
      throw ParseError("expected gene id, got '" + s + "'", line_no,
                       tok.column);
  long value = std::strtol(s.c_str(), nullptr, 10);
  if (value == 0)
    throw SpecError("gene id 0 is not allowed (line " +
                    std::to_string(line_no) + ")");
  return static_cast<int>(value);
}

}  // namespace

GenomeSpec parse_genome_file(const std::string& text) {
  std::vector<Chromosome> chromosomes;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  int total_genes = 0;
  int max_gene = 0;
  std::vector<char> seen;
  while (std::getline(in, line)) {
    ++line_no;
    std::vector<Token> tokens = tokenize_line(line);
    if (tokens.empty() || tokens.front().text.front() == '#') continue;
    const Token& head = tokens.front();
    ChromosomeShape shape;
    if (head.text == "L") {
      shape = ChromosomeShape::linear;
    } else if (head.text == "C") {
      shape = ChromosomeShape::circular;
    } else {
      throw ParseError("expected 'L' or 'C', got '" + head.text + "'",
                       line_no, head.column);
    }
    if (tokens.size() == 1)
      throw ParseError("chromosome has no genes", line_no, head.column);
    Chromosome chrom{shape, {}};
    for (std::size_t k = 1; k < tokens.size(); ++k) {
      const int gene = parse_gene_token(tokens[k], line_no);
      const int a = std::abs(gene);
      if (a > max_gene) {
        seen.resize(static_cast<std::size_t>(a) + 1, 0);
        max_gene = a;
      }
      if (seen[a])
        throw SpecError("duplicate gene id " + std::to_string(a) + " (line " +
                        std::to_string(line_no) + ")");
      seen[a] = 1;
      ++total_genes;
      chrom.genes.push_back(gene);
    }
    chromosomes.push_back(std::move(chrom));
  }
  if (max_gene != total_genes)
    throw SpecError("gene ids must be exactly 1.." +
                    std::to_string(total_genes) + " with no gaps");
  GenomeSpec spec;
  spec.n_regions = total_genes;
  spec.chromosomes = std::move(chromosomes);
  return spec;
}

std::string render_genome_file(const GenomeSpec& spec) {
  std::ostringstream os;
  for (const Chromosome& chrom : spec.chromosomes) {
    os << (chrom.shape == ChromosomeShape::linear ? 'L' : 'C');
    for (int gene : chrom.genes) os << ' ' << gene;
    os << '\n';
  }
  return os.str();
}

}  // namespace dcjperm
