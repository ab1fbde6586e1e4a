#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "dcjperm/errors.hpp"

namespace dcjperm {

// 1-based point label; valid labels for a permutation of degree d are 1..d.
using Point = int;

// A cycle written as an ordered list of distinct points. Rotations of the
// list denote the same permutation.
using Cycle = std::vector<Point>;

// Multiset of cycle lengths (1-cycles included), sorted descending so that
// equal multisets compare equal.
using CycleType = std::vector<int>;

struct Transposition {
  Point a;
  Point b;

  friend bool operator==(const Transposition&, const Transposition&) = default;
  friend auto operator<=>(const Transposition&, const Transposition&) = default;
};

// Ordered sequence of transpositions. The product is taken right to left:
// items.back() is applied first, items.front() last.
using TranspositionSequence = std::vector<Transposition>;

// A permutation of {1..degree}, immutable after construction.
class Permutation {
 public:
  // Identity on {1..degree}.
  explicit Permutation(int degree = 0);

  static Permutation identity(int degree) { return Permutation(degree); }

  // Product of the given disjoint cycles; points not mentioned are fixed.
  // Throws RangeError for points outside 1..degree and OverlapError if a
  // point occurs twice.
  static Permutation from_cycles(int degree, const std::vector<Cycle>& cycles);

  // images[k] is the image of point k+1. Throws RangeError/OverlapError if
  // the table is not a bijection on 1..images.size().
  static Permutation from_images(const std::vector<Point>& images);

  // Convenience: the transposition (a,b) in S_degree.
  static Permutation transposition(int degree, Point a, Point b);

  int degree() const { return static_cast<int>(img_.size()) - 1; }

  // Image of a point; p must be in 1..degree.
  Point operator()(Point p) const { return img_[p]; }

  // Copy of the image table, entry k holding the image of point k+1.
  std::vector<Point> image_table() const;

  Permutation inverse() const;

  // Disjoint cycle decomposition including 1-cycles, in canonical order:
  // each cycle starts at its smallest point, cycles sorted by first point.
  std::vector<Cycle> cycles() const;

  CycleType cycle_type() const;

  // Minimal number of transpositions whose product is this permutation,
  // i.e. degree minus the number of cycles (1-cycles counted).
  int transposition_length() const;

  // Points p with p -> p, ascending.
  std::vector<Point> fixed_points() const;

  bool is_identity() const;

  // True iff every cycle has length at most 2.
  bool is_involution() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  // img_[p] is the image of p; slot 0 is unused and holds 0.
  std::vector<Point> img_;

  friend struct std::hash<Permutation>;
  friend Permutation operator*(const Permutation&, const Permutation&);
  friend Permutation conjugate(const Permutation&, const Permutation&);
};

// Function composition, right to left: (outer * inner)(p) = outer(inner(p)).
// Throws DegreeMismatch.
Permutation operator*(const Permutation& outer, const Permutation& inner);

inline Permutation compose(const Permutation& outer, const Permutation& inner) {
  return outer * inner;
}

// g * p * g^-1. Cycle type is preserved. Throws DegreeMismatch.
Permutation conjugate(const Permutation& p, const Permutation& g);

// All ordered sequences of k-1 transpositions whose right-to-left product
// equals the given k-cycle. There are k^(k-2) of them for k >= 2 and exactly
// one (the empty sequence) for k = 1.
std::vector<TranspositionSequence> enumerate_minimal_factorizations(
    const Cycle& cycle, int degree);

// Cycle notation: non-trivial cycles in canonical order, each rendered as
// (p1,p2,...) with no spaces; fixed points omitted; identity renders as "()".
std::string to_cycle_notation(const Permutation& p);

// Parses the grammar emitted by to_cycle_notation, additionally allowing
// whitespace between tokens and explicit 1-cycles. Throws ParseError on bad
// syntax and RangeError/OverlapError for invalid points.
Permutation parse_cycle_notation(const std::string& text, int degree);

std::ostream& operator<<(std::ostream& os, const Permutation& p);

}  // namespace dcjperm

template <>
struct std::hash<dcjperm::Permutation> {
  std::size_t operator()(const dcjperm::Permutation& p) const noexcept {
    // FNV-1a over the image table.
    std::size_t h = 1469598103934665603ull;
    for (dcjperm::Point x : p.img_) {
      h ^= static_cast<std::size_t>(x);
      h *= 1099511628211ull;
    }
    return h;
  }
};
