#include "dcjperm/perm.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <ostream>
#include <sstream>

namespace dcjperm {

Permutation::Permutation(int degree) {
  if (degree < 0) throw RangeError("degree must be non-negative");
  img_.resize(static_cast<std::size_t>(degree) + 1);
  for (int p = 0; p <= degree; ++p) img_[p] = p;
  img_[0] = 0;
}

Permutation Permutation::from_cycles(int degree,
                                     const std::vector<Cycle>& cycles) {
  Permutation result(degree);
  std::vector<char> seen(static_cast<std::size_t>(degree) + 1, 0);
  for (const Cycle& cycle : cycles) {
    for (Point p : cycle) {
      if (p < 1 || p > degree)
        throw RangeError("cycle point " + std::to_string(p) + " outside 1.." +
                         std::to_string(degree));
      if (seen[p])
        throw OverlapError("point " + std::to_string(p) +
                           " occurs in more than one cycle");
      seen[p] = 1;
    }
    if (cycle.empty()) continue;
    for (std::size_t k = 0; k + 1 < cycle.size(); ++k)
      result.img_[cycle[k]] = cycle[k + 1];
    result.img_[cycle.back()] = cycle.front();
  }
  return result;
}

Permutation Permutation::from_images(const std::vector<Point>& images) {
  const int degree = static_cast<int>(images.size());
  Permutation result(degree);
  std::vector<char> seen(static_cast<std::size_t>(degree) + 1, 0);
  for (int p = 1; p <= degree; ++p) {
    Point image = images[p - 1];
    if (image < 1 || image > degree)
      throw RangeError("image " + std::to_string(image) + " outside 1.." +
                       std::to_string(degree));
    if (seen[image])
      throw OverlapError("image " + std::to_string(image) + " repeated");
    seen[image] = 1;
    result.img_[p] = image;
  }
  return result;
}

Permutation Permutation::transposition(int degree, Point a, Point b) {
  if (a == b) throw SamePointError("transposition points must differ");
  return from_cycles(degree, {{a, b}});
}

std::vector<Point> Permutation::image_table() const {
  return std::vector<Point>(img_.begin() + 1, img_.end());
}

Permutation Permutation::inverse() const {
  Permutation result(degree());
  for (int p = 1; p <= degree(); ++p) result.img_[img_[p]] = p;
  return result;
}

std::vector<Cycle> Permutation::cycles() const {
  std::vector<Cycle> result;
  std::vector<char> visited(img_.size(), 0);
  for (int start = 1; start <= degree(); ++start) {
    if (visited[start]) continue;
    Cycle cycle;
    Point p = start;
    do {
      visited[p] = 1;
      cycle.push_back(p);
      p = img_[p];
    } while (p != start);
    result.push_back(std::move(cycle));
  }
  return result;
}

CycleType Permutation::cycle_type() const {
  CycleType type;
  for (const Cycle& c : cycles()) type.push_back(static_cast<int>(c.size()));
  std::sort(type.begin(), type.end(), std::greater<int>());
  return type;
}

int Permutation::transposition_length() const {
  return degree() - static_cast<int>(cycles().size());
}

std::vector<Point> Permutation::fixed_points() const {
  std::vector<Point> fixed;
  for (int p = 1; p <= degree(); ++p)
    if (img_[p] == p) fixed.push_back(p);
  return fixed;
}

bool Permutation::is_identity() const {
  for (int p = 1; p <= degree(); ++p)
    if (img_[p] != p) return false;
  return true;
}

bool Permutation::is_involution() const {
  for (int p = 1; p <= degree(); ++p)
    if (img_[img_[p]] != p) return false;
  return true;
}

Permutation operator*(const Permutation& outer, const Permutation& inner) {
  if (outer.degree() != inner.degree())
    throw DegreeMismatch("cannot compose permutations of degrees " +
                         std::to_string(outer.degree()) + " and " +
                         std::to_string(inner.degree()));
  Permutation result(outer.degree());
  for (int p = 1; p <= outer.degree(); ++p)
    result.img_[p] = outer.img_[inner.img_[p]];
  return result;
}

Permutation conjugate(const Permutation& p, const Permutation& g) {
  if (p.degree() != g.degree())
    throw DegreeMismatch("cannot conjugate permutations of degrees " +
                         std::to_string(p.degree()) + " and " +
                         std::to_string(g.degree()));
  // (g p g^-1)(g(x)) = g(p(x)), so fill the result image by image without
  // materializing g^-1.
  Permutation result(p.degree());
  for (int x = 1; x <= p.degree(); ++x)
    result.img_[g.img_[x]] = g.img_[p.img_[x]];
  return result;
}

namespace {

// Peels the leftmost (last applied) factor: the transpositions (a,b) that
// shorten a minimal factorization by one are exactly the pairs lying in a
// common cycle, each of which splits that cycle.
void collect_factorizations(const Permutation& remaining,
                            TranspositionSequence& prefix,
                            std::vector<TranspositionSequence>& out) {
  if (remaining.is_identity()) {
    out.push_back(prefix);
    return;
  }
  std::vector<Transposition> candidates;
  for (const Cycle& cycle : remaining.cycles()) {
    if (cycle.size() < 2) continue;
    for (std::size_t i = 0; i < cycle.size(); ++i)
      for (std::size_t j = i + 1; j < cycle.size(); ++j)
        candidates.push_back({std::min(cycle[i], cycle[j]),
                              std::max(cycle[i], cycle[j])});
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const Transposition& lhs, const Transposition& rhs) {
              return lhs.a != rhs.a ? lhs.a < rhs.a : lhs.b < rhs.b;
            });
  for (const Transposition& t : candidates) {
    Permutation factor =
        Permutation::transposition(remaining.degree(), t.a, t.b);
    Permutation rest = factor * remaining;
    assert(rest.transposition_length() == remaining.transposition_length() - 1);
    prefix.push_back(t);
    collect_factorizations(rest, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<TranspositionSequence> enumerate_minimal_factorizations(
    const Cycle& cycle, int degree) {
  if (cycle.empty()) throw RangeError("cycle must contain at least one point");
  // from_cycles validates range and distinctness.
  Permutation target = Permutation::from_cycles(degree, {cycle});
  std::vector<TranspositionSequence> out;
  TranspositionSequence prefix;
  collect_factorizations(target, prefix, out);
  return out;
}

std::string to_cycle_notation(const Permutation& p) {
  std::ostringstream os;
  bool any = false;
  for (const Cycle& cycle : p.cycles()) {
    if (cycle.size() < 2) continue;
    any = true;
    os << '(';
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (k > 0) os << ',';
      os << cycle[k];
    }
    os << ')';
  }
  if (!any) return "()";
  return os.str();
}

Permutation parse_cycle_notation(const std::string& text, int degree) {
  std::vector<Cycle> cycles;
  std::size_t pos = 0;
  auto column = [&]() { return static_cast<int>(pos) + 1; };
  auto skip_ws = [&]() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(')
      throw ParseError("expected '('", 1, column());
    ++pos;
    Cycle cycle;
    skip_ws();
    while (pos < text.size() && text[pos] != ')') {
      if (!cycle.empty()) {
        if (text[pos] != ',')
          throw ParseError("expected ',' or ')'", 1, column());
        ++pos;
        skip_ws();
      }
      std::size_t start = pos;
      while (pos < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[pos])))
        ++pos;
      if (pos == start)
        throw ParseError("expected point label", 1, column());
      cycle.push_back(std::stoi(text.substr(start, pos - start)));
      skip_ws();
    }
    if (pos >= text.size())
      throw ParseError("unterminated cycle", 1, column());
    ++pos;  // ')'
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    skip_ws();
  }
  return Permutation::from_cycles(degree, cycles);
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) {
  return os << to_cycle_notation(p);
}

}  // namespace dcjperm
