#pragma once

#include <stdexcept>
#include <string>

namespace dcjperm {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A point label lies outside the valid range 1..degree.
struct RangeError : Error {
  using Error::Error;
};

// Two cycles passed to a constructor share a point.
struct OverlapError : Error {
  using Error::Error;
};

// Binary operation on permutations of different degrees.
struct DegreeMismatch : Error {
  using Error::Error;
};

// The two target points of a DCJ operation must be distinct.
struct SamePointError : Error {
  using Error::Error;
};

// Permutation has a cycle longer than 2 and cannot describe a genome.
struct NotInvolutionError : Error {
  using Error::Error;
};

// Genomic permutations act on an even number of extremity labels.
struct OddDegreeError : Error {
  using Error::Error;
};

// Two genomes defined on different numbers of regions.
struct SizeMismatch : Error {
  using Error::Error;
};

// Invalid chromosome-level genome description.
struct SpecError : Error {
  using Error::Error;
};

// An exhaustive computation was requested above its default size guard.
struct TooLargeError : Error {
  using Error::Error;
};

// A sorting element was requested for a component whose sub-permutations
// are not conjugate.
struct NotConjugateError : Error {
  using Error::Error;
};

// The closed-form scenario count covers only conjugate genome pairs with a
// single non-trivial component.
struct ClosedFormUnavailable : Error {
  using Error::Error;
};

// Syntax error in a text input; line and column are 1-based.
struct ParseError : Error {
  ParseError(const std::string& msg, int line_no, int column_no)
      : Error(msg + " (line " + std::to_string(line_no) + ", column " +
              std::to_string(column_no) + ")"),
        line(line_no),
        column(column_no) {}

  int line;
  int column;
};

}  // namespace dcjperm
