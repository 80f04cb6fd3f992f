#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "lporient/model.hpp"
#include "lporient/realize.hpp"

namespace lporient {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Orientation text format:
///   line 1: "cube n" or "crosspolytope d"
///   then one directed edge per line, "U -> V"; cube vertices are n-bit
///   strings, crosspolytope vertices are +i/-i. Every edge must appear
///   exactly once, in any order. '#' starts a comment; blank lines ignored.
Orientation parse_orientation(std::istream& in);
Orientation parse_orientation_text(const std::string& text);
void write_orientation(std::ostream& out, const Orientation& o);
std::string orientation_text(const Orientation& o);

/// Realization text format:
///   line 1: "crosspolytope d"
///   then one vertex per line, "+i: p/q p/q ... p/q" with d exact rationals;
///   the objective is implicitly the first coordinate.
Realization parse_realization(std::istream& in);
Realization parse_realization_text(const std::string& text);
void write_realization(std::ostream& out, const Realization& rz);
std::string realization_text(const Realization& rz);

Rational parse_rational(const std::string& token);
std::string rational_str(const Rational& q);

}  // namespace lporient
