#ifndef ORE_TEXT_HPP
#define ORE_TEXT_HPP

#include "ore/ore_poly.hpp"

#include <cstddef>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ore {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// "diff", "shift" or "custom:sigma=<poly>,delta=<poly>".
struct AlgebraDescriptor {
  std::string name;
  std::string sigma_text;
  std::string delta_text;
  std::string generator;  // empty selects the default D / S / P
};

AlgebraDescriptor parse_algebra_descriptor(std::string_view text);
AlgebraRef make_algebra(const AlgebraDescriptor& desc);

/// Polynomial in x (same grammar as operators, without the generator).
Poly parse_poly(std::string_view text);

/// Grammar (whitespace is ignored, juxtaposition is not multiplication):
///   expr  := term (('+' | '-') term)*
///   term  := unary (('*' | '/') unary)*
///   unary := ('-' | '+') unary | power
///   power := atom ('^' uint)?
///   atom  := uint | 'x' | GEN | '(' expr ')'
/// Products are evaluated in the Ore algebra, so "D*x" is x D + 1. The right
/// operand of '/' must be a nonzero coefficient (order 0).
OrePoly parse_operator(std::string_view text, const AlgebraRef& alg);

/// Terms in descending generator power as "(poly)*G^k". With canonical = true
/// the operator is first brought to primitive form with positive leading sign;
/// otherwise coefficients are printed exactly, quotients as "(num)/(den)".
std::string print_operator(const OrePoly& l, bool canonical = true);

// Machine format: one "key=value" per line. An operator under key K is
//   K.order=<r>
//   K.c<k>=<a_0> <a_1> ... <a_d>        (x-coefficients of the d^k coefficient, ascending)
//   K.c<k>=<a_0> ... | <b_0> ...        (numerator | denominator for a quotient)
// with every number written as "p" or "p/q". A zero operator has order -1 and no c-lines.
void write_machine_operator(std::ostream& os, const std::string& key, const OrePoly& l);
std::string machine_poly(const Poly& p);
Poly parse_machine_poly(std::string_view text);

using MachineRecord = std::map<std::string, std::string>;
MachineRecord read_machine(std::istream& is);
OrePoly read_machine_operator(const MachineRecord& rec, const std::string& key, const AlgebraRef& alg);

}  // namespace ore

#endif  // ORE_TEXT_HPP
