#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "pbred/encoder.hpp"
#include "pbred/equation.hpp"
#include "pbred/polynomial.hpp"
#include "pbred/substitution.hpp"

// Plain-text formats. One fact per line, '#' starts a comment, blank lines
// are skipped. Terms are written as a signed coefficient followed by
// variable tokens: "-3 x1 x4". Inline polynomials join terms with " + ",
// e.g. "2 x1 x2 + -3 x3 + 1"; the zero polynomial is "0".
//
//   polynomial file    one term per line
//   equations file     lhs := rhs      (inline polynomials)
//   deductions file    f == g          (inline polynomials)
//   substitution file  x5 := g         (eliminations, in order)
//   instance file      key = value lines (product, widths, vars, equations)

namespace pbred {

std::string format_term(const Polynomial::Term& term);
std::string format_inline(const Polynomial& p);
Polynomial parse_inline(const std::string& text, std::size_t line_no = 0);

void write_polynomial(std::ostream& out, const Polynomial& p);
Polynomial read_polynomial(std::istream& in);

void write_equations(std::ostream& out, const std::vector<BinaryEquation>& eqs);
std::vector<BinaryEquation> read_equations(std::istream& in);

// Deduction inputs stay (f, g) pairs here; callers validate degrees.
void write_deduction_pairs(std::ostream& out,
                           const std::vector<std::pair<Polynomial, Polynomial>>& pairs);
std::vector<std::pair<Polynomial, Polynomial>> read_deduction_pairs(std::istream& in);

void write_substitution(std::ostream& out, const Substitution& sub);
Substitution read_substitution(std::istream& in);

void write_instance(std::ostream& out, const FactorizationInstance& inst);
FactorizationInstance read_instance(std::istream& in);

// File helpers; throw ParseError (read) or Error (unwritable path).
Polynomial read_polynomial_file(const std::string& path);
void write_polynomial_file(const std::string& path, const Polynomial& p);
std::vector<BinaryEquation> read_equations_file(const std::string& path);
void write_equations_file(const std::string& path, const std::vector<BinaryEquation>& eqs);
std::vector<std::pair<Polynomial, Polynomial>> read_deduction_pairs_file(const std::string& path);
Substitution read_substitution_file(const std::string& path);
void write_substitution_file(const std::string& path, const Substitution& sub);
FactorizationInstance read_instance_file(const std::string& path);
void write_instance_file(const std::string& path, const FactorizationInstance& inst);

}  // namespace pbred
