#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "supersplit/ideals.hpp"
#include "supersplit/superalgebra.hpp"

namespace supersplit::cli {

struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(int line, int column, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ", col " +
                             std::to_string(column) + ": " + message),
          line(line),
          column(column) {}
};

// Grammar: integers and p/q literals, x<i>, t<a>, `lambda`, + - *, ^ on even
// variables and parenthesized parity-even subexpressions (non-negative
// integer exponents), parentheses. t2*t1 normalizes to -t1*t2.
algebra::SuperPolynomial parse_expression(const std::string& text,
                                          const algebra::RingSignature& ring,
                                          std::optional<Rational> lambda = std::nullopt,
                                          int line_number = 1);

// Ideal file: header directives `ring m n` (mandatory, first), optional
// `degree d`, optional `lambda p/q`; then one generator expression per line.
// Blank lines and '#' comments are skipped.
struct IdealFileData {
    ideals::SuperIdeal ideal;
    std::optional<Rational> lambda;
};

IdealFileData parse_ideal_file(const std::string& contents, int max_odd_variables);

// Canonical rendering; parse(render(data)) reproduces the data exactly.
// Lambda values are already substituted into the generators, so the header
// keeps only the ring and degree.
std::string render_ideal_file(const IdealFileData& data);

}  // namespace supersplit::cli
