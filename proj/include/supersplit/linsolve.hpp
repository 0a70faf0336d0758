#pragma once

#include <optional>
#include <vector>

#include "supersplit/rational.hpp"

namespace supersplit::linsolve {

using Matrix = std::vector<std::vector<Rational>>;
using Vector = std::vector<Rational>;

// Reduced row echelon form in place; returns the pivot column per row.
std::vector<int> rref(Matrix& m);

int rank(Matrix m);

// One solution of A x = b or nullopt if inconsistent. Free variables are
// set to zero.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

// Deterministic small-support solution: tries supports of size 0, 1, 2, ...
// in lexicographic column order (capped so the search stays cheap) and falls
// back to the plain solve() answer. Used to pick canonical certificates.
std::optional<Vector> solve_min_support(const Matrix& a, const Vector& b);

}  // namespace supersplit::linsolve
