#include <doctest.h>

#include "supersplit/linsolve.hpp"

using namespace supersplit;
using namespace supersplit::linsolve;

TEST_CASE("solve a 2x2 system") {
    Matrix a = {{1, 1}, {1, -1}};
    Vector b = {3, 1};
    auto x = solve(a, b);
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 2);
    CHECK((*x)[1] == 1);
}

TEST_CASE("inconsistent system") {
    Matrix a = {{1, 1}, {2, 2}};
    Vector b = {1, 3};
    CHECK(!solve(a, b).has_value());
}

TEST_CASE("rational pivots") {
    Matrix a = {{Rational(1, 2), Rational(1, 3)}};
    Vector b = {Rational(5, 6)};
    auto x = solve(a, b);
    REQUIRE(x.has_value());
    CHECK((*x)[0] * Rational(1, 2) + (*x)[1] * Rational(1, 3) == Rational(5, 6));
}

TEST_CASE("rank") {
    CHECK(rank({{1, 2}, {2, 4}}) == 1);
    CHECK(rank({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}) == 3);
    CHECK(rank({{0, 0}, {0, 0}}) == 0);
}

TEST_CASE("minimal support prefers a single column") {
    // Both columns alone solve the system; the earlier one wins.
    Matrix a = {{1, 2}};
    Vector b = {2};
    auto x = solve_min_support(a, b);
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 2);
    CHECK((*x)[1] == 0);
}

TEST_CASE("minimal support falls back to the dense solution") {
    Matrix a = {{1, 0}, {0, 1}};
    Vector b = {1, 1};
    auto x = solve_min_support(a, b);
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 1);
    CHECK((*x)[1] == 1);
}

TEST_CASE("zero columns") {
    Matrix a;
    Vector b = {0, 0};
    auto x = solve(a, b);
    REQUIRE(x.has_value());
    CHECK(x->empty());
    Vector bad = {1};
    CHECK(!solve(Matrix{}, bad).has_value());
}
