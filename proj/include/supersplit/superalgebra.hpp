#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "supersplit/rational.hpp"

namespace supersplit::algebra {

// Signature of the supercommutative ring C[x0..xm | t1..tn]: even_count = m+1
// commuting variables, odd_count = n anticommuting ones.
struct RingSignature {
    int even_count = 1;
    int odd_count = 0;

    bool operator==(const RingSignature&) const = default;
    std::string x_name(int i) const { return "x" + std::to_string(i); }
    std::string theta_name(int a) const { return "t" + std::to_string(a); }
};

// Square-free product of odd variables in canonical (strictly increasing)
// index order. Bit a-1 of the mask stands for theta_a; the sign produced by
// sorting a product is absorbed into the coefficient by the caller.
using OddMask = std::uint32_t;

constexpr int kMaxOddVariables = 30;

int odd_mask_degree(OddMask mask);
std::vector<int> odd_mask_indices(OddMask mask);  // 1-based, increasing

// Sign (+1/-1) of merging two disjoint increasing index lists into one,
// i.e. the parity of the number of transpositions needed. Masks must be
// disjoint.
int koszul_merge_sign(OddMask left, OddMask right);

struct SuperMonomial {
    // Sparse exponents, sorted by variable index, no zero entries.
    std::vector<std::pair<int, unsigned>> even_exponents;
    OddMask odd = 0;

    int even_degree() const;
    int theta_degree() const { return odd_mask_degree(odd); }
    int scaling_degree() const { return even_degree() + theta_degree(); }
    unsigned exponent_of(int var) const;

    bool operator==(const SuperMonomial&) const = default;
};

// Term order used for map storage, iteration and printing: graded
// lexicographic on the even exponents (higher degree first, then higher
// power of the earliest variable), then the odd index list.
struct MonomialOrder {
    bool operator()(const SuperMonomial& a, const SuperMonomial& b) const;
};

enum class Parity { Even, Odd };

class SuperPolynomial {
  public:
    using TermMap = std::map<SuperMonomial, Rational, MonomialOrder>;

    SuperPolynomial() = default;
    explicit SuperPolynomial(RingSignature ring) : ring_(ring) {}

    static SuperPolynomial zero(const RingSignature& ring);
    static SuperPolynomial constant(const RingSignature& ring, const Rational& c);
    static SuperPolynomial variable_x(const RingSignature& ring, int i);
    static SuperPolynomial variable_theta(const RingSignature& ring, int a);
    static SuperPolynomial monomial(const RingSignature& ring, const SuperMonomial& m,
                                    const Rational& c);

    const RingSignature& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const SuperMonomial& m, const Rational& c);

    SuperPolynomial operator-() const;
    SuperPolynomial operator+(const SuperPolynomial& q) const;
    SuperPolynomial operator-(const SuperPolynomial& q) const;
    SuperPolynomial operator*(const SuperPolynomial& q) const;
    SuperPolynomial operator*(const Rational& c) const;
    bool operator==(const SuperPolynomial& q) const;
    bool operator!=(const SuperPolynomial& q) const { return !(*this == q); }

    // Projection onto the terms of theta-degree exactly j.
    SuperPolynomial proj_theta_degree(int j) const;
    // Projection onto terms of even/odd theta-degree.
    SuperPolynomial proj_parity(Parity p) const;

    // Common scaling degree (even degree + theta degree per term) under
    // x -> s x, theta -> s theta. nullopt means non-homogeneous. The zero
    // polynomial has no degree and throws.
    std::optional<int> scaling_degree() const;

    bool is_parity_homogeneous(Parity p) const;
    int min_theta_degree() const;  // terms required (throws on zero)
    int max_theta_degree() const;

    std::string to_string() const;

    // The unique algebra-map extension of the generator assignment. Images
    // of x_i must be parity-even, images of theta_a parity-odd.
    SuperPolynomial substitute(const std::vector<SuperPolynomial>& x_images,
                               const std::vector<SuperPolynomial>& theta_images) const;

  private:
    RingSignature ring_;
    TermMap terms_;
};

// Identity generator images for a ring, handy as a substitution baseline.
struct GeneratorImages {
    std::vector<SuperPolynomial> x;
    std::vector<SuperPolynomial> theta;
};
GeneratorImages identity_images(const RingSignature& ring);

// Monomial enumeration (used by the lift search and tests).
// All even monomials in `ring` of x-degree exactly `degree`.
std::vector<SuperMonomial> even_monomials_of_degree(const RingSignature& ring, int degree);
// All odd masks of theta-degree exactly `degree`.
std::vector<OddMask> odd_masks_of_degree(const RingSignature& ring, int degree);

void require_same_ring(const RingSignature& a, const RingSignature& b, const char* op);

}  // namespace supersplit::algebra
