#pragma once

#include <optional>
#include <vector>

#include "supersplit/superalgebra.hpp"

namespace supersplit::derivations {

using algebra::Parity;
using algebra::RingSignature;
using algebra::SuperPolynomial;

// A derivation raising theta-degree by `degree`. Images of x_i are built
// from terms of theta-degree exactly `degree`; images of theta_a from terms
// of theta-degree exactly `degree` + 1. Odd `degree` flips parity; such
// derivations are stored but never exponentiated.
struct SuperDerivation {
    RingSignature ring;
    int degree = 2;
    std::vector<SuperPolynomial> x_images;      // size even_count
    std::vector<SuperPolynomial> theta_images;  // size odd_count

    static SuperDerivation zero(const RingSignature& ring, int degree);
    void set_x_image(int i, SuperPolynomial p);
    void set_theta_image(int a, SuperPolynomial p);  // 1-based
    bool is_zero() const;
    void check() const;  // throws on a malformed image
};

// Graded Leibniz extension of the generator images.
SuperPolynomial apply(const SuperDerivation& d, const SuperPolynomial& p);

// Parity-preserving substitution automorphism in unipotent normal form:
// alpha(x_i) = x_i + (theta-degree >= 2), alpha(theta_a) = theta_a +
// (theta-degree >= 3), all parity-respecting.
struct SuperAutomorphism {
    RingSignature ring;
    std::vector<SuperPolynomial> x_images;
    std::vector<SuperPolynomial> theta_images;

    static SuperAutomorphism identity(const RingSignature& ring);
    void check() const;
    bool is_identity() const;
};

SuperPolynomial apply(const SuperAutomorphism& a, const SuperPolynomial& p);

// exp(d) for even degree >= 2: generator images sum_k d^k(gen)/k!, a finite
// sum by nilpotence.
SuperAutomorphism exp(const SuperDerivation& d);

// compose(a, b) acts as "apply a, then b": its images are a's images with
// b's images substituted in.
SuperAutomorphism compose(const SuperAutomorphism& a, const SuperAutomorphism& b);

SuperAutomorphism inverse(const SuperAutomorphism& a);

// Largest k with alpha(u) - u in J^k for every generator u, i.e. the least
// theta-degree appearing across the generator differences. nullopt encodes
// infinity (the identity).
std::optional<int> filtration_order(const SuperAutomorphism& a);

}  // namespace supersplit::derivations
