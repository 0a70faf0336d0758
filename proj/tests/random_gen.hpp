#pragma once

// Shared randomized-input helpers for the test binaries. Everything is seeded
// explicitly, so runs are reproducible.

#include <random>

#include "supersplit/derivations.hpp"
#include "supersplit/superalgebra.hpp"

namespace testgen {

using supersplit::Rational;
using supersplit::algebra::OddMask;
using supersplit::algebra::Parity;
using supersplit::algebra::RingSignature;
using supersplit::algebra::SuperMonomial;
using supersplit::algebra::SuperPolynomial;
using supersplit::derivations::SuperDerivation;

inline Rational random_coefficient(std::mt19937& rng, bool allow_zero = false) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    int n = num(rng);
    if (!allow_zero && n == 0) n = 1;
    return Rational(n, den(rng));
}

inline SuperMonomial random_monomial(std::mt19937& rng, const RingSignature& ring,
                                     int max_even_degree) {
    SuperMonomial m;
    std::uniform_int_distribution<int> deg(0, max_even_degree);
    int total = deg(rng);
    std::uniform_int_distribution<int> var(0, ring.even_count - 1);
    std::vector<unsigned> exps(ring.even_count, 0);
    for (int i = 0; i < total; ++i) ++exps[var(rng)];
    for (int v = 0; v < ring.even_count; ++v)
        if (exps[v] > 0) m.even_exponents.push_back({v, exps[v]});
    if (ring.odd_count > 0) {
        std::uniform_int_distribution<int> mask(0, (1 << ring.odd_count) - 1);
        m.odd = static_cast<OddMask>(mask(rng));
    }
    return m;
}

inline SuperPolynomial random_polynomial(std::mt19937& rng, const RingSignature& ring,
                                         int max_terms = 4, int max_even_degree = 2) {
    SuperPolynomial p(ring);
    std::uniform_int_distribution<int> count(1, max_terms);
    int terms = count(rng);
    for (int i = 0; i < terms; ++i)
        p.add_term(random_monomial(rng, ring, max_even_degree), random_coefficient(rng));
    return p;
}

inline SuperPolynomial random_parity_polynomial(std::mt19937& rng, const RingSignature& ring,
                                                Parity parity, int max_terms = 4,
                                                int max_even_degree = 2) {
    SuperPolynomial p = random_polynomial(rng, ring, max_terms, max_even_degree);
    return p.proj_parity(parity);
}

// A derivation of the given even degree with at least one nonzero x-image,
// so filtration_order(exp(d)) lands exactly at `degree`.
inline SuperDerivation random_derivation(std::mt19937& rng, const RingSignature& ring,
                                         int degree) {
    SuperDerivation d = SuperDerivation::zero(ring, degree);
    auto masks = supersplit::algebra::odd_masks_of_degree(ring, degree);
    auto theta_masks = supersplit::algebra::odd_masks_of_degree(ring, degree + 1);
    if (masks.empty()) return d;
    std::uniform_int_distribution<std::size_t> pick_mask(0, masks.size() - 1);
    std::uniform_int_distribution<int> pick_var(0, ring.even_count - 1);
    std::uniform_int_distribution<int> extra(0, 2);
    int x_image_count = 1 + extra(rng);
    for (int i = 0; i < x_image_count; ++i) {
        SuperMonomial m;
        m.odd = masks[pick_mask(rng)];
        int var = pick_var(rng);
        d.x_images[var] = d.x_images[var] +
                          SuperPolynomial::monomial(ring, m, random_coefficient(rng));
    }
    if (!theta_masks.empty() && ring.odd_count > 0) {
        std::uniform_int_distribution<std::size_t> pick_tmask(0, theta_masks.size() - 1);
        std::uniform_int_distribution<int> pick_theta(1, ring.odd_count);
        int theta_image_count = extra(rng);
        for (int i = 0; i < theta_image_count; ++i) {
            SuperMonomial m;
            m.odd = theta_masks[pick_tmask(rng)];
            int a = pick_theta(rng);
            d.theta_images[a - 1] =
                d.theta_images[a - 1] +
                SuperPolynomial::monomial(ring, m, random_coefficient(rng));
        }
    }
    bool has_x_image = false;
    for (const auto& img : d.x_images)
        if (!img.is_zero()) has_x_image = true;
    if (!has_x_image) {
        SuperMonomial m;
        m.odd = masks.front();
        d.x_images[0] = SuperPolynomial::monomial(ring, m, 1);
    }
    d.check();
    return d;
}

}  // namespace testgen
