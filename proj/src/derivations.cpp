#include "supersplit/derivations.hpp"

#include <stdexcept>

namespace supersplit::derivations {

using algebra::MonomialOrder;
using algebra::odd_mask_indices;
using algebra::require_same_ring;
using algebra::SuperMonomial;

SuperDerivation SuperDerivation::zero(const RingSignature& ring, int degree) {
    SuperDerivation d;
    d.ring = ring;
    d.degree = degree;
    d.x_images.assign(ring.even_count, SuperPolynomial::zero(ring));
    d.theta_images.assign(ring.odd_count, SuperPolynomial::zero(ring));
    return d;
}

void SuperDerivation::set_x_image(int i, SuperPolynomial p) {
    x_images.at(i) = std::move(p);
    check();
}

void SuperDerivation::set_theta_image(int a, SuperPolynomial p) {
    theta_images.at(a - 1) = std::move(p);
    check();
}

bool SuperDerivation::is_zero() const {
    for (const auto& p : x_images)
        if (!p.is_zero()) return false;
    for (const auto& p : theta_images)
        if (!p.is_zero()) return false;
    return true;
}

void SuperDerivation::check() const {
    if (degree < 1) throw std::invalid_argument("derivation degree must be >= 1");
    for (const auto& p : x_images) {
        require_same_ring(ring, p.ring(), "derivation");
        for (const auto& [m, c] : p.terms())
            if (m.theta_degree() != degree)
                throw std::invalid_argument(
                    "derivation: x-image term of wrong theta-degree");
    }
    for (const auto& p : theta_images) {
        require_same_ring(ring, p.ring(), "derivation");
        for (const auto& [m, c] : p.terms())
            if (m.theta_degree() != degree + 1)
                throw std::invalid_argument(
                    "derivation: theta-image term of wrong theta-degree");
    }
}

SuperPolynomial apply(const SuperDerivation& d, const SuperPolynomial& p) {
    require_same_ring(d.ring, p.ring(), "apply_derivation");
    const RingSignature& ring = d.ring;
    SuperPolynomial out(ring);
    for (const auto& [m, c] : p.terms()) {
        // d(x^e theta_A) = d(x^e) theta_A + x^e d(theta_A); the x-part is
        // parity-even so no Koszul sign appears between the two summands.
        for (const auto& [var, exp] : m.even_exponents) {
            if (d.x_images[var].is_zero()) continue;
            SuperMonomial rest = m;
            for (auto& [v, e] : rest.even_exponents)
                if (v == var) --e;
            std::erase_if(rest.even_exponents, [](const auto& ve) { return ve.second == 0; });
            Rational coeff = c * static_cast<int>(exp);
            SuperMonomial rest_even = rest;
            rest_even.odd = 0;
            SuperPolynomial theta_part(ring);
            SuperMonomial theta_only;
            theta_only.odd = m.odd;
            theta_part.add_term(theta_only, 1);
            out = out + SuperPolynomial::monomial(ring, rest_even, coeff) * d.x_images[var] *
                            theta_part;
        }
        // Walk the odd factors: d(t_{a1}..t_{as}) picks up (-1)^{degree*(t-1)}
        // from moving the degree-j derivation past t-1 odd factors.
        std::vector<int> indices = odd_mask_indices(m.odd);
        for (std::size_t t = 0; t < indices.size(); ++t) {
            const SuperPolynomial& img = d.theta_images[indices[t] - 1];
            if (img.is_zero()) continue;
            SuperMonomial even_part;
            even_part.even_exponents = m.even_exponents;
            algebra::OddMask before = 0, after = 0;
            for (std::size_t s = 0; s < t; ++s) before |= algebra::OddMask{1u} << (indices[s] - 1);
            for (std::size_t s = t + 1; s < indices.size(); ++s)
                after |= algebra::OddMask{1u} << (indices[s] - 1);
            Rational coeff = c;
            if ((d.degree % 2) != 0 && (t % 2) != 0) coeff = -coeff;
            SuperMonomial before_m, after_m;
            before_m.odd = before;
            after_m.odd = after;
            out = out + SuperPolynomial::monomial(ring, even_part, coeff) *
                            SuperPolynomial::monomial(ring, before_m, 1) * img *
                            SuperPolynomial::monomial(ring, after_m, 1);
        }
    }
    return out;
}

SuperAutomorphism SuperAutomorphism::identity(const RingSignature& ring) {
    SuperAutomorphism a;
    a.ring = ring;
    auto id = algebra::identity_images(ring);
    a.x_images = std::move(id.x);
    a.theta_images = std::move(id.theta);
    return a;
}

void SuperAutomorphism::check() const {
    for (int i = 0; i < ring.even_count; ++i) {
        const auto& img = x_images.at(i);
        require_same_ring(ring, img.ring(), "automorphism");
        if (!img.is_parity_homogeneous(Parity::Even))
            throw std::invalid_argument("automorphism: x-image must be parity-even");
        if (img.proj_theta_degree(0) != SuperPolynomial::variable_x(ring, i))
            throw std::invalid_argument("automorphism: x-image must reduce to x_i mod J");
    }
    for (int a = 1; a <= ring.odd_count; ++a) {
        const auto& img = theta_images.at(a - 1);
        require_same_ring(ring, img.ring(), "automorphism");
        if (!img.is_parity_homogeneous(Parity::Odd))
            throw std::invalid_argument("automorphism: theta-image must be parity-odd");
        if (img.proj_theta_degree(1) != SuperPolynomial::variable_theta(ring, a))
            throw std::invalid_argument(
                "automorphism: theta-image must reduce to theta_a mod J^2");
    }
}

bool SuperAutomorphism::is_identity() const {
    for (int i = 0; i < ring.even_count; ++i)
        if (x_images[i] != SuperPolynomial::variable_x(ring, i)) return false;
    for (int a = 1; a <= ring.odd_count; ++a)
        if (theta_images[a - 1] != SuperPolynomial::variable_theta(ring, a)) return false;
    return true;
}

SuperPolynomial apply(const SuperAutomorphism& a, const SuperPolynomial& p) {
    return p.substitute(a.x_images, a.theta_images);
}

SuperAutomorphism exp(const SuperDerivation& d) {
    if (d.degree % 2 != 0 || d.degree < 2)
        throw std::invalid_argument("exp: only derivations of even degree >= 2 are exponentiated");
    d.check();
    SuperAutomorphism out;
    out.ring = d.ring;
    auto exp_image = [&](SuperPolynomial gen) {
        SuperPolynomial acc = gen;
        SuperPolynomial term = gen;
        for (int k = 1; !term.is_zero(); ++k) {
            term = apply(d, term) * Rational(1, k);
            acc = acc + term;
        }
        return acc;
    };
    for (int i = 0; i < d.ring.even_count; ++i)
        out.x_images.push_back(exp_image(SuperPolynomial::variable_x(d.ring, i)));
    for (int a = 1; a <= d.ring.odd_count; ++a)
        out.theta_images.push_back(exp_image(SuperPolynomial::variable_theta(d.ring, a)));
    out.check();
    return out;
}

SuperAutomorphism compose(const SuperAutomorphism& a, const SuperAutomorphism& b) {
    require_same_ring(a.ring, b.ring, "compose");
    SuperAutomorphism out;
    out.ring = a.ring;
    for (const auto& img : a.x_images)
        out.x_images.push_back(img.substitute(b.x_images, b.theta_images));
    for (const auto& img : a.theta_images)
        out.theta_images.push_back(img.substitute(b.x_images, b.theta_images));
    out.check();
    return out;
}

SuperAutomorphism inverse(const SuperAutomorphism& a) {
    a.check();
    // beta(g) = g - (alpha(g) - g) evaluated through beta; each pass fixes
    // one more theta-degree, so n + 2 passes always reach the fixed point.
    SuperAutomorphism beta = SuperAutomorphism::identity(a.ring);
    for (int pass = 0; pass <= a.ring.odd_count + 2; ++pass) {
        SuperAutomorphism next;
        next.ring = a.ring;
        for (int i = 0; i < a.ring.even_count; ++i) {
            SuperPolynomial gen = SuperPolynomial::variable_x(a.ring, i);
            next.x_images.push_back(
                gen - (a.x_images[i] - gen).substitute(beta.x_images, beta.theta_images));
        }
        for (int idx = 1; idx <= a.ring.odd_count; ++idx) {
            SuperPolynomial gen = SuperPolynomial::variable_theta(a.ring, idx);
            next.theta_images.push_back(
                gen -
                (a.theta_images[idx - 1] - gen).substitute(beta.x_images, beta.theta_images));
        }
        bool stable = next.x_images == beta.x_images && next.theta_images == beta.theta_images;
        beta = std::move(next);
        if (stable) break;
    }
    if (!compose(a, beta).is_identity() || !compose(beta, a).is_identity())
        throw std::logic_error("inverse: fixed-point iteration failed to invert");
    return beta;
}

std::optional<int> filtration_order(const SuperAutomorphism& a) {
    int best = -1;
    auto scan = [&](const SuperPolynomial& img, const SuperPolynomial& gen) {
        SuperPolynomial diff = img - gen;
        if (diff.is_zero()) return;
        int t = diff.min_theta_degree();
        best = (best < 0) ? t : std::min(best, t);
    };
    for (int i = 0; i < a.ring.even_count; ++i)
        scan(a.x_images[i], SuperPolynomial::variable_x(a.ring, i));
    for (int idx = 1; idx <= a.ring.odd_count; ++idx)
        scan(a.theta_images[idx - 1], SuperPolynomial::variable_theta(a.ring, idx));
    if (best < 0) return std::nullopt;
    return best;
}

}  // namespace supersplit::derivations
