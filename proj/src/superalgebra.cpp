#include "supersplit/superalgebra.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace supersplit {

std::optional<Rational> parse_rational(const std::string& text) {
    if (text.empty()) return std::nullopt;
    std::size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(Int(text));
        }
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den == 0) return std::nullopt;
        return Rational(num, den);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

}  // namespace supersplit

namespace supersplit::algebra {

int odd_mask_degree(OddMask mask) { return std::popcount(mask); }

std::vector<int> odd_mask_indices(OddMask mask) {
    std::vector<int> out;
    for (int a = 1; mask != 0; ++a, mask >>= 1)
        if (mask & 1u) out.push_back(a);
    return out;
}

int koszul_merge_sign(OddMask left, OddMask right) {
    // Count pairs (i in left, j in right) with i > j; each is one inversion.
    int inversions = 0;
    OddMask r = right;
    while (r != 0) {
        int bit = std::countr_zero(r);
        inversions += std::popcount(left >> (bit + 1));
        r &= r - 1;
    }
    return (inversions % 2 == 0) ? 1 : -1;
}

int SuperMonomial::even_degree() const {
    int d = 0;
    for (const auto& [var, exp] : even_exponents) d += static_cast<int>(exp);
    return d;
}

unsigned SuperMonomial::exponent_of(int var) const {
    for (const auto& [v, e] : even_exponents)
        if (v == var) return e;
    return 0;
}

bool MonomialOrder::operator()(const SuperMonomial& a, const SuperMonomial& b) const {
    int da = a.even_degree(), db = b.even_degree();
    if (da != db) return da > db;
    // Lexicographic on exponent vectors: larger power of the earliest
    // differing variable comes first.
    std::size_t ia = 0, ib = 0;
    while (ia < a.even_exponents.size() && ib < b.even_exponents.size()) {
        const auto& [va, ea] = a.even_exponents[ia];
        const auto& [vb, eb] = b.even_exponents[ib];
        if (va != vb) return va < vb;  // the one holding the earlier variable is bigger
        if (ea != eb) return ea > eb;
        ++ia, ++ib;
    }
    if (ia < a.even_exponents.size()) return true;
    if (ib < b.even_exponents.size()) return false;
    // Odd part: lexicographic on the increasing index lists.
    OddMask ma = a.odd, mb = b.odd;
    while (ma != 0 && mb != 0) {
        int la = std::countr_zero(ma), lb = std::countr_zero(mb);
        if (la != lb) return la < lb;
        ma &= ma - 1;
        mb &= mb - 1;
    }
    return ma != 0;  // the longer list (a proper extension) prints first
}

void require_same_ring(const RingSignature& a, const RingSignature& b, const char* op) {
    if (!(a == b))
        throw std::invalid_argument(std::string(op) + ": ring signature mismatch");
}

SuperPolynomial SuperPolynomial::zero(const RingSignature& ring) {
    return SuperPolynomial(ring);
}

SuperPolynomial SuperPolynomial::constant(const RingSignature& ring, const Rational& c) {
    SuperPolynomial p(ring);
    p.add_term(SuperMonomial{}, c);
    return p;
}

SuperPolynomial SuperPolynomial::variable_x(const RingSignature& ring, int i) {
    if (i < 0 || i >= ring.even_count)
        throw std::invalid_argument("variable_x: index out of range");
    SuperMonomial m;
    m.even_exponents.push_back({i, 1u});
    return monomial(ring, m, 1);
}

SuperPolynomial SuperPolynomial::variable_theta(const RingSignature& ring, int a) {
    if (a < 1 || a > ring.odd_count)
        throw std::invalid_argument("variable_theta: index out of range");
    SuperMonomial m;
    m.odd = OddMask{1u} << (a - 1);
    return monomial(ring, m, 1);
}

SuperPolynomial SuperPolynomial::monomial(const RingSignature& ring, const SuperMonomial& m,
                                          const Rational& c) {
    SuperPolynomial p(ring);
    p.add_term(m, c);
    return p;
}

void SuperPolynomial::add_term(const SuperMonomial& m, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SuperPolynomial SuperPolynomial::operator-() const {
    SuperPolynomial out(ring_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

SuperPolynomial SuperPolynomial::operator+(const SuperPolynomial& q) const {
    require_same_ring(ring_, q.ring_, "add");
    SuperPolynomial out = *this;
    for (const auto& [m, c] : q.terms_) out.add_term(m, c);
    return out;
}

SuperPolynomial SuperPolynomial::operator-(const SuperPolynomial& q) const {
    require_same_ring(ring_, q.ring_, "sub");
    SuperPolynomial out = *this;
    for (const auto& [m, c] : q.terms_) out.add_term(m, -c);
    return out;
}

SuperPolynomial SuperPolynomial::operator*(const SuperPolynomial& q) const {
    require_same_ring(ring_, q.ring_, "mul");
    SuperPolynomial out(ring_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : q.terms_) {
            if ((ma.odd & mb.odd) != 0) continue;  // repeated theta annihilates
            SuperMonomial m;
            m.odd = ma.odd | mb.odd;
            // Merge sparse exponent lists.
            std::size_t ia = 0, ib = 0;
            while (ia < ma.even_exponents.size() || ib < mb.even_exponents.size()) {
                if (ib == mb.even_exponents.size() ||
                    (ia < ma.even_exponents.size() &&
                     ma.even_exponents[ia].first < mb.even_exponents[ib].first)) {
                    m.even_exponents.push_back(ma.even_exponents[ia++]);
                } else if (ia == ma.even_exponents.size() ||
                           mb.even_exponents[ib].first < ma.even_exponents[ia].first) {
                    m.even_exponents.push_back(mb.even_exponents[ib++]);
                } else {
                    m.even_exponents.push_back(
                        {ma.even_exponents[ia].first,
                         ma.even_exponents[ia].second + mb.even_exponents[ib].second});
                    ++ia, ++ib;
                }
            }
            Rational c = ca * cb;
            if (koszul_merge_sign(ma.odd, mb.odd) < 0) c = -c;
            out.add_term(m, c);
        }
    }
    return out;
}

SuperPolynomial SuperPolynomial::operator*(const Rational& c) const {
    SuperPolynomial out(ring_);
    if (c == 0) return out;
    for (const auto& [m, coeff] : terms_) out.terms_.emplace(m, coeff * c);
    return out;
}

bool SuperPolynomial::operator==(const SuperPolynomial& q) const {
    return ring_ == q.ring_ && terms_ == q.terms_;
}

SuperPolynomial SuperPolynomial::proj_theta_degree(int j) const {
    if (j < 0 || j > ring_.odd_count)
        throw std::invalid_argument("proj_theta_degree: degree out of range");
    SuperPolynomial out(ring_);
    for (const auto& [m, c] : terms_)
        if (m.theta_degree() == j) out.terms_.emplace(m, c);
    return out;
}

SuperPolynomial SuperPolynomial::proj_parity(Parity p) const {
    int want = (p == Parity::Even) ? 0 : 1;
    SuperPolynomial out(ring_);
    for (const auto& [m, c] : terms_)
        if (m.theta_degree() % 2 == want) out.terms_.emplace(m, c);
    return out;
}

std::optional<int> SuperPolynomial::scaling_degree() const {
    if (terms_.empty())
        throw std::invalid_argument("scaling_degree: undefined for the zero polynomial");
    int d = terms_.begin()->first.scaling_degree();
    for (const auto& [m, c] : terms_)
        if (m.scaling_degree() != d) return std::nullopt;
    return d;
}

bool SuperPolynomial::is_parity_homogeneous(Parity p) const {
    int want = (p == Parity::Even) ? 0 : 1;
    for (const auto& [m, c] : terms_)
        if (m.theta_degree() % 2 != want) return false;
    return true;
}

int SuperPolynomial::min_theta_degree() const {
    if (terms_.empty()) throw std::invalid_argument("min_theta_degree: zero polynomial");
    int best = ring_.odd_count + 1;
    for (const auto& [m, c] : terms_) best = std::min(best, m.theta_degree());
    return best;
}

int SuperPolynomial::max_theta_degree() const {
    if (terms_.empty()) throw std::invalid_argument("max_theta_degree: zero polynomial");
    int best = 0;
    for (const auto& [m, c] : terms_) best = std::max(best, m.theta_degree());
    return best;
}

std::string SuperPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational abs_c = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        std::vector<std::string> factors;
        for (const auto& [var, exp] : m.even_exponents) {
            std::string f = ring_.x_name(var);
            if (exp > 1) f += "^" + std::to_string(exp);
            factors.push_back(f);
        }
        for (int a : odd_mask_indices(m.odd)) factors.push_back(ring_.theta_name(a));
        if (factors.empty()) {
            os << rational_to_string(abs_c);
        } else {
            if (abs_c != 1) os << rational_to_string(abs_c) << "*";
            for (std::size_t i = 0; i < factors.size(); ++i) {
                if (i) os << "*";
                os << factors[i];
            }
        }
    }
    return os.str();
}

SuperPolynomial SuperPolynomial::substitute(
    const std::vector<SuperPolynomial>& x_images,
    const std::vector<SuperPolynomial>& theta_images) const {
    if (static_cast<int>(x_images.size()) != ring_.even_count ||
        static_cast<int>(theta_images.size()) != ring_.odd_count)
        throw std::invalid_argument("substitute: image count mismatch");
    for (const auto& img : x_images) {
        require_same_ring(ring_, img.ring(), "substitute");
        if (!img.is_parity_homogeneous(Parity::Even))
            throw std::invalid_argument("substitute: image of an even variable must be parity-even");
    }
    for (const auto& img : theta_images) {
        require_same_ring(ring_, img.ring(), "substitute");
        if (!img.is_parity_homogeneous(Parity::Odd))
            throw std::invalid_argument("substitute: image of an odd variable must be parity-odd");
    }
    SuperPolynomial out(ring_);
    for (const auto& [m, c] : terms_) {
        SuperPolynomial acc = constant(ring_, c);
        for (const auto& [var, exp] : m.even_exponents)
            for (unsigned e = 0; e < exp; ++e) acc = acc * x_images[var];
        for (int a : odd_mask_indices(m.odd)) acc = acc * theta_images[a - 1];
        out = out + acc;
    }
    return out;
}

GeneratorImages identity_images(const RingSignature& ring) {
    GeneratorImages g;
    for (int i = 0; i < ring.even_count; ++i)
        g.x.push_back(SuperPolynomial::variable_x(ring, i));
    for (int a = 1; a <= ring.odd_count; ++a)
        g.theta.push_back(SuperPolynomial::variable_theta(ring, a));
    return g;
}

namespace {

void enumerate_exponents(int vars_left, int first_var, int degree_left,
                         std::vector<std::pair<int, unsigned>>& current,
                         std::vector<SuperMonomial>& out) {
    if (vars_left == 0) {
        if (degree_left == 0) {
            SuperMonomial m;
            m.even_exponents = current;
            out.push_back(m);
        }
        return;
    }
    for (int e = degree_left; e >= 0; --e) {
        if (e > 0) current.push_back({first_var, static_cast<unsigned>(e)});
        enumerate_exponents(vars_left - 1, first_var + 1, degree_left - e, current, out);
        if (e > 0) current.pop_back();
    }
}

}  // namespace

std::vector<SuperMonomial> even_monomials_of_degree(const RingSignature& ring, int degree) {
    std::vector<SuperMonomial> out;
    if (degree < 0) return out;
    std::vector<std::pair<int, unsigned>> current;
    enumerate_exponents(ring.even_count, 0, degree, current, out);
    return out;
}

std::vector<OddMask> odd_masks_of_degree(const RingSignature& ring, int degree) {
    std::vector<OddMask> out;
    if (degree < 0 || degree > ring.odd_count) return out;
    OddMask limit = OddMask{1u} << ring.odd_count;
    for (OddMask mask = 0; mask < limit; ++mask)
        if (std::popcount(mask) == degree) out.push_back(mask);
    return out;
}

}  // namespace supersplit::algebra
