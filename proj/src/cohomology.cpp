#include "supersplit/cohomology.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace supersplit::cohomology {

LineBundleSum::LineBundleSum(std::vector<long> degrees) : degrees_(std::move(degrees)) {
    std::sort(degrees_.begin(), degrees_.end(), std::greater<long>());
}

LineBundleSum LineBundleSum::power(long degree, int copies) {
    if (copies < 0) throw std::invalid_argument("power: negative multiplicity");
    return LineBundleSum(std::vector<long>(copies, degree));
}

long LineBundleSum::total_degree() const {
    long t = 0;
    for (long a : degrees_) t += a;
    return t;
}

long LineBundleSum::h0() const {
    long t = 0;
    for (long a : degrees_) t += std::max(a + 1, 0L);
    return t;
}

long LineBundleSum::h1() const {
    long t = 0;
    for (long a : degrees_) t += std::max(-a - 1, 0L);
    return t;
}

LineBundleSum LineBundleSum::dual() const {
    std::vector<long> out;
    for (long a : degrees_) out.push_back(-a);
    return LineBundleSum(out);
}

LineBundleSum LineBundleSum::direct_sum(const LineBundleSum& other) const {
    std::vector<long> out = degrees_;
    out.insert(out.end(), other.degrees_.begin(), other.degrees_.end());
    return LineBundleSum(out);
}

LineBundleSum LineBundleSum::tensor(const LineBundleSum& other) const {
    std::vector<long> out;
    for (long a : degrees_)
        for (long b : other.degrees_) out.push_back(a + b);
    return LineBundleSum(out);
}

LineBundleSum LineBundleSum::twist(long k) const {
    std::vector<long> out;
    for (long a : degrees_) out.push_back(a + k);
    return LineBundleSum(out);
}

LineBundleSum LineBundleSum::wedge(int k) const {
    if (k < 0 || k > rank()) throw std::invalid_argument("wedge: power out of range");
    std::vector<long> out;
    std::vector<int> idx(k);
    std::function<void(int, int, long)> rec = [&](int pos, int start, long sum) {
        if (pos == k) {
            out.push_back(sum);
            return;
        }
        for (int i = start; i < rank(); ++i) rec(pos + 1, i + 1, sum + degrees_[i]);
    };
    rec(0, 0, 0);
    return LineBundleSum(out);
}

std::string LineBundleSum::to_string() const {
    if (degrees_.empty()) return "0";
    std::ostringstream os;
    std::size_t i = 0;
    bool first = true;
    while (i < degrees_.size()) {
        std::size_t j = i;
        while (j < degrees_.size() && degrees_[j] == degrees_[i]) ++j;
        if (!first) os << " + ";
        first = false;
        os << "O(" << degrees_[i] << ")";
        if (j - i > 1) os << "^" << (j - i);
        i = j;
    }
    return os.str();
}

BundleSequence::BundleSequence(LineBundleSum s, LineBundleSum m, LineBundleSum q)
    : sub(std::move(s)), middle(std::move(m)), quotient(std::move(q)) {
    if (middle.rank() != sub.rank() + quotient.rank())
        throw std::invalid_argument("bundle sequence: rank additivity fails");
    if (middle.total_degree() != sub.total_degree() + quotient.total_degree())
        throw std::invalid_argument("bundle sequence: degree additivity fails");
}

LineBundleSum balanced(int rank, long total_degree) {
    if (rank <= 0) throw std::invalid_argument("balanced: rank must be positive");
    long q = total_degree / rank;
    long s = total_degree - q * rank;
    if (s < 0) {
        s += rank;
        q -= 1;
    }
    std::vector<long> out;
    for (long i = 0; i < s; ++i) out.push_back(q + 1);
    for (long i = s; i < rank; ++i) out.push_back(q);
    return LineBundleSum(out);
}

LineBundleSum restrict_tangent_rnc(int m, int d) {
    if (m < 1 || d < 1) throw std::invalid_argument("restrict_tangent_rnc: need m, d >= 1");
    return balanced(m, static_cast<long>(d) * (m + 1));
}

namespace {

long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

LineBundleSum restrict_wedge_tangent_rnc(int m, int d, int l) {
    if (m < 1 || d < 1 || l < 0 || l > m)
        throw std::invalid_argument("restrict_wedge_tangent_rnc: bad arguments");
    if (l == 0) return LineBundleSum::line(0);
    long rank = binom(m, l);
    long degree = static_cast<long>(d) * (m + 1) * binom(m - 1, l - 1);
    return balanced(static_cast<int>(rank), degree);
}

LineBundleSum normal_bundle_rnc(int d) {
    if (d < 2) throw std::invalid_argument("normal_bundle_rnc: defined for d >= 2");
    return LineBundleSum::power(d + 2, d - 1);
}

LineBundleSum odd_conormal_rnc(int d) {
    if (d < 1) throw std::invalid_argument("odd_conormal_rnc: need d >= 1");
    return LineBundleSum::power(-d, d);
}

std::string to_string(DeltaStatus s) {
    switch (s) {
        case DeltaStatus::Zero: return "zero";
        case DeltaStatus::Injective: return "injective";
        case DeltaStatus::Surjective: return "surjective";
        case DeltaStatus::Isomorphism: return "isomorphism";
        case DeltaStatus::NotDetermined: return "not-determined";
    }
    return "?";
}

namespace {

// Status of the connecting map H^0(hom_nu) -> H^1(q) in the six-term
// sequence, pinned down by the flanking dimensions alone.
DeltaStatus connecting_status(const ObstructionRow& r) {
    long dom = r.hom_nu_h0(), cod = r.q_h1();
    if (dom == 0 || cod == 0) return DeltaStatus::Zero;
    bool injective = r.middle_h0() == 0;   // ker delta = im(H0(middle))
    bool surjective = r.middle_h1() == 0;  // im delta = ker(H1(q) -> H1(middle))
    if (injective && surjective) return DeltaStatus::Isomorphism;
    if (injective) return DeltaStatus::Injective;
    if (surjective) return DeltaStatus::Surjective;
    return DeltaStatus::NotDetermined;
}

}  // namespace

const ObstructionRow* ObstructionReport::row(int k) const {
    for (const auto& r : rows)
        if (r.k == k) return &r;
    return nullptr;
}

std::string ObstructionReport::to_text() const {
    std::vector<std::vector<std::string>> cells;
    cells.push_back({"k", "parity", "hom_nu", "h0,h1", "middle", "h0,h1", "Q", "h0,h1",
                     "delta"});
    auto dims = [](long h0, long h1) {
        return std::to_string(h0) + "," + std::to_string(h1);
    };
    for (const auto& r : rows) {
        cells.push_back({std::to_string(r.k), r.k_even ? "even" : "odd",
                         r.hom_nu.to_string(), dims(r.hom_nu_h0(), r.hom_nu_h1()),
                         r.middle.to_string(), dims(r.middle_h0(), r.middle_h1()),
                         r.q.to_string(), dims(r.q_h0(), r.q_h1()), to_string(r.delta)});
    }
    std::vector<std::size_t> width(cells[0].size(), 0);
    for (const auto& row : cells)
        for (std::size_t i = 0; i < row.size(); ++i)
            width[i] = std::max(width[i], row[i].size());
    std::ostringstream os;
    for (const auto& row : cells) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            os << row[i];
            if (i + 1 < row.size()) os << std::string(width[i] - row[i].size() + 2, ' ');
        }
        os << "\n";
    }
    return os.str();
}

ObstructionReport obstruction_spaces(int d) {
    if (d < 1) throw std::invalid_argument("obstruction_spaces: need d >= 1");
    ObstructionReport report;
    report.d = d;
    LineBundleSum odd_conormal = odd_conormal_rnc(d);       // T*_{V,-}
    LineBundleSum cotangent = LineBundleSum::line(-2);      // T*_V, V ~ P^1
    for (int k = 2; k <= d; ++k) {
        ObstructionRow row;
        row.k = k;
        row.k_even = (k % 2 == 0);
        if (row.k_even) {
            LineBundleSum wedge_k = odd_conormal.wedge(k);
            LineBundleSum nu_star = normal_bundle_rnc(d).dual();
            LineBundleSum ambient_cotangent = restrict_tangent_rnc(d, d).dual();
            row.hom_nu = hom(nu_star, wedge_k);
            row.middle = hom(ambient_cotangent, wedge_k);
            row.q = hom(cotangent, wedge_k);
            row.delta = connecting_status(row);
        } else {
            // Even embedding: the odd conormal kernel is zero, so every Hom
            // term in the odd-parity row vanishes.
            row.delta = DeltaStatus::Zero;
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

std::string to_string(FamilyEvidence e) {
    switch (e) {
        case FamilyEvidence::LinearDegree: return "linear-degree";
        case FamilyEvidence::PureGenerators: return "pure-generators";
        case FamilyEvidence::DeltaIsomorphism: return "delta-isomorphism";
        case FamilyEvidence::OddConormalVanishing: return "odd-conormal-vanishing";
        case FamilyEvidence::H0Vanishing: return "h0-vanishing";
    }
    return "?";
}

FamilyVerdict decide_family(int d, const Rational& lambda) {
    if (d < 1) throw std::invalid_argument("decide_family: need d >= 1");
    FamilyVerdict v;
    if (d == 1) {
        v.split = true;
        v.evidence = FamilyEvidence::LinearDegree;
        v.detail = "degree-1 generators carry no theta-terms of degree >= 2";
        return v;
    }
    if (lambda == 0) {
        v.split = true;
        v.evidence = FamilyEvidence::PureGenerators;
        v.detail = "lambda = 0: the generators are pure base polynomials";
        return v;
    }
    if (d == 2) {
        v.split = false;
        v.evidence = FamilyEvidence::DeltaIsomorphism;
        v.binding_k = 2;
        v.detail =
            "the connecting map on the k=2 row is an isomorphism C -> C, so the "
            "residue class lambda obstructs splitting";
        return v;
    }
    v.split = true;
    v.binding_k = d;
    if (d % 2 == 1) {
        v.evidence = FamilyEvidence::OddConormalVanishing;
        v.detail = "odd k = d: the odd conormal kernel vanishes for the even embedding";
    } else {
        v.evidence = FamilyEvidence::H0Vanishing;
        LineBundleSum term = obstruction_spaces(d).row(d)->hom_nu;
        v.detail = "Hom(nu*, wedge^d T*_-) = " + term.to_string() + " has h0 = 0";
    }
    return v;
}

LineBundleSum twisted_hom_term(int d, int k, long l) {
    if (k % 2 != 0) return LineBundleSum{};  // even embedding: odd terms vanish
    LineBundleSum base = hom(normal_bundle_rnc(d).dual(), odd_conormal_rnc(d).wedge(k));
    return base.twist(static_cast<long>(k) * d * l);
}

std::optional<long> serre_threshold(int d, int k) {
    if (k < 2 || k > d) throw std::invalid_argument("serre_threshold: k out of range");
    if (k % 2 != 0) return std::nullopt;  // no constraint from vanishing rows
    // Base degree d + 2 - d k, twisted by k d l: sections vanish iff
    // d + 2 - d k + k d l <= -1, i.e. l <= (d k - d - 3) / (d k).
    long num = static_cast<long>(d) * k - d - 3;
    long den = static_cast<long>(d) * k;
    long q = num / den;
    if (num % den != 0 && (num < 0) != (den < 0)) --q;  // floor division
    return q;
}

std::optional<long> serre_twist_bound(int d) {
    if (d < 1) throw std::invalid_argument("serre_twist_bound: need d >= 1");
    std::optional<long> best;
    for (int k = 2; k <= d; ++k) {
        auto t = serre_threshold(d, k);
        if (!t) continue;
        best = best ? std::min(*best, *t) : *t;
    }
    return best;
}

}  // namespace supersplit::cohomology
