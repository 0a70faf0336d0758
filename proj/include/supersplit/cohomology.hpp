#pragma once

#include <optional>
#include <string>
#include <vector>

#include "supersplit/rational.hpp"

namespace supersplit::cohomology {

// Finite direct sum of line bundles O(a_i) on P^1, kept sorted descending.
class LineBundleSum {
  public:
    LineBundleSum() = default;
    explicit LineBundleSum(std::vector<long> degrees);
    static LineBundleSum line(long degree) { return LineBundleSum({degree}); }
    static LineBundleSum power(long degree, int copies);

    const std::vector<long>& degrees() const { return degrees_; }
    int rank() const { return static_cast<int>(degrees_.size()); }
    long total_degree() const;

    long h0() const;  // sum of max(a_i + 1, 0)
    long h1() const;  // sum of max(-a_i - 1, 0)
    long chi() const { return h0() - h1(); }

    LineBundleSum dual() const;
    LineBundleSum direct_sum(const LineBundleSum& other) const;
    LineBundleSum tensor(const LineBundleSum& other) const;
    LineBundleSum twist(long k) const;  // tensor with O(k)
    LineBundleSum wedge(int k) const;

    bool operator==(const LineBundleSum&) const = default;
    std::string to_string() const;  // e.g. "O(3) + O(3)" or "O(-10)^3"

  private:
    std::vector<long> degrees_;
};

inline LineBundleSum hom(const LineBundleSum& from, const LineBundleSum& to) {
    return from.dual().tensor(to);
}

// Short exact sequence of split bundles; additivity of rank and degree is
// checked on construction.
struct BundleSequence {
    LineBundleSum sub, middle, quotient;
    BundleSequence(LineBundleSum s, LineBundleSum m, LineBundleSum q);
    bool chi_additive() const { return middle.chi() == sub.chi() + quotient.chi(); }
};

// Balanced bundle of the given rank and total degree: s copies of q+1 and
// rank-s of q where total = rank*q + s.
LineBundleSum balanced(int rank, long total_degree);

// T_{P^m} restricted along the degree-d rational normal curve: balanced of
// rank m, total degree d(m+1).
LineBundleSum restrict_tangent_rnc(int m, int d);

// wedge^l T_{P^m} restricted along the curve: rank C(m,l), total degree
// d*(m+1)*C(m-1,l-1), balanced.
LineBundleSum restrict_wedge_tangent_rnc(int m, int d, int l);

// Normal bundle of the degree-d rational normal curve in P^d:
// O(d+2)^(d-1), defined for d >= 2.
LineBundleSum normal_bundle_rnc(int d);

// Odd conormal bundle of the superspace family over the curve: O(-d)^d.
LineBundleSum odd_conormal_rnc(int d);

enum class DeltaStatus { Zero, Injective, Surjective, Isomorphism, NotDetermined };
std::string to_string(DeltaStatus s);

struct ObstructionRow {
    int k = 0;
    bool k_even = false;
    LineBundleSum hom_nu;  // Hom(nu*_{(+/-)^k}, wedge^k T*_-)
    LineBundleSum middle;  // Hom(i* T*_{P^d, (+/-)^k}, wedge^k T*_-)
    LineBundleSum q;       // Hom(T*_{V, (+/-)^k}, wedge^k T*_-)
    DeltaStatus delta = DeltaStatus::NotDetermined;

    long hom_nu_h0() const { return hom_nu.h0(); }
    long hom_nu_h1() const { return hom_nu.h1(); }
    long middle_h0() const { return middle.h0(); }
    long middle_h1() const { return middle.h1(); }
    long q_h0() const { return q.h0(); }
    long q_h1() const { return q.h1(); }
};

struct ObstructionReport {
    int d = 0;
    std::vector<ObstructionRow> rows;  // k = 2..d

    const ObstructionRow* row(int k) const;
    std::string to_text() const;
};

// Per-degree obstruction table for the degree-d rational normal curve family
// (even embedding: odd-k rows carry no content and are reported as zero).
ObstructionReport obstruction_spaces(int d);

enum class FamilyEvidence {
    LinearDegree,          // d = 1
    PureGenerators,        // lambda = 0
    DeltaIsomorphism,      // d = 2, lambda != 0: non-split
    OddConormalVanishing,  // d odd >= 3
    H0Vanishing,           // d even >= 4
};
std::string to_string(FamilyEvidence e);

struct FamilyVerdict {
    bool split = false;
    FamilyEvidence evidence;
    int binding_k = 0;  // row the evidence reads off (0 if none)
    std::string detail;
};

FamilyVerdict decide_family(int d, const Rational& lambda);

// Largest l0 such that the twisted Hom terms have no global sections for all
// l <= l0 and every k in 2..d. nullopt means unbounded (no constraint, d=1).
std::optional<long> serre_twist_bound(int d);

// Per-k threshold; nullopt when the k-th term is identically zero (odd k).
std::optional<long> serre_threshold(int d, int k);

// Twisted Hom term at level k: Hom(nu*_{(+/-)^k}, wedge^k T*_-) (x) O(k*d*l).
LineBundleSum twisted_hom_term(int d, int k, long l);

}  // namespace supersplit::cohomology
