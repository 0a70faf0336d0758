#include <doctest.h>

#include <random>

#include "supersplit/cohomology.hpp"

using namespace supersplit;
using namespace supersplit::cohomology;

namespace {

// Independent oracle: global sections of O(k) on P^1 are the degree-k binary
// forms, counted by enumerating monomials u^a v^b with a + b = k.
long sections_by_monomial_count(long k) {
    long count = 0;
    for (long a = 0; a + 0 <= k; ++a)
        for (long b = 0; a + b <= k; ++b)
            if (a + b == k) ++count;
    return count;
}

// Serre duality gives the h1 oracle as an independent second route.
long h1_by_duality(long k) { return sections_by_monomial_count(-k - 2); }

}  // namespace

TEST_CASE("h0 and h1 of standard bundles") {
    CHECK(LineBundleSum::line(0).h0() == 1);
    CHECK(LineBundleSum::line(0).h1() == 0);
    CHECK(LineBundleSum::line(-2).h1() == 1);
    CHECK(LineBundleSum::power(-10, 3).h0() == 0);
}

TEST_CASE("cohomology matches the monomial-counting oracle") {
    for (long k = -20; k <= 20; ++k) {
        LineBundleSum l = LineBundleSum::line(k);
        CHECK(l.h0() == sections_by_monomial_count(k));
        CHECK(l.h1() == h1_by_duality(k));
    }
}

TEST_CASE("bundle arithmetic") {
    LineBundleSum two_minus2 = LineBundleSum::power(-2, 2);
    CHECK(two_minus2.wedge(2) == LineBundleSum::line(-4));
    CHECK(hom(LineBundleSum::line(-4), LineBundleSum::line(-4)) == LineBundleSum::line(0));

    std::mt19937 rng(9001);
    std::uniform_int_distribution<long> deg(-6, 6);
    std::uniform_int_distribution<int> rank(1, 5);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<long> degrees;
        int r = rank(rng);
        for (int i = 0; i < r; ++i) degrees.push_back(deg(rng));
        LineBundleSum l(degrees);
        CHECK(l.dual().dual() == l);
        LineBundleSum m({deg(rng), deg(rng)});
        CHECK(hom(l, m) == l.dual().tensor(m));
        LineBundleSum top = l.wedge(l.rank());
        CHECK(top.rank() == 1);
        CHECK(top.total_degree() == l.total_degree());
    }
}

TEST_CASE("restricted tangent bundles are balanced") {
    CHECK(restrict_tangent_rnc(2, 2) == LineBundleSum({3, 3}));
    CHECK(restrict_tangent_rnc(1, 1) == LineBundleSum::line(2));
    CHECK(restrict_tangent_rnc(3, 2) == LineBundleSum({3, 3, 2}));
}

TEST_CASE("restricted wedge powers of the tangent bundle") {
    for (int m = 1; m <= 4; ++m) {
        for (int d = 1; d <= 4; ++d) {
            for (int l = 1; l <= m; ++l) {
                LineBundleSum w = restrict_wedge_tangent_rnc(m, d, l);
                // Rank C(m, l), total degree d (m+1) C(m-1, l-1), max spread 1.
                long expected_rank = 1;
                for (int i = 1; i <= l; ++i) expected_rank = expected_rank * (m - l + i) / i;
                CHECK(w.rank() == expected_rank);
                CHECK(w.degrees().front() - w.degrees().back() <= 1);
            }
        }
    }
    CHECK(restrict_wedge_tangent_rnc(2, 2, 1) == restrict_tangent_rnc(2, 2));
    CHECK(restrict_wedge_tangent_rnc(2, 2, 2) == LineBundleSum::line(6));
}

TEST_CASE("normal bundle of the rational normal curve") {
    CHECK(normal_bundle_rnc(2) == LineBundleSum::line(4));
    CHECK(normal_bundle_rnc(3) == LineBundleSum::power(5, 2));
    CHECK_THROWS_AS(normal_bundle_rnc(1), std::invalid_argument);
    for (int d = 2; d <= 8; ++d) {
        // Sequence additivity: deg nu = d(m+1) - 2 with m = d.
        CHECK(normal_bundle_rnc(d).total_degree() ==
              static_cast<long>(d) * d + d - 2);
    }
}

TEST_CASE("the d=2 normal bundle sequence is chi-additive") {
    BundleSequence seq(LineBundleSum::line(2), restrict_tangent_rnc(2, 2),
                       LineBundleSum::line(4));
    CHECK(seq.sub.chi() == 3);
    CHECK(seq.quotient.chi() == 5);
    CHECK(seq.middle.chi() == 8);
    CHECK(seq.chi_additive());
    CHECK_THROWS_AS(BundleSequence(LineBundleSum::line(2), LineBundleSum::line(2),
                                   LineBundleSum::line(4)),
                    std::invalid_argument);
}

TEST_CASE("obstruction table for the superspace quadric") {
    ObstructionReport rep = obstruction_spaces(2);
    REQUIRE(rep.rows.size() == 1);
    const ObstructionRow& row = rep.rows[0];
    CHECK(row.k == 2);
    CHECK(row.hom_nu == LineBundleSum::line(0));
    CHECK(row.hom_nu_h0() == 1);
    CHECK(row.hom_nu_h1() == 0);
    CHECK(row.middle == LineBundleSum::power(-1, 2));
    CHECK(row.middle_h0() == 0);
    CHECK(row.middle_h1() == 0);
    CHECK(row.q == LineBundleSum::line(-2));
    CHECK(row.q_h1() == 1);
    CHECK(row.delta == DeltaStatus::Isomorphism);
}

TEST_CASE("obstruction tables for higher degrees") {
    ObstructionReport rep4 = obstruction_spaces(4);
    const ObstructionRow* top = rep4.row(4);
    REQUIRE(top != nullptr);
    CHECK(top->hom_nu == LineBundleSum::power(-10, 3));
    CHECK(top->hom_nu_h0() == 0);

    ObstructionReport rep3 = obstruction_spaces(3);
    for (const auto& row : rep3.rows) {
        if (row.k % 2 == 0) continue;
        CHECK(row.hom_nu.rank() == 0);
        CHECK(row.middle.rank() == 0);
        CHECK(row.q.rank() == 0);
        CHECK(row.delta == DeltaStatus::Zero);
    }
}

TEST_CASE("six-term exactness bookkeeping") {
    for (int d = 2; d <= 7; ++d) {
        ObstructionReport rep = obstruction_spaces(d);
        for (const auto& row : rep.rows) {
            // Alternating sum of the six cohomology dimensions vanishes.
            long alt = row.q_h0() - row.middle_h0() + row.hom_nu_h0() - row.q_h1() +
                       row.middle_h1() - row.hom_nu_h1();
            CHECK(alt == 0);
        }
    }
}

TEST_CASE("family decision table") {
    CHECK(!decide_family(2, 1).split);
    CHECK(decide_family(2, 1).evidence == FamilyEvidence::DeltaIsomorphism);
    CHECK(decide_family(2, 0).split);
    CHECK(decide_family(5, 7).split);
    CHECK(decide_family(5, 7).evidence == FamilyEvidence::OddConormalVanishing);
    CHECK(decide_family(4, Rational(-2)).split);
    CHECK(decide_family(4, Rational(-2)).evidence == FamilyEvidence::H0Vanishing);
    CHECK(decide_family(1, 3).split);
}

TEST_CASE("serre twist bound") {
    CHECK(serre_twist_bound(2) == -1);
    CHECK(twisted_hom_term(2, 2, 1) == LineBundleSum::line(4));
    CHECK(twisted_hom_term(2, 2, -1) == LineBundleSum::line(-4));
    auto bound4 = serre_twist_bound(4);
    REQUIRE(bound4.has_value());
    CHECK(*bound4 >= 0);
    CHECK(!serre_twist_bound(1).has_value());

    for (int d : {2, 3, 4, 5, 6}) {
        for (int k = 2; k <= d; k += 1) {
            auto threshold = serre_threshold(d, k);
            if (!threshold) continue;
            long prev = -1;
            for (long l = -5; l <= 5; ++l) {
                long h0 = twisted_hom_term(d, k, l).h0();
                CHECK(h0 >= prev);  // monotone in the twist
                prev = h0;
                CHECK((h0 == 0) == (l <= *threshold));
            }
        }
    }
}
