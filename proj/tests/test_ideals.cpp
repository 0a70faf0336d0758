#include <doctest.h>

#include <random>

#include "random_gen.hpp"

#include "supersplit/ideals.hpp"

using namespace supersplit;
using namespace supersplit::algebra;
using namespace supersplit::derivations;
using namespace supersplit::ideals;

namespace {

SuperPolynomial xvar(const RingSignature& r, int i) { return SuperPolynomial::variable_x(r, i); }
SuperPolynomial tvar(const RingSignature& r, int a) {
    return SuperPolynomial::variable_theta(r, a);
}

SuperIdeal affine_ideal(const RingSignature& ring, std::vector<SuperPolynomial> gens) {
    SuperIdeal ideal;
    ideal.ring = ring;
    ideal.generators = std::move(gens);
    return ideal;
}

}  // namespace

TEST_CASE("validate the quadric family") {
    SuperIdeal ideal = quadric_family_ideal(1);
    ValidationReport rep = validate(ideal);
    CHECK(rep.all_scaling_homogeneous);
    CHECK(rep.common_degree == 2);
    CHECK(rep.matches_declared_degree);
    CHECK(rep.all_parity_homogeneous);
    CHECK(rep.even_embedding);
    CHECK(!rep.odd_kernel_nonzero);
}

TEST_CASE("validate flags inhomogeneity and odd kernels") {
    RingSignature ring{3, 2};
    ValidationReport rep = validate(affine_ideal(ring, {xvar(ring, 0) + tvar(ring, 1) * tvar(ring, 2)}));
    CHECK(!rep.all_scaling_homogeneous);

    ValidationReport rep2 = validate(affine_ideal(ring, {xvar(ring, 0) * tvar(ring, 1)}));
    CHECK(rep2.odd_kernel_nonzero);
    CHECK(!rep2.even_embedding);
}

TEST_CASE("reduce_mod_j2") {
    SuperIdeal quadric = quadric_family_ideal(Rational(1, 2));
    ReducedData data = reduce_mod_j2(quadric);
    REQUIRE(data.base_generators.size() == 1);
    CHECK(data.base_generators[0].to_string() == "x0*x2 - x1^2");
    CHECK(data.even_embedding());

    RingSignature ring{3, 2};
    SuperIdeal odd = affine_ideal(
        ring, {xvar(ring, 0) * tvar(ring, 1) - xvar(ring, 0) * tvar(ring, 2)});
    ReducedData odd_data = reduce_mod_j2(odd);
    CHECK(odd_data.base_generators.empty());
    REQUIRE(odd_data.odd_kernel_rows.size() == 1);
    CHECK(odd_data.odd_kernel_rows[0][0] == xvar(ring, 0));
    CHECK(odd_data.odd_kernel_rows[0][1] == -xvar(ring, 0));
    CHECK(!odd_data.even_embedding());

    ReducedData plain = reduce_mod_j2(affine_ideal(ring, {xvar(ring, 0)}));
    REQUIRE(plain.base_generators.size() == 1);
    CHECK(plain.even_embedding());
}

TEST_CASE("max splitting degree") {
    CHECK(max_splitting_degree(quadric_family_ideal(3)) == 2);
    CHECK(!max_splitting_degree(quadric_family_ideal(0)).has_value());

    RingSignature p33{4, 3};
    SuperPolynomial cubic = xvar(p33, 0) * xvar(p33, 1) * xvar(p33, 2);
    SuperPolynomial decorated =
        cubic + tvar(p33, 1) * tvar(p33, 2) * tvar(p33, 3) * Rational(5);
    SuperIdeal family;
    family.ring = p33;
    family.declared_degree = 3;
    family.generators = {decorated};
    CHECK(max_splitting_degree(family) == 3);
}

TEST_CASE("projective lift is blocked: empty cancellation space") {
    SuperIdeal ideal = quadric_family_ideal(1);
    LiftOutcome out = lift_splitting_degree(ideal, 2);
    CHECK(!out.lifted);
    CHECK(out.unknown_count == 0);
    REQUIRE(out.residue.size() == 1);
    CHECK(out.residue[0].to_string() == "t1*t2");
}

TEST_CASE("affine lift removes a removable decoration") {
    RingSignature ring{3, 2};
    SuperIdeal ideal =
        affine_ideal(ring, {xvar(ring, 0) + tvar(ring, 1) * tvar(ring, 2)});
    LiftOutcome out = lift_splitting_degree(ideal, 2);
    REQUIRE(out.lifted);
    CHECK(out.new_system.generators.size() == 1);
    CHECK(out.new_system.generators[0] == xvar(ring, 0));
    CHECK(out.automorphism.x_images[0].to_string() == "x0 - t1*t2");
    CHECK(!max_splitting_degree(out.new_system).has_value());
}

TEST_CASE("affine lift at odd level via theta corrections") {
    RingSignature ring{2, 3};
    SuperPolynomial gen = xvar(ring, 0) * tvar(ring, 1) +
                          xvar(ring, 0) * tvar(ring, 1) * tvar(ring, 2) * tvar(ring, 3);
    SuperIdeal ideal = affine_ideal(ring, {gen});
    CHECK(max_splitting_degree(ideal) == 3);
    LiftOutcome out = lift_splitting_degree(ideal, 3);
    REQUIRE(out.lifted);
    CHECK(out.new_system.generators[0] == xvar(ring, 0) * tvar(ring, 1));
}

TEST_CASE("affine lift can be genuinely blocked") {
    RingSignature ring{2, 3};
    // x0 t1 + t1 t2 t3: every correction at level 3 carries x-degree >= 1,
    // so the x-degree-0 residue survives.
    SuperPolynomial gen =
        xvar(ring, 0) * tvar(ring, 1) + tvar(ring, 1) * tvar(ring, 2) * tvar(ring, 3);
    SuperIdeal ideal = affine_ideal(ring, {gen});
    LiftOutcome out = lift_splitting_degree(ideal, 3);
    CHECK(!out.lifted);
    CHECK(out.unknown_count > 0);
}

TEST_CASE("normalize produces a certificate that round-trips") {
    RingSignature ring{3, 4};
    SuperPolynomial gen = xvar(ring, 0) + tvar(ring, 1) * tvar(ring, 2) +
                          tvar(ring, 1) * tvar(ring, 2) * tvar(ring, 3) * tvar(ring, 4);
    NormalizeOutcome out = normalize(affine_ideal(ring, {gen}));
    CHECK(out.reached_split_form());
    SplitCertificate cert = out.certificate();
    REQUIRE(cert.normalized_generators.size() == 1);
    for (const auto& g : cert.normalized_generators)
        for (int j = 2; j <= ring.odd_count; ++j) CHECK(g.proj_theta_degree(j).is_zero());
    // Applying the recorded automorphism and units to the canonical input
    // must reproduce the normalized system exactly.
    for (std::size_t i = 0; i < cert.normalized_generators.size(); ++i) {
        SuperPolynomial rebuilt =
            cert.unit_multipliers[i] *
            apply(cert.automorphism, out.canonical_input.generators[i]);
        CHECK(rebuilt == cert.normalized_generators[i]);
    }
}

TEST_CASE("lift raises the splitting degree when it succeeds") {
    std::mt19937 rng(10001);
    RingSignature ring{2, 4};
    std::uniform_int_distribution<int> coin(0, 1);
    for (int trial = 0; trial < 20; ++trial) {
        // x0 + (decorations of theta-degree 2): always liftable in affine mode.
        SuperPolynomial gen = xvar(ring, 0);
        SuperPolynomial t12 = tvar(ring, 1) * tvar(ring, 2);
        SuperPolynomial t34 = tvar(ring, 3) * tvar(ring, 4);
        if (coin(rng)) gen = gen + t12 * Rational(1 + trial % 3);
        if (coin(rng)) gen = gen + t34 * Rational(-2);
        gen = gen + t12 * xvar(ring, 1) * Rational(coin(rng) ? 1 : 0);
        SuperIdeal ideal = affine_ideal(ring, {gen});
        auto m = max_splitting_degree(ideal);
        if (!m) continue;
        LiftOutcome out = lift_splitting_degree(ideal, *m);
        REQUIRE(out.lifted);
        auto m2 = max_splitting_degree(out.new_system);
        if (m2) CHECK(*m2 >= *m + 1);
    }
}

TEST_CASE("splitting degree is stable under rescaling and deep automorphisms") {
    std::mt19937 rng(10003);
    RingSignature ring{2, 6};
    SuperPolynomial gen = xvar(ring, 0) + tvar(ring, 1) * tvar(ring, 2);
    SuperIdeal ideal = affine_ideal(ring, {gen});
    auto m = max_splitting_degree(ideal);
    REQUIRE(m == 2);

    // Nonzero scalar rescaling.
    SuperIdeal scaled = affine_ideal(ring, {gen * Rational(-7, 3)});
    CHECK(max_splitting_degree(scaled) == m);

    // Automorphisms of filtration order 4 > m_F leave every level <= m_F alone.
    for (int trial = 0; trial < 10; ++trial) {
        SuperDerivation deep = testgen::random_derivation(rng, ring, 4);
        SuperAutomorphism a = exp(deep);
        auto order = filtration_order(a);
        REQUIRE(order);
        REQUIRE(*order > *m);
        SuperIdeal moved = affine_ideal(ring, {apply(a, gen)});
        CHECK(max_splitting_degree(moved) == m);
    }
}

TEST_CASE("decide_split on the quadric family") {
    Verdict split = decide_split(quadric_family_ideal(0));
    CHECK(split.kind == VerdictKind::Split);
    CHECK(split.evidence == EvidenceKind::TrivialPure);
    REQUIRE(split.certificate.has_value());
    CHECK(split.certificate->automorphism.is_identity());

    Verdict nonsplit = decide_split(quadric_family_ideal(1));
    CHECK(nonsplit.kind == VerdictKind::NonSplit);
    CHECK(nonsplit.evidence == EvidenceKind::DeltaObstruction);
    REQUIRE(nonsplit.residue.has_value());
    CHECK(nonsplit.residue->degree == 2);
    CHECK(!nonsplit.residue->removable_globally);
    REQUIRE(nonsplit.obstructions.has_value());
    CHECK(nonsplit.obstructions->row(2)->delta == cohomology::DeltaStatus::Isomorphism);
    REQUIRE(!nonsplit.lift_log.empty());
    CHECK(nonsplit.lift_log[0].unknown_count == 0);
}

TEST_CASE("decide_split on the quartic family: split in principle") {
    RingSignature p44{5, 4};
    SuperPolynomial base = xvar(p44, 0) * xvar(p44, 2) * xvar(p44, 2) * xvar(p44, 4) -
                           xvar(p44, 1) * xvar(p44, 1) * xvar(p44, 3) * xvar(p44, 3);
    SuperPolynomial gen = base + tvar(p44, 1) * tvar(p44, 2) * tvar(p44, 3) * tvar(p44, 4);
    SuperIdeal family;
    family.ring = p44;
    family.declared_degree = 4;
    family.generators = {gen};

    Verdict v = decide_split(family);
    CHECK(v.kind == VerdictKind::Split);
    CHECK(v.evidence == EvidenceKind::Cohomological);
    CHECK(!v.certificate.has_value());
    REQUIRE(v.residue.has_value());
    CHECK(v.residue->removable_globally);
    REQUIRE(v.obstructions.has_value());
    CHECK(v.obstructions->row(4)->hom_nu_h0() == 0);
}

TEST_CASE("decide_split rejects unrecognized bases") {
    // Rank-2 conic: not a rational normal curve.
    RingSignature ring{3, 2};
    SuperIdeal bad;
    bad.ring = ring;
    bad.declared_degree = 2;
    bad.generators = {xvar(ring, 0) * xvar(ring, 0) - xvar(ring, 1) * xvar(ring, 1) +
                      tvar(ring, 1) * tvar(ring, 2)};
    Verdict v = decide_split(bad);
    CHECK(v.kind == VerdictKind::Undetermined);
    CHECK(v.evidence == EvidenceKind::NotSupported);
}

TEST_CASE("decide_split on linear ideals is always split") {
    std::mt19937 rng(10002);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int m = 1; m <= 4; ++m) {
        for (int n = 1; n <= 4; ++n) {
            RingSignature ring{m + 1, n};
            SuperIdeal ideal;
            ideal.ring = ring;
            ideal.declared_degree = 1;
            SuperPolynomial gen = SuperPolynomial::zero(ring);
            for (int i = 0; i < ring.even_count; ++i)
                gen = gen + xvar(ring, i) * Rational(coeff(rng));
            for (int a = 1; a <= n; ++a) gen = gen + tvar(ring, a) * Rational(coeff(rng));
            if (gen.is_zero()) gen = xvar(ring, 0);
            ideal.generators = {gen};
            CHECK(!max_splitting_degree(ideal).has_value());
            Verdict v = decide_split(ideal);
            CHECK(v.kind == VerdictKind::Split);
            CHECK(v.evidence == EvidenceKind::TrivialPure);
        }
    }
}

TEST_CASE("rnc family detection") {
    CHECK(detect_rnc_family(canonicalize(quadric_family_ideal(Rational(7, 2)))).has_value());
    CHECK(detect_rnc_family(canonicalize(quadric_family_ideal(Rational(7, 2))))->lambda ==
          Rational(7, 2));

    RingSignature ring{3, 2};
    SuperIdeal degenerate;
    degenerate.ring = ring;
    degenerate.declared_degree = 2;
    degenerate.generators = {xvar(ring, 0) * xvar(ring, 1) + tvar(ring, 1) * tvar(ring, 2)};
    CHECK(!detect_rnc_family(canonicalize(degenerate)).has_value());  // rank-2 conic
}

TEST_CASE("canonicalize splits parity-mixed generators") {
    RingSignature ring{2, 2};
    SuperPolynomial mixed = xvar(ring, 0) + tvar(ring, 1);
    SuperIdeal ideal = affine_ideal(ring, {mixed});
    SuperIdeal canonical = canonicalize(ideal);
    REQUIRE(canonical.generators.size() == 2);
    CHECK(canonical.generators[0] == xvar(ring, 0));
    CHECK(canonical.generators[1] == tvar(ring, 1));

    CHECK_THROWS_AS(canonicalize(affine_ideal(ring, {SuperPolynomial::zero(ring)})),
                    std::invalid_argument);
}
