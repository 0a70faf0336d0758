#include "supersplit/ideals.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "supersplit/linsolve.hpp"

namespace supersplit::ideals {

using algebra::even_monomials_of_degree;
using algebra::GeneratorImages;
using algebra::identity_images;
using algebra::MonomialOrder;
using algebra::odd_masks_of_degree;
using algebra::OddMask;
using algebra::SuperMonomial;

SuperIdeal canonicalize(const SuperIdeal& ideal) {
    SuperIdeal out;
    out.ring = ideal.ring;
    out.declared_degree = ideal.declared_degree;
    for (const auto& g : ideal.generators) {
        algebra::require_same_ring(ideal.ring, g.ring(), "canonicalize");
        if (g.is_zero()) throw std::invalid_argument("canonicalize: zero generator");
        SuperPolynomial even = g.proj_parity(Parity::Even);
        SuperPolynomial odd = g.proj_parity(Parity::Odd);
        if (!even.is_zero()) out.generators.push_back(even);
        if (!odd.is_zero()) out.generators.push_back(odd);
    }
    return out;
}

namespace {

// Coefficient of theta_a in the theta-degree-1 part of g, as a pure-x poly.
SuperPolynomial theta_coefficient(const SuperPolynomial& g, int a) {
    SuperPolynomial out(g.ring());
    OddMask want = OddMask{1u} << (a - 1);
    for (const auto& [m, c] : g.terms()) {
        if (m.odd != want) continue;
        SuperMonomial even = m;
        even.odd = 0;
        out.add_term(even, c);
    }
    return out;
}

// Is `target` a combination sum_b u_b * gens_b with parity-odd multipliers of
// the forced scaling degree? Only attempted in projective mode, where the
// multiplier bases are finite.
SpanStatus odd_span_check(const SuperIdeal& canonical,
                          const std::vector<SuperPolynomial>& even_gens,
                          const SuperPolynomial& target) {
    if (!canonical.declared_degree) return SpanStatus::NotChecked;
    auto target_deg = target.scaling_degree();
    if (!target_deg) return SpanStatus::NotChecked;
    const RingSignature& ring = canonical.ring;
    std::vector<SuperPolynomial> columns;
    for (const auto& gen : even_gens) {
        auto gdeg = gen.scaling_degree();
        if (!gdeg) return SpanStatus::NotChecked;
        int mult_deg = *target_deg - *gdeg;
        if (mult_deg < 0) continue;
        for (int t = 1; t <= std::min(mult_deg, ring.odd_count); t += 2) {
            for (OddMask mask : odd_masks_of_degree(ring, t)) {
                for (const auto& ev : even_monomials_of_degree(ring, mult_deg - t)) {
                    SuperMonomial m = ev;
                    m.odd = mask;
                    columns.push_back(SuperPolynomial::monomial(ring, m, 1) * gen);
                }
            }
        }
    }
    // Assemble rows over the union of monomial supports.
    std::map<SuperMonomial, std::size_t, MonomialOrder> row_of;
    auto note_rows = [&](const SuperPolynomial& p) {
        for (const auto& [m, c] : p.terms())
            if (!row_of.count(m)) row_of.emplace(m, row_of.size());
    };
    note_rows(target);
    for (const auto& col : columns) note_rows(col);
    linsolve::Matrix a(row_of.size(), linsolve::Vector(columns.size(), 0));
    linsolve::Vector b(row_of.size(), 0);
    for (const auto& [m, c] : target.terms()) b[row_of[m]] = c;
    for (std::size_t j = 0; j < columns.size(); ++j)
        for (const auto& [m, c] : columns[j].terms()) a[row_of[m]][j] = c;
    return linsolve::solve(a, b) ? SpanStatus::InSpan : SpanStatus::NotInSpan;
}

}  // namespace

ValidationReport validate(const SuperIdeal& ideal) {
    ValidationReport report;
    report.all_scaling_homogeneous = true;
    report.all_parity_homogeneous = true;
    std::optional<int> common;
    bool common_consistent = true;
    for (const auto& g : ideal.generators) {
        if (g.is_zero()) throw std::invalid_argument("validate: zero generator");
        GeneratorValidation v;
        v.scaling_degree = g.scaling_degree();
        if (!v.scaling_degree) {
            report.all_scaling_homogeneous = false;
        } else if (!common) {
            common = v.scaling_degree;
        } else if (*common != *v.scaling_degree) {
            common_consistent = false;
        }
        if (g.is_parity_homogeneous(Parity::Even)) {
            v.parity_homogeneous = true;
            v.parity = Parity::Even;
        } else if (g.is_parity_homogeneous(Parity::Odd)) {
            v.parity_homogeneous = true;
            v.parity = Parity::Odd;
        } else {
            report.all_parity_homogeneous = false;
        }
        report.per_generator.push_back(v);
    }
    if (!common_consistent) report.all_scaling_homogeneous = false;
    if (report.all_scaling_homogeneous) report.common_degree = common;
    if (ideal.declared_degree) {
        report.matches_declared_degree =
            report.common_degree.has_value()
                ? (*report.common_degree == *ideal.declared_degree)
                : ideal.generators.empty();
    }

    SuperIdeal canonical = canonicalize(ideal);
    report.even_embedding = true;
    std::vector<SuperPolynomial> even_gens;
    std::vector<SuperPolynomial> odd_gens;
    for (const auto& g : canonical.generators) {
        if (!g.proj_theta_degree(1).is_zero()) {
            report.even_embedding = false;
            report.odd_kernel_nonzero = true;
        }
        if (g.is_parity_homogeneous(Parity::Even))
            even_gens.push_back(g);
        else
            odd_gens.push_back(g);
    }
    if (odd_gens.empty()) {
        report.odd_span = SpanStatus::NotApplicable;
    } else {
        report.odd_span = SpanStatus::InSpan;
        for (const auto& g : odd_gens) {
            SpanStatus s = odd_span_check(canonical, even_gens, g);
            if (s == SpanStatus::NotChecked || s == SpanStatus::NotInSpan) {
                report.odd_span = s;
                if (s == SpanStatus::NotInSpan) break;
            }
        }
    }
    return report;
}

ReducedData reduce_mod_j2(const SuperIdeal& ideal) {
    SuperIdeal canonical = canonicalize(ideal);
    ReducedData out;
    for (const auto& g : canonical.generators) {
        SuperPolynomial base = g.proj_theta_degree(0);
        if (!base.is_zero()) out.base_generators.push_back(base);
        std::vector<SuperPolynomial> row;
        for (int a = 1; a <= canonical.ring.odd_count; ++a)
            row.push_back(theta_coefficient(g, a));
        out.odd_kernel_rows.push_back(std::move(row));
    }
    return out;
}

bool ReducedData::even_embedding() const {
    for (const auto& row : odd_kernel_rows)
        for (const auto& entry : row)
            if (!entry.is_zero()) return false;
    return true;
}

std::optional<int> max_splitting_degree(const SuperIdeal& ideal) {
    SuperIdeal canonical = canonicalize(ideal);
    std::optional<int> best;
    for (const auto& g : canonical.generators) {
        for (int j = 2; j <= canonical.ring.odd_count; ++j) {
            if (!g.proj_theta_degree(j).is_zero()) {
                best = best ? std::min(*best, j) : j;
                break;
            }
        }
    }
    return best;
}

namespace {

struct Unknown {
    enum class Kind { XCorrection, ThetaCorrection, Unit };
    Kind kind;
    int index;  // variable index, or generator index for units
    SuperMonomial monomial;
};

int max_even_degree(const SuperIdeal& ideal) {
    int best = 0;
    for (const auto& g : ideal.generators)
        for (const auto& [m, c] : g.terms()) best = std::max(best, m.even_degree());
    return best;
}

// Candidate monomials of the given theta-degree. Projective mode forces the
// scaling degree (negative x-degree means the basis is empty); affine mode
// sweeps x-degrees up to the generators' own bound.
std::vector<SuperMonomial> correction_monomials(const SuperIdeal& ideal, int theta_degree,
                                                std::optional<int> forced_scaling_degree) {
    std::vector<SuperMonomial> out;
    const RingSignature& ring = ideal.ring;
    std::vector<int> x_degrees;
    if (forced_scaling_degree) {
        int xd = *forced_scaling_degree - theta_degree;
        if (xd < 0) return out;
        x_degrees.push_back(xd);
    } else {
        for (int xd = 0; xd <= max_even_degree(ideal); ++xd) x_degrees.push_back(xd);
    }
    for (int xd : x_degrees)
        for (OddMask mask : odd_masks_of_degree(ring, theta_degree))
            for (const auto& ev : even_monomials_of_degree(ring, xd)) {
                SuperMonomial m = ev;
                m.odd = mask;
                out.push_back(m);
            }
    return out;
}

SuperPolynomial column_for_unknown(const SuperIdeal& ideal, const Unknown& u, int m,
                                   std::size_t gen_index) {
    const RingSignature& ring = ideal.ring;
    const SuperPolynomial& gen = ideal.generators[gen_index];
    switch (u.kind) {
        case Unknown::Kind::Unit: {
            if (u.index != static_cast<int>(gen_index)) return SuperPolynomial::zero(ring);
            return (SuperPolynomial::monomial(ring, u.monomial, 1) * gen).proj_theta_degree(m);
        }
        case Unknown::Kind::XCorrection: {
            GeneratorImages imgs = identity_images(ring);
            imgs.x[u.index] = imgs.x[u.index] + SuperPolynomial::monomial(ring, u.monomial, 1);
            return (gen.substitute(imgs.x, imgs.theta) - gen).proj_theta_degree(m);
        }
        case Unknown::Kind::ThetaCorrection: {
            GeneratorImages imgs = identity_images(ring);
            imgs.theta[u.index - 1] =
                imgs.theta[u.index - 1] + SuperPolynomial::monomial(ring, u.monomial, 1);
            return (gen.substitute(imgs.x, imgs.theta) - gen).proj_theta_degree(m);
        }
    }
    return SuperPolynomial::zero(ring);
}

}  // namespace

LiftOutcome lift_splitting_degree(const SuperIdeal& ideal, int m) {
    SuperIdeal canonical = canonicalize(ideal);
    auto current = max_splitting_degree(canonical);
    if (!current || *current != m)
        throw std::invalid_argument("lift_splitting_degree: m must be the current splitting degree");
    const RingSignature& ring = canonical.ring;

    LiftOutcome out;
    out.automorphism = SuperAutomorphism::identity(ring);
    out.units.assign(canonical.generators.size(), SuperPolynomial::constant(ring, 1));
    for (const auto& g : canonical.generators) out.residue.push_back(g.proj_theta_degree(m));

    // Correction ansatz: for even m the x-generators absorb the residue; for
    // odd m the theta-generators do. Units of even theta-degree t reach level
    // m through the xi^{m-t} parts of each generator.
    std::vector<Unknown> unknowns;
    bool projective = canonical.declared_degree.has_value();
    std::optional<int> forced = projective ? std::optional<int>(1) : std::nullopt;
    if (m % 2 == 0) {
        for (int i = 0; i < ring.even_count; ++i)
            for (const auto& mono : correction_monomials(canonical, m, forced))
                unknowns.push_back({Unknown::Kind::XCorrection, i, mono});
    } else {
        for (int a = 1; a <= ring.odd_count; ++a)
            for (const auto& mono : correction_monomials(canonical, m, forced))
                unknowns.push_back({Unknown::Kind::ThetaCorrection, a, mono});
    }
    std::optional<int> forced_unit = projective ? std::optional<int>(0) : std::nullopt;
    for (std::size_t gi = 0; gi < canonical.generators.size(); ++gi) {
        for (int t : {m - 1, m}) {
            if (t < 2 || t % 2 != 0) continue;
            if (canonical.generators[gi].proj_theta_degree(m - t).is_zero()) continue;
            for (const auto& mono : correction_monomials(canonical, t, forced_unit))
                unknowns.push_back({Unknown::Kind::Unit, static_cast<int>(gi), mono});
        }
    }
    out.unknown_count = unknowns.size();

    bool residue_zero = true;
    for (const auto& r : out.residue)
        if (!r.is_zero()) residue_zero = false;
    if (residue_zero)
        throw std::logic_error("lift_splitting_degree: no residue at the stated level");

    if (unknowns.empty()) {
        out.note = "cancellation space empty";
        if (projective)
            out.note += " (projective scaling degrees force negative coefficient degrees)";
        return out;
    }

    // Rows: per generator, the level-m monomials reached by the residue or
    // any column.
    std::vector<std::vector<SuperPolynomial>> columns(unknowns.size());
    for (std::size_t j = 0; j < unknowns.size(); ++j)
        for (std::size_t gi = 0; gi < canonical.generators.size(); ++gi)
            columns[j].push_back(column_for_unknown(canonical, unknowns[j], m, gi));

    struct RowKeyLess {
        bool operator()(const std::pair<std::size_t, SuperMonomial>& a,
                        const std::pair<std::size_t, SuperMonomial>& b) const {
            if (a.first != b.first) return a.first < b.first;
            return MonomialOrder{}(a.second, b.second);
        }
    };
    std::map<std::pair<std::size_t, SuperMonomial>, std::size_t, RowKeyLess> row_of;
    auto note_rows = [&](std::size_t gi, const SuperPolynomial& p) {
        for (const auto& [mono, c] : p.terms()) {
            auto key = std::make_pair(gi, mono);
            if (!row_of.count(key)) row_of.emplace(key, row_of.size());
        }
    };
    for (std::size_t gi = 0; gi < canonical.generators.size(); ++gi) {
        note_rows(gi, out.residue[gi]);
        for (std::size_t j = 0; j < unknowns.size(); ++j) note_rows(gi, columns[j][gi]);
    }

    linsolve::Matrix a(row_of.size(), linsolve::Vector(unknowns.size(), 0));
    linsolve::Vector b(row_of.size(), 0);
    for (std::size_t gi = 0; gi < canonical.generators.size(); ++gi)
        for (const auto& [mono, c] : out.residue[gi].terms())
            b[row_of.at({gi, mono})] = -c;
    for (std::size_t j = 0; j < unknowns.size(); ++j)
        for (std::size_t gi = 0; gi < canonical.generators.size(); ++gi)
            for (const auto& [mono, c] : columns[j][gi].terms())
                a[row_of.at({gi, mono})][j] = c;

    auto solution = linsolve::solve_min_support(a, b);
    if (!solution) {
        out.note = "no solution of the cancellation system";
        return out;
    }

    SuperAutomorphism alpha = SuperAutomorphism::identity(ring);
    std::vector<SuperPolynomial> units(canonical.generators.size(),
                                       SuperPolynomial::constant(ring, 1));
    for (std::size_t j = 0; j < unknowns.size(); ++j) {
        const Rational& v = (*solution)[j];
        if (v == 0) continue;
        SuperPolynomial part = SuperPolynomial::monomial(ring, unknowns[j].monomial, v);
        switch (unknowns[j].kind) {
            case Unknown::Kind::XCorrection:
                alpha.x_images[unknowns[j].index] = alpha.x_images[unknowns[j].index] + part;
                break;
            case Unknown::Kind::ThetaCorrection:
                alpha.theta_images[unknowns[j].index - 1] =
                    alpha.theta_images[unknowns[j].index - 1] + part;
                break;
            case Unknown::Kind::Unit:
                units[unknowns[j].index] = units[unknowns[j].index] + part;
                break;
        }
    }
    alpha.check();

    SuperIdeal lifted;
    lifted.ring = ring;
    lifted.declared_degree = canonical.declared_degree;
    for (std::size_t gi = 0; gi < canonical.generators.size(); ++gi)
        lifted.generators.push_back(units[gi] * apply(alpha, canonical.generators[gi]));

    auto new_m = max_splitting_degree(lifted);
    if (new_m && *new_m <= m)
        throw std::logic_error("lift_splitting_degree: level did not increase");

    out.lifted = true;
    out.new_system = std::move(lifted);
    out.automorphism = std::move(alpha);
    out.units = std::move(units);
    out.note = "lifted past level " + std::to_string(m);
    return out;
}

SplitCertificate NormalizeOutcome::certificate() const {
    SplitCertificate cert;
    cert.automorphism = total_automorphism;
    cert.unit_multipliers = total_units;
    cert.normalized_generators = final_system.generators;
    return cert;
}

NormalizeOutcome normalize(const SuperIdeal& ideal) {
    NormalizeOutcome out;
    out.canonical_input = canonicalize(ideal);
    out.final_system = out.canonical_input;
    out.total_automorphism = SuperAutomorphism::identity(ideal.ring);
    out.total_units.assign(out.canonical_input.generators.size(),
                           SuperPolynomial::constant(ideal.ring, 1));
    while (true) {
        auto m = max_splitting_degree(out.final_system);
        if (!m) break;
        LiftOutcome step = lift_splitting_degree(out.final_system, *m);
        LiftStep log_entry{*m, step.lifted, step.unknown_count, step.residue, step.note};
        out.log.push_back(log_entry);
        if (!step.lifted) {
            ObstructionResidue res;
            res.degree = *m;
            for (const auto& r : step.residue)
                if (!r.is_zero()) res.residue.push_back(r);
            out.blocked = std::move(res);
            break;
        }
        // Accumulate: F_new = u_step . alpha_step(F_old), so the running pair
        // becomes U = u_step * alpha_step(U), A = A-then-alpha_step.
        for (std::size_t gi = 0; gi < out.total_units.size(); ++gi)
            out.total_units[gi] =
                step.units[gi] * apply(step.automorphism, out.total_units[gi]);
        out.total_automorphism = compose(out.total_automorphism, step.automorphism);
        out.final_system = step.new_system;
    }
    // Exact round-trip: the certificate data reproduces the final system.
    for (std::size_t gi = 0; gi < out.canonical_input.generators.size(); ++gi) {
        SuperPolynomial rebuilt =
            out.total_units[gi] *
            apply(out.total_automorphism, out.canonical_input.generators[gi]);
        if (rebuilt != out.final_system.generators[gi])
            throw std::logic_error("normalize: certificate bookkeeping failed to round-trip");
    }
    return out;
}

std::string to_string(VerdictKind k) {
    switch (k) {
        case VerdictKind::Split: return "Split";
        case VerdictKind::NonSplit: return "NonSplit";
        case VerdictKind::Undetermined: return "Undetermined";
    }
    return "?";
}

std::string to_string(EvidenceKind e) {
    switch (e) {
        case EvidenceKind::TrivialPure: return "trivial-pure-generators";
        case EvidenceKind::GlobalCertificate: return "global-certificate";
        case EvidenceKind::Cohomological: return "cohomological";
        case EvidenceKind::DeltaObstruction: return "delta-obstruction";
        case EvidenceKind::NotSupported: return "not-supported";
    }
    return "?";
}

std::optional<RncFamilyMatch> detect_rnc_family(const SuperIdeal& canonical) {
    if (!canonical.declared_degree) return std::nullopt;
    int d = *canonical.declared_degree;
    if (d < 2) return std::nullopt;
    if (canonical.ring.even_count != d + 1 || canonical.ring.odd_count != d) return std::nullopt;
    if (canonical.generators.size() != 1) return std::nullopt;
    const SuperPolynomial& g = canonical.generators.front();
    if (!g.is_parity_homogeneous(Parity::Even)) return std::nullopt;
    SuperPolynomial base = g.proj_theta_degree(0);
    if (base.is_zero()) return std::nullopt;
    // The decoration must be exactly lambda theta_1 ... theta_d.
    SuperPolynomial rest = g - base;
    if (rest.is_zero()) return std::nullopt;
    if (rest.terms().size() != 1) return std::nullopt;
    const auto& [mono, coeff] = *rest.terms().begin();
    OddMask full = (OddMask{1u} << d) - 1;
    if (mono.odd != full || !mono.even_exponents.empty()) return std::nullopt;
    if (d == 2) {
        // Smooth conic check: Gram matrix of the quadratic form has rank 3.
        linsolve::Matrix gram(3, linsolve::Vector(3, 0));
        for (const auto& [m, c] : base.terms()) {
            std::vector<int> vars;
            for (const auto& [v, e] : m.even_exponents)
                for (unsigned k = 0; k < e; ++k) vars.push_back(v);
            if (vars.size() != 2) return std::nullopt;
            if (vars[0] == vars[1]) {
                gram[vars[0]][vars[0]] += c;
            } else {
                gram[vars[0]][vars[1]] += c / 2;
                gram[vars[1]][vars[0]] += c / 2;
            }
        }
        if (linsolve::rank(gram) != 3) return std::nullopt;
    }
    return RncFamilyMatch{d, coeff};
}

SuperIdeal quadric_family_ideal(const Rational& lambda) {
    RingSignature ring{3, 2};
    SuperPolynomial x0 = SuperPolynomial::variable_x(ring, 0);
    SuperPolynomial x1 = SuperPolynomial::variable_x(ring, 1);
    SuperPolynomial x2 = SuperPolynomial::variable_x(ring, 2);
    SuperPolynomial t1 = SuperPolynomial::variable_theta(ring, 1);
    SuperPolynomial t2 = SuperPolynomial::variable_theta(ring, 2);
    SuperIdeal ideal;
    ideal.ring = ring;
    ideal.declared_degree = 2;
    ideal.generators.push_back(x0 * x2 - x1 * x1 + t1 * t2 * lambda);
    return ideal;
}

Verdict decide_split(const SuperIdeal& ideal) {
    Verdict verdict;
    ValidationReport report = validate(ideal);
    // Affine systems carry no homogeneity requirement; projective ones must
    // match their declared degree.
    if (ideal.declared_degree && !report.analyzable()) {
        verdict.kind = VerdictKind::Undetermined;
        verdict.evidence = EvidenceKind::NotSupported;
        verdict.detail = "generator system is not homogeneous of the declared degree";
        return verdict;
    }
    NormalizeOutcome outcome = normalize(ideal);
    verdict.lift_log = outcome.log;
    if (outcome.reached_split_form()) {
        verdict.kind = VerdictKind::Split;
        verdict.certificate = outcome.certificate();
        verdict.evidence = outcome.total_automorphism.is_identity()
                               ? EvidenceKind::TrivialPure
                               : EvidenceKind::GlobalCertificate;
        verdict.detail = outcome.total_automorphism.is_identity()
                             ? "maximal splitting degree is already infinite"
                             : "a polynomial automorphism normalizes the generators";
        return verdict;
    }

    verdict.residue = outcome.blocked;
    auto family = detect_rnc_family(outcome.final_system);
    if (!family) {
        verdict.kind = VerdictKind::Undetermined;
        verdict.evidence = EvidenceKind::NotSupported;
        verdict.detail =
            "no global cancellation exists and the base variety is not a recognized "
            "rational normal curve family";
        return verdict;
    }
    if (outcome.blocked->degree != family->d) {
        verdict.kind = VerdictKind::Undetermined;
        verdict.evidence = EvidenceKind::NotSupported;
        verdict.detail = "residue level does not match the recognized curve degree";
        return verdict;
    }
    verdict.obstructions = cohomology::obstruction_spaces(family->d);
    cohomology::FamilyVerdict fam = cohomology::decide_family(family->d, family->lambda);
    if (fam.split) {
        verdict.kind = VerdictKind::Split;
        verdict.evidence = EvidenceKind::Cohomological;
        verdict.detail = to_string(fam.evidence) + ": " + fam.detail +
                         " (no global polynomial automorphism claimed)";
        verdict.residue->removable_globally = true;
    } else {
        verdict.kind = VerdictKind::NonSplit;
        verdict.evidence = EvidenceKind::DeltaObstruction;
        verdict.detail = to_string(fam.evidence) + ": " + fam.detail;
        verdict.residue->removable_globally = false;
    }
    return verdict;
}

}  // namespace supersplit::ideals
