#pragma once

#include <optional>
#include <string>
#include <vector>

#include "supersplit/cohomology.hpp"
#include "supersplit/derivations.hpp"
#include "supersplit/superalgebra.hpp"

namespace supersplit::ideals {

using algebra::Parity;
using algebra::RingSignature;
using algebra::SuperPolynomial;
using derivations::SuperAutomorphism;

// Generator system F = {P^alpha} for a graded ideal over P^{m|n} (when
// declared_degree is set) or affine superspace (when it is not).
struct SuperIdeal {
    RingSignature ring;
    std::vector<SuperPolynomial> generators;
    std::optional<int> declared_degree;
};

// Splits parity-mixed generators into their even and odd components, each a
// generator of its own. Zero generators are rejected.
SuperIdeal canonicalize(const SuperIdeal& ideal);

enum class SpanStatus { NotApplicable, InSpan, NotInSpan, NotChecked };

struct GeneratorValidation {
    std::optional<int> scaling_degree;  // nullopt: not homogeneous
    bool parity_homogeneous = false;
    Parity parity = Parity::Even;  // meaningful when parity_homogeneous
};

struct ValidationReport {
    std::vector<GeneratorValidation> per_generator;  // input order
    bool all_scaling_homogeneous = false;
    std::optional<int> common_degree;
    bool matches_declared_degree = true;
    bool all_parity_homogeneous = false;
    bool even_embedding = false;    // every P^{alpha|a} = 0
    bool odd_kernel_nonzero = false;
    SpanStatus odd_span = SpanStatus::NotApplicable;

    // Good enough to run the degree-graded analysis.
    bool analyzable() const { return all_scaling_homogeneous && matches_declared_degree; }
};

ValidationReport validate(const SuperIdeal& ideal);

// xi^0 and xi^1 data of the canonical generators: the base ideal downstairs
// and the syzygy rows cutting the odd conormal sheaf.
struct ReducedData {
    std::vector<SuperPolynomial> base_generators;             // nonzero xi^0 parts
    std::vector<std::vector<SuperPolynomial>> odd_kernel_rows;  // row per generator, column per theta_a
    bool even_embedding() const;
};

ReducedData reduce_mod_j2(const SuperIdeal& ideal);

// min{ j >= 2 : xi^j(F) != 0 }; nullopt encodes infinity (split normal form).
std::optional<int> max_splitting_degree(const SuperIdeal& ideal);

struct LiftStep {
    int m = 0;
    bool lifted = false;
    std::size_t unknown_count = 0;
    std::vector<SuperPolynomial> residue;  // per generator, xi^m parts
    std::string note;
};

// One round of the degree-lifting search at level m = max_splitting_degree:
// homogeneous generator corrections plus unit multipliers, solved exactly.
struct LiftOutcome {
    bool lifted = false;
    SuperIdeal new_system;                   // valid when lifted
    SuperAutomorphism automorphism;          // identity when not lifted
    std::vector<SuperPolynomial> units;      // one per generator
    std::vector<SuperPolynomial> residue;    // xi^m parts that survive (when blocked)
    std::size_t unknown_count = 0;
    std::string note;
};

LiftOutcome lift_splitting_degree(const SuperIdeal& ideal, int m);

struct SplitCertificate {
    SuperAutomorphism automorphism;
    std::vector<SuperPolynomial> unit_multipliers;       // per canonical generator
    std::vector<SuperPolynomial> normalized_generators;  // system with m = infinity
};

struct ObstructionResidue {
    int degree = 0;                         // m_F of the maximally normalized system
    std::vector<SuperPolynomial> residue;   // surviving xi^m components
    bool removable_globally = false;
};

// Full lift loop; stops at m = infinity or the first blocked level.
struct NormalizeOutcome {
    SuperIdeal canonical_input;
    SuperIdeal final_system;
    SuperAutomorphism total_automorphism;
    std::vector<SuperPolynomial> total_units;
    std::optional<ObstructionResidue> blocked;
    std::vector<LiftStep> log;

    bool reached_split_form() const { return !blocked.has_value(); }
    SplitCertificate certificate() const;  // valid when reached_split_form()
};

NormalizeOutcome normalize(const SuperIdeal& ideal);

enum class VerdictKind { Split, NonSplit, Undetermined };
std::string to_string(VerdictKind k);

enum class EvidenceKind {
    TrivialPure,        // generators already in split normal form
    GlobalCertificate,  // a polynomial automorphism plus units normalizes F
    Cohomological,      // split by vanishing evidence, no global witness claimed
    DeltaObstruction,   // nonzero residue meets an injective connecting map
    NotSupported,       // base variety outside the cohomology module's reach
};
std::string to_string(EvidenceKind e);

struct Verdict {
    VerdictKind kind = VerdictKind::Undetermined;
    EvidenceKind evidence = EvidenceKind::NotSupported;
    std::string detail;
    std::optional<SplitCertificate> certificate;
    std::optional<ObstructionResidue> residue;
    std::vector<LiftStep> lift_log;
    std::optional<cohomology::ObstructionReport> obstructions;
};

Verdict decide_split(const SuperIdeal& ideal);

// Shape recognizer for the rational-normal-curve family over P^{d|d}:
// a single degree-d generator P(x) + lambda theta_1 ... theta_d. For d = 2
// the conic P must be smooth (Gram rank 3).
struct RncFamilyMatch {
    int d = 0;
    Rational lambda;
};
std::optional<RncFamilyMatch> detect_rnc_family(const SuperIdeal& canonical);

// Convenience constructor for that family at d = 2 (the superspace quadric)
// and its base quadric x0 x2 - x1^2.
SuperIdeal quadric_family_ideal(const Rational& lambda);

}  // namespace supersplit::ideals
