#pragma once

#include "csl_lab/counting.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace csl_lab {

/// Σ(R1 R2) divides Σ(R1) Σ(R2).
bool check_divisibility(const Lattice& l, const Isometry& r1, const Isometry& r2);

/// Σ(R1 R2) = Σ(R1) Σ(R2) for coprime indices; throws on non-coprime input.
bool check_coprime_multiplicativity(const Lattice& l, const Isometry& r1,
                                    const Isometry& r2);

/// For coprime indices, Γ(R1R2) = Γ ∩ R1Γ ∩ R1R2Γ = Γ(R1) ∩ R1Γ(R2), both
/// as exact lattice equalities; throws on non-coprime input.
bool check_intersection_identity(const Lattice& l, const Isometry& r1,
                                 const Isometry& r2);

/// The full lattice tower spanned by Γ, R1Γ and R1R2Γ: their pairwise CSLs,
/// the three sums between neighbouring CSLs, and the triple intersection.
/// d and k are inferred from two designated edges ([R1Γ : Γ(R1)+R1Γ(R2)] and
/// [Γ(R1)+Γ(R1R2) : Γ(R1)]); every other edge index is then an assertion.
struct TowerReport {
    std::map<std::string, Lattice> nodes;
    Int m;
    Int n;
    Int d;
    Int k;
    bool consistent = false;
    std::vector<std::string> failures;
};

TowerReport build_tower(const Lattice& l, const Isometry& r1, const Isometry& r2);

/// Recovery of the single CSLs from Γ(RS), for coprime m = Σ(R), n = Σ(S):
/// first tests nΓ ∩ Γ(RS) = nΓ(R); the two second readings test
/// mRΓ ∩ Γ(RS) against mRΓ(S) and against nRΓ(S).
struct RecoveryReport {
    bool first = false;
    bool second_m = false;
    bool second_n = false;
};

RecoveryReport check_recovery(const Lattice& l, const Isometry& r,
                              const Isometry& s);

/// One pass over ordered class-representative pairs (R1, R2) = (rep_i, Q rep_j)
/// with Q running over the point group; right factors of either rep change no
/// node of the tower, and a common left factor rotates the whole tower, so
/// these pairs exhaust all products up to symmetry. All pair checks are
/// evaluated together; coprime-only identities count against coprime_pairs.
struct PairSweepReport {
    Lattice lattice;
    Int range;
    long long pairs = 0;
    long long coprime_pairs = 0;
    long long divisibility_failed = 0;
    long long product_index_failed = 0;
    long long intersection_failed = 0;
    long long tower_failed = 0;
    long long collapse_failed = 0;
    long long recovery_first_failed = 0;
    long long recovery_second_m_failed = 0;
    long long recovery_second_n_failed = 0;
    std::vector<std::string> examples;
};

PairSweepReport sweep_pairs(const EnumerationResult& pool);

/// Intersection of prime-power-index CSLs equal to the target CSL.
struct CSLDecomposition {
    Lattice target;
    std::vector<CoincidenceRecord> parts;
    bool exact = false;
};

/// Pool-exhaustive search; the pool must be complete up to the target index.
/// Throws if a second distinct decomposition exists, which would falsify the
/// predicted uniqueness.
std::optional<CSLDecomposition> decompose_csl(const Lattice& l,
                                              const CoincidenceRecord& target,
                                              const EnumerationResult& pool);

/// Splits an MCSL into prime-power-index MCSLs of no larger order: each
/// primary part M_p = M + (Σ/p^a)Γ must be expressible as an intersection of
/// at most |Rs| pool CSLs containing it.
std::optional<std::vector<MCSLRecord>> decompose_mcsl(
    const Lattice& l, const std::vector<Isometry>& rs,
    const EnumerationResult& pool);

/// Ordered factorization R = R_1 ... R_n with Σ(R_i) the p_i-power part of
/// Σ(R); factors of index 1 are the identity.
struct PiDecomposition {
    std::vector<Int> ordering;
    std::vector<Isometry> factors;
    Isometry target;
};

std::optional<PiDecomposition> pi_decompose(const Lattice& l, const Isometry& r,
                                            const std::vector<Int>& pi,
                                            const EnumerationResult& pool);

/// Per lattice: whether f and f_iso are multiplicative over the tested range,
/// with every violating coprime pair; converse_candidate marks a lattice with
/// multiplicative f but non-multiplicative f_iso, which no known result rules
/// out.
struct OpenQuestionEntry {
    Lattice lattice;
    Int range;
    bool f_multiplicative = false;
    bool f_iso_multiplicative = false;
    std::vector<Witness> f_witnesses;
    std::vector<Witness> f_iso_witnesses;
    bool converse_candidate = false;
};

std::vector<OpenQuestionEntry> open_question_experiment(
    const std::vector<Lattice>& family, const Int& n);

/// A pair with Γ(R1 R2) different from Γ(R1) ∩ Γ(R2): composing coincidence
/// isometries does not intersect their CSLs in general.
struct OrderSensitivity {
    Isometry r1;
    Isometry r2;
    Lattice product_csl;
    Lattice intersection;
};

std::optional<OrderSensitivity> find_order_sensitivity(
    const EnumerationResult& pool);

}  // namespace csl_lab
