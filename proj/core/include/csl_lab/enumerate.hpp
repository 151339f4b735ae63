#pragma once

#include "csl_lab/csl.hpp"

#include <vector>

namespace csl_lab {

/// One record per symmetry class, sorted by (sigma, class representative).
/// complete asserts that no coincidence isometry with Σ ≤ max_sigma is
/// missing (for enumerate_brute: relative to the denominator bound).
struct EnumerationResult {
    Lattice lattice;
    Int max_sigma;
    std::vector<CoincidenceRecord> records;
    bool complete = false;
};

struct EnumerateOptions {
    std::size_t max_dim = 3;
    Int den_limit = 60;
};

/// Complete class list for Z^2 from the coprime-pair parametrization of
/// its coincidence rotations.
EnumerationResult enumerate_square(const Int& max_sigma);

/// Complete class list for Z^3 from primitive integer quaternions; Σ is
/// the odd part of the quaternion norm, cross-checked against the exact
/// intersection.
EnumerationResult enumerate_cubic(const Int& max_sigma);

/// Generic oracle: every orthogonal matrix whose entries have common
/// denominator n ≤ max_den, assembled from integer points on the sphere
/// of radius n with exact orthogonality pruning; records kept for
/// Σ ≤ max_den.
EnumerationResult enumerate_brute(const Lattice& l, const Int& max_den,
                                  const EnumerateOptions& opts = {});

/// Coincidence spectrum of a rational lattice A Z^d via the standard-basis
/// enumeration: the denominator bound D * max_sigma covers every isometry
/// with Σ ≤ max_sigma, where D clears the conjugation R -> A^{-1} R A.
EnumerationResult enumerate_conjugated(const Lattice& l, const Int& max_sigma,
                                       const EnumerateOptions& opts = {});

/// Parametrized enumerator when one exists for l, else conjugated search.
EnumerationResult enumerate_auto(const Lattice& l, const Int& max_sigma);

/// Least D with D * a_ik * (A^{-1})_lj integral for all entries: the
/// factor converting lattice denominators to standard-basis denominators.
Int conjugation_denominator(const Lattice& l);

}  // namespace csl_lab
