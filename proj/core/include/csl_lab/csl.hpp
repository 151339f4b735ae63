#pragma once

#include "csl_lab/isometry.hpp"

#include <vector>

namespace csl_lab {

/// One coincidence isometry together with its intersection lattice,
/// index, and symmetry class.
struct CoincidenceRecord {
    Isometry isometry;
    Lattice csl;
    Int sigma;
    SymmetryClass cls;
};

/// Rational lattice, rational orthogonal map: the intersection always has
/// finite index, so this reduces to a dimension check.
bool is_coincidence(const Lattice& l, const Isometry& r);

/// L meet r L with its index data; the point group is recomputed.
CoincidenceRecord csl(const Lattice& l, const Isometry& r);

/// As above with a caller-supplied point group (hot path for enumerations).
CoincidenceRecord csl(const Lattice& l, const Isometry& r, const PointGroup& p);

Int sigma(const Lattice& l, const Isometry& r);

/// Intersection lattice of several coincidence isometries.
struct MCSLRecord {
    std::vector<Isometry> isometries;
    Lattice lattice;
    Int sigma;
};

MCSLRecord mcsl(const Lattice& l, const std::vector<Isometry>& rs);

/// All symmetry classes in the pool whose intersection lattice equals
/// target; empty when the pool does not witness it.
std::vector<SymmetryClass> generators_of_csl(const Lattice& target,
                                             const std::vector<CoincidenceRecord>& pool);

}  // namespace csl_lab
