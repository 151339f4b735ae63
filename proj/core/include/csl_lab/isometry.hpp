#pragma once

#include "csl_lab/lattice.hpp"

#include <vector>

namespace csl_lab {

/// Exact orthogonal matrix: mat^T mat = 1, so det = +-1.
class Isometry {
public:
    static Isometry from_matrix(const RatMatrix& m);
    static Isometry identity(std::size_t dim);

    std::size_t dim() const { return mat_.rows(); }
    const RatMatrix& mat() const { return mat_; }

    bool is_rotation() const { return det_plus_; }

    Isometry inverse() const;  // transpose

    friend Isometry operator*(const Isometry& a, const Isometry& b);

    friend bool operator==(const Isometry& a, const Isometry& b) {
        return a.mat_ == b.mat_;
    }
    friend bool operator<(const Isometry& a, const Isometry& b) {
        return lex_less(a.mat_, b.mat_);
    }

private:
    Isometry(RatMatrix m, bool det_plus) : mat_(std::move(m)), det_plus_(det_plus) {}
    RatMatrix mat_;
    bool det_plus_;
};

inline Isometry make_isometry(const RatMatrix& m) { return Isometry::from_matrix(m); }

/// Finite group of isometries fixing a lattice, sorted deterministically.
struct PointGroup {
    std::vector<Isometry> elements;
    std::size_t order = 0;
    std::size_t rotation_order = 0;

    bool contains(const Isometry& r) const;
};

/// All orthogonal maps r with r L = L, found by exact search over
/// norm-preserving integer coordinate maps of the Gram form.
PointGroup point_group(const Lattice& l);

/// Smallest n > 0 with n r L a sublattice of L.
Int den(const Lattice& l, const Isometry& r);

/// Right coset r P, canonically represented by its lexicographically
/// least member.
struct SymmetryClass {
    Isometry representative;

    friend bool operator==(const SymmetryClass& a, const SymmetryClass& b) {
        return a.representative == b.representative;
    }
    friend bool operator<(const SymmetryClass& a, const SymmetryClass& b) {
        return a.representative < b.representative;
    }
};

SymmetryClass symmetry_class(const Isometry& r, const PointGroup& p);

bool same_class(const Isometry& a, const Isometry& b, const PointGroup& p);

}  // namespace csl_lab
