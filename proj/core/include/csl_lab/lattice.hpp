#pragma once

#include "csl_lab/normal_form.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace csl_lab {

/// Full-rank lattice (1/den) * mat * Z^dim with mat in canonical column
/// form.  The pair (den, mat) is in lowest terms, so equal lattices compare
/// equal bit for bit.
class Lattice {
public:
    /// Empty zero-dimensional lattice, for report fields filled in later.
    Lattice() : dim_(0), den_(1), mat_(0, 0) {}

    /// From an exact basis whose columns generate the lattice.
    static Lattice from_basis(const RatMatrix& basis);

    /// From generators (1/den) * cols * Z^k, k >= dim, full rank.
    static Lattice from_generators(const Int& den, const IntMatrix& cols);

    static Lattice standard(std::size_t dim);  // Z^dim

    std::size_t dim() const { return dim_; }
    const Int& den() const { return den_; }
    const IntMatrix& mat() const { return mat_; }

    RatMatrix basis() const;          // (1/den) * mat
    Rational basis_det() const;       // det(basis), may be negative
    RatMatrix gram() const;           // basis^T * basis

    bool contains(const std::vector<Rational>& v) const;

    friend bool operator==(const Lattice& a, const Lattice& b) {
        return a.dim_ == b.dim_ && a.den_ == b.den_ && a.mat_ == b.mat_;
    }

    /// Deterministic total order for use as a container key.
    friend bool operator<(const Lattice& a, const Lattice& b);

    std::string str() const;

private:
    Lattice(std::size_t dim, Int den, IntMatrix mat)
        : dim_(dim), den_(std::move(den)), mat_(std::move(mat)) {}

    std::size_t dim_;
    Int den_;
    IntMatrix mat_;
};

bool is_sublattice(const Lattice& sub, const Lattice& sup);

/// [sup : sub] as an exact positive integer; throws if sub is not a
/// sublattice of sup.
Int index(const Lattice& sub, const Lattice& sup);

Lattice intersect(const Lattice& a, const Lattice& b);

Lattice sum(const Lattice& a, const Lattice& b);

/// c * L for a positive rational scalar.
Lattice scale(const Lattice& l, const Rational& c);

/// A * L for a nonsingular rational matrix.
Lattice transform(const RatMatrix& a, const Lattice& l);

/// Rational lattices of equal dimension always share a common refinement.
bool commensurate(const Lattice& a, const Lattice& b);

}  // namespace csl_lab
