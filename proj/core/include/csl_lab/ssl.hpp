#pragma once

#include "csl_lab/counting.hpp"

#include <map>
#include <optional>
#include <vector>

namespace csl_lab {

/// A similar sublattice c R Γ with its index.
struct SimilarityRecord {
    Isometry r;
    Rational c;
    Lattice sublattice;
    Int index;
};

/// g(m) = number of similar sublattices of index m.
struct SSLTable {
    Lattice lattice;
    Int max_index;
    std::map<Int, Int> rows;

    Int g(const Int& m) const;
};

struct SublatticeOptions {
    Int max_index = 1000;
    std::size_t max_dim = 3;
};

/// Every sublattice of index m, one per Hermite normal form of
/// determinant m.
std::vector<Lattice> enumerate_sublattices(const Lattice& l, const Int& m,
                                           const SublatticeOptions& opts = {});

/// Whether lsub = c R l for some orthogonal R and positive scalar c,
/// decided by integral equivalence of Gram forms: lsub must carry the form
/// index^{2/d} * Gram(l). The scalar c itself may be irrational (index 2 in
/// the plane, say), so the test never constructs it.
bool is_similar(const Lattice& l, const Lattice& lsub);

SSLTable ssl_table(const Lattice& l, const Int& n,
                   const SublatticeOptions& opts = {});

/// The primitive similar sublattice den(R) * R * Γ of a coincidence
/// isometry; its index is den(R)^d.
SimilarityRecord primitive_ssl(const Lattice& l, const Isometry& r);

/// g-spectrum variants of the multiplicativity checkers.
std::vector<Witness> check_multiplicative(const SSLTable& t);
std::optional<Witness> check_supermultiplicative(const SSLTable& t);

}  // namespace csl_lab
