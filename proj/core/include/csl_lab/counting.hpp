#pragma once

#include "csl_lab/enumerate.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace csl_lab {

/// Per-index class counts: f_iso counts isometry classes, f_rot rotation
/// classes, f distinct intersection lattices.
struct MultiplicityRow {
    Int f_iso;
    Int f_rot;
    Int f;
};

enum class Multiplicity { f_iso, f_rot, f };

struct MultiplicityTable {
    Lattice lattice;
    Int max_index;
    std::map<Int, MultiplicityRow> rows;
    std::size_t pg_order = 0;
    std::size_t pg_rotation_order = 0;

    /// Zero row for indices with no coincidence.
    MultiplicityRow at(const Int& m) const;
    Int value(const Int& m, Multiplicity which) const;
};

/// Requires a complete enumeration; throws otherwise.
MultiplicityTable multiplicity_table(const EnumerationResult& e);

/// Closed form for the square lattice: 2^r when every prime factor of m is
/// 1 mod 4 (r the number of distinct such primes), else 0; 1 at m = 1.
Int square_formula(const Int& m);

struct Witness {
    Int m;
    Int n;
    Int lhs;
    Int rhs;
    std::string kind;  // "multiplicative-violation" | "strict-supermultiplicative"
};

/// All coprime pairs with lhs = val(m n) differing from rhs = val(m) val(n);
/// lhs > rhs is tagged strict-supermultiplicative, lhs < rhs
/// multiplicative-violation.
std::vector<Witness> check_multiplicative(const std::function<Int(const Int&)>& val,
                                          const Int& max_index);
std::vector<Witness> check_multiplicative(const MultiplicityTable& t,
                                          Multiplicity which);

/// First coprime pair with val(m n) < val(m) val(n), if any; such a pair
/// falsifies supermultiplicativity outright.
std::optional<Witness> check_supermultiplicative(
    const std::function<Int(const Int&)>& val, const Int& max_index);
std::optional<Witness> check_supermultiplicative(const MultiplicityTable& t,
                                                 Multiplicity which);

/// Integer coefficients of a Dirichlet series, nonzero terms only.
struct DirichletData {
    std::map<Int, Int> coefficients;
    std::vector<Int> euler_primes;
    Int truncation;
};

DirichletData dirichlet_coefficients(const MultiplicityTable& t,
                                     Multiplicity which = Multiplicity::f);

/// Expansion of the product over primes p = 1 mod 4 of
/// (1 + p^{-s}) / (1 - p^{-s}), truncated at the given index.
DirichletData euler_product_square(const Int& truncation);

}  // namespace csl_lab
