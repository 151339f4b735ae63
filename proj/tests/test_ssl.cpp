#include "csl_lab/presets.hpp"
#include "csl_lab/ssl.hpp"

#include "doctest.h"

#include <set>
#include <stdexcept>

using namespace csl_lab;

namespace {

// For Z^2 the similar sublattices of index m are exactly the Gaussian
// multiples z Z^2 with |z|^2 = m, so their number is the divisor sum of the
// nontrivial character mod 4.
Int square_ssl_oracle(const Int& m) {
    Int total = 0;
    for (Int d = 1; d <= m; ++d) {
        if (m % d != 0) continue;
        if (d % 4 == 1) total += 1;
        if (d % 4 == 3) total -= 1;
    }
    return total;
}

}  // namespace

TEST_SUITE("ssl") {

TEST_CASE("sublattice generation by index") {
    Lattice z2 = Lattice::standard(2);
    auto subs2 = enumerate_sublattices(z2, 2);
    CHECK(subs2.size() == 3);
    std::set<Lattice> distinct(subs2.begin(), subs2.end());
    CHECK(distinct.size() == 3);
    for (const auto& s : subs2) CHECK(index(s, z2) == 2);

    CHECK(enumerate_sublattices(z2, 5).size() == 6);
    CHECK(enumerate_sublattices(z2, 12).size() == 28);

    Lattice z3 = Lattice::standard(3);
    CHECK(enumerate_sublattices(z3, 2).size() == 7);
    CHECK(enumerate_sublattices(z3, 4).size() == 35);

    SublatticeOptions tight;
    tight.max_index = 10;
    CHECK_THROWS_AS(enumerate_sublattices(z2, 50, tight), std::invalid_argument);
}

TEST_CASE("similarity detection") {
    Lattice z2 = Lattice::standard(2);
    CHECK(is_similar(z2, Lattice::from_generators(1, IntMatrix{{1, -2}, {2, 1}})));
    CHECK(is_similar(z2, Lattice::from_generators(1, IntMatrix{{1, -1}, {1, 1}})));
    CHECK(is_similar(z2, Lattice::from_generators(1, IntMatrix{{2, 0}, {0, 2}})));
    CHECK_FALSE(is_similar(z2, Lattice::from_generators(1, IntMatrix{{2, 0}, {0, 1}})));
    CHECK_FALSE(is_similar(z2, *lattice_preset("2zx3z")));
    CHECK_THROWS_AS(is_similar(z2, Lattice::standard(3)), std::invalid_argument);

    Lattice z3 = Lattice::standard(3);
    CHECK(is_similar(z3, scale(z3, Rational(2))));
    CHECK_FALSE(is_similar(z3, Lattice::from_generators(1,
        IntMatrix{{2, 0, 0}, {0, 1, 0}, {0, 0, 1}})));
}

TEST_CASE("counting similar sublattices of the square lattice") {
    SSLTable t = ssl_table(Lattice::standard(2), 30);
    CHECK(t.max_index == 30);
    for (Int m = 1; m <= 30; ++m) CHECK(t.g(m) == square_ssl_oracle(m));
    CHECK(t.g(1) == 1);
    CHECK(t.g(2) == 1);
    CHECK(t.g(3) == 0);
    CHECK(t.g(5) == 2);
    CHECK(t.g(25) == 3);
}

TEST_CASE("counting on the anisotropic lattice") {
    SSLTable t = ssl_table(*lattice_preset("zx5z"), 30);
    CHECK(t.g(1) == 1);
    CHECK(t.g(2) == 0);
    CHECK(t.g(13) == 0);
    CHECK(t.g(26) == 2);

    auto wit = check_multiplicative(t);
    REQUIRE(!wit.empty());
    CHECK(wit[0].m == 2);
    CHECK(wit[0].n == 13);
    CHECK(wit[0].lhs == 2);
    CHECK(wit[0].rhs == 0);
    CHECK(wit[0].kind == "strict-supermultiplicative");
    CHECK_FALSE(check_supermultiplicative(t).has_value());
}

TEST_CASE("the multiplicative case stays multiplicative") {
    SSLTable t = ssl_table(Lattice::standard(2), 50);
    CHECK(check_multiplicative(t).empty());
    CHECK_FALSE(check_supermultiplicative(t).has_value());
}

TEST_CASE("primitive similar sublattice of a coincidence") {
    Lattice z2 = Lattice::standard(2);
    Isometry r5 = *isometry_preset("rot5");
    SimilarityRecord rec = primitive_ssl(z2, r5);
    CHECK(rec.index == 25);
    CHECK(rec.c == Rational(5));
    CHECK(is_sublattice(rec.sublattice, z2));
    CHECK(is_similar(z2, rec.sublattice));

    Lattice z3 = Lattice::standard(3);
    SimilarityRecord rec3 = primitive_ssl(z3, *isometry_preset("quat1110"));
    CHECK(rec3.index == 27);
    CHECK(is_sublattice(rec3.sublattice, z3));
}

}
