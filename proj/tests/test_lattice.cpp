#include "csl_lab/lattice.hpp"
#include "csl_lab/presets.hpp"

#include "doctest.h"

#include <set>
#include <stdexcept>
#include <vector>

using namespace csl_lab;

namespace {

std::vector<Rational> vec2(long long x, long long y) {
    return {Rational(x), Rational(y)};
}

}  // namespace

TEST_SUITE("lattice") {

TEST_CASE("construction canonicalizes") {
    Lattice z2 = Lattice::standard(2);
    CHECK(z2.den() == 1);
    CHECK(z2.mat() == IntMatrix{{1, 0}, {0, 1}});

    CHECK(Lattice::from_generators(2, IntMatrix{{2, 0}, {0, 2}}) == z2);
    CHECK(Lattice::from_basis(to_rational(IntMatrix{{1, 3}, {0, 1}})) == z2);

    Lattice a = *lattice_preset("2zx3z");
    Lattice b = Lattice::from_basis(to_rational(IntMatrix{{2, 0}, {3, 3}}));
    CHECK(a == b);

    IntMatrix redundant{{2, 0, 2}, {0, 3, 3}};
    CHECK(Lattice::from_generators(1, redundant) == a);
}

TEST_CASE("index and sublattice relation") {
    Lattice z2 = Lattice::standard(2);
    Lattice sub = *lattice_preset("2zx3z");
    CHECK(is_sublattice(sub, z2));
    CHECK_FALSE(is_sublattice(z2, sub));
    CHECK(index(sub, z2) == 6);
    CHECK_THROWS_AS(index(z2, sub), std::invalid_argument);
}

TEST_CASE("membership against the congruence description") {
    // (1/5)[[3,-4],[4,3]] maps Z^2 onto the lattice of points with
    // 3x + 4y = 0 mod 5; the intersection with Z^2 is x = 2y mod 5.
    Lattice csl = Lattice::from_generators(1, IntMatrix{{2, -1}, {1, 2}});
    CHECK(index(csl, Lattice::standard(2)) == 5);
    int hits = 0;
    for (int x = 0; x < 5; ++x)
        for (int y = 0; y < 5; ++y) {
            bool in = csl.contains(vec2(x, y));
            CHECK(in == ((x - 2 * y) % 5 == 0));
            if (in) ++hits;
        }
    CHECK(hits == 5);
    CHECK(csl.contains(vec2(7, 1)));
    CHECK_FALSE(csl.contains({Rational(1, 2), Rational(0)}));
}

TEST_CASE("intersection and sum are dual") {
    Lattice l1 = Lattice::from_generators(1, IntMatrix{{2, -1}, {1, 2}});
    Lattice l2 = *lattice_preset("2zx3z");
    Lattice meet = intersect(l1, l2);
    Lattice join = sum(l1, l2);
    CHECK(is_sublattice(meet, l1));
    CHECK(is_sublattice(meet, l2));
    CHECK(is_sublattice(l1, join));
    CHECK(is_sublattice(l2, join));
    CHECK(index(meet, l1) == index(l2, join));
    CHECK(index(meet, l2) == index(l1, join));
}

TEST_CASE("scale and transform") {
    Lattice z2 = Lattice::standard(2);
    Lattice half = scale(z2, Rational(1, 2));
    CHECK(half.den() == 2);
    CHECK(index(z2, half) == 4);
    CHECK(scale(half, Rational(2)) == z2);

    RatMatrix shear{{Rational(1), Rational(1, 3)}, {Rational(0), Rational(1)}};
    Lattice sheared = transform(shear, z2);
    CHECK(sheared.contains({Rational(1, 3), Rational(1)}));
    CHECK(commensurate(sheared, z2));
    CHECK(commensurate(z2, half));
}

TEST_CASE("deterministic order and keys") {
    Lattice a = Lattice::standard(2);
    Lattice b = *lattice_preset("2zx3z");
    Lattice c = scale(a, Rational(1, 2));
    std::set<Lattice> s{a, b, c, a, b};
    CHECK(s.size() == 3);
    CHECK((a < b) != (b < a));
    CHECK_FALSE(a < a);
}

TEST_CASE("gram and determinant") {
    Lattice l = *lattice_preset("2zx3z");
    CHECK(l.basis_det() == Rational(6));
    RatMatrix g = l.gram();
    CHECK(g(0, 0) == Rational(4));
    CHECK(g(1, 1) == Rational(9));
    CHECK(g(0, 1) == Rational(0));
}

}
