#include "csl_lab/csl.hpp"
#include "csl_lab/enumerate.hpp"
#include "csl_lab/presets.hpp"

#include "doctest.h"

#include <stdexcept>

using namespace csl_lab;

TEST_SUITE("csl") {

TEST_CASE("rotation by the 3-4-5 angle") {
    Lattice z2 = Lattice::standard(2);
    Isometry r = *isometry_preset("rot5");
    REQUIRE(is_coincidence(z2, r));
    CoincidenceRecord rec = csl(z2, r);
    CHECK(rec.sigma == 5);
    CHECK(rec.csl == Lattice::from_generators(1, IntMatrix{{2, -1}, {1, 2}}));
    CHECK(index(rec.csl, z2) == 5);
    CHECK(is_sublattice(rec.csl, transform(r.mat(), z2)));
}

TEST_CASE("index respects inverses and group factors") {
    Lattice z2 = Lattice::standard(2);
    Isometry r = *isometry_preset("rot13");
    CHECK(sigma(z2, r) == 13);
    CHECK(sigma(z2, r.inverse()) == 13);
    CHECK(csl(z2, r.inverse()).csl == transform(r.inverse().mat(), csl(z2, r).csl));

    Isometry q = *isometry_preset("rot90");
    CHECK(sigma(z2, q * r) == 13);
    CHECK(csl(z2, q * r).csl == transform(q.mat(), csl(z2, r).csl));
    CHECK(csl(z2, r * q).csl == csl(z2, r).csl);
    CHECK(sigma(z2, *isometry_preset("rot65")) == 65);
}

TEST_CASE("point group members are trivial coincidences") {
    Lattice z2 = Lattice::standard(2);
    CHECK(sigma(z2, *isometry_preset("mirror2")) == 1);
    CHECK(csl(z2, *isometry_preset("rot90")).csl == z2);
}

TEST_CASE("cubic lattice quaternion rotations") {
    Lattice z3 = Lattice::standard(3);
    CHECK(sigma(z3, *isometry_preset("quat1110")) == 3);
    CHECK(sigma(z3, *isometry_preset("quat2100")) == 5);
    CoincidenceRecord rec = csl(z3, *isometry_preset("quat1110"));
    CHECK(index(rec.csl, z3) == 3);
}

TEST_CASE("rectangular lattice") {
    Lattice rect = *lattice_preset("2zx3z");
    Isometry q = *isometry_preset("rot90");
    REQUIRE(is_coincidence(rect, q));
    CoincidenceRecord rec = csl(rect, q);
    CHECK(rec.sigma == 6);
    CHECK(rec.csl == Lattice::from_generators(1, IntMatrix{{6, 0}, {0, 6}}));
}

TEST_CASE("multiple intersections") {
    Lattice z2 = Lattice::standard(2);
    std::vector<Isometry> rs{*isometry_preset("rot5"), *isometry_preset("rot13")};
    MCSLRecord m = mcsl(z2, rs);
    CHECK(m.sigma == 65);
    CHECK(m.lattice ==
          intersect(csl(z2, rs[0]).csl, csl(z2, rs[1]).csl));

    std::vector<Isometry> pair{rs[0], rs[0].inverse()};
    MCSLRecord m2 = mcsl(z2, pair);
    CHECK(m2.sigma == 25);
}

TEST_CASE("finding the generators of a lattice") {
    Lattice z2 = Lattice::standard(2);
    EnumerationResult pool = enumerate_square(30);
    Isometry r = *isometry_preset("rot5");
    Lattice target = csl(z2, r).csl;
    auto gens = generators_of_csl(target, pool.records);
    REQUIRE(gens.size() == 1);
    PointGroup p = point_group(z2);
    CHECK(gens[0] == symmetry_class(r, p));
    CHECK(generators_of_csl(*lattice_preset("2zx3z"), pool.records).empty());
}

}
