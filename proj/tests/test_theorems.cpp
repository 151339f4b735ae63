#include "csl_lab/presets.hpp"
#include "csl_lab/theorems.hpp"

#include "doctest.h"

#include <stdexcept>

using namespace csl_lab;

TEST_SUITE("theorems") {

TEST_CASE("index of a product divides the product of indices") {
    Lattice z2 = Lattice::standard(2);
    Isometry r5 = *isometry_preset("rot5");
    Isometry r13 = *isometry_preset("rot13");
    CHECK(check_divisibility(z2, r5, r13));
    CHECK(check_divisibility(z2, r5, r5));
    CHECK(check_divisibility(z2, r5, r5.inverse()));
    CHECK(check_divisibility(z2, r13, r5));
}

TEST_CASE("coprime indices multiply") {
    Lattice z2 = Lattice::standard(2);
    Isometry r5 = *isometry_preset("rot5");
    Isometry r13 = *isometry_preset("rot13");
    CHECK(check_coprime_multiplicativity(z2, r5, r13));
    CHECK(check_intersection_identity(z2, r5, r13));
    CHECK_THROWS_AS(check_coprime_multiplicativity(z2, r5, r5), std::invalid_argument);
    CHECK_THROWS_AS(check_intersection_identity(z2, r5, r5), std::invalid_argument);
}

TEST_CASE("tower of a coprime pair collapses") {
    Lattice z2 = Lattice::standard(2);
    TowerReport t = build_tower(z2, *isometry_preset("rot5"), *isometry_preset("rot13"));
    CHECK(t.consistent);
    CHECK(t.failures.empty());
    CHECK(t.m == 5);
    CHECK(t.n == 13);
    CHECK(t.d == 1);
    CHECK(t.k == 1);
    CHECK(t.nodes.at("sum_mid") == t.nodes.at("r1_gamma"));
    CHECK(t.nodes.at("triple") == t.nodes.at("csl_r1r2"));
    CHECK(is_sublattice(t.nodes.at("csl_r1r2"), t.nodes.at("csl_r1")));
    CHECK(index(t.nodes.at("csl_r1r2"), t.nodes.at("gamma")) == 65);
}

TEST_CASE("tower of an inverse pair is maximally degenerate") {
    Lattice z2 = Lattice::standard(2);
    Isometry r5 = *isometry_preset("rot5");
    TowerReport t = build_tower(z2, r5, r5.inverse());
    CHECK(t.consistent);
    CHECK(t.m == 5);
    CHECK(t.n == 5);
    CHECK(t.d == 5);
    CHECK(t.k == 5);
    CHECK(t.nodes.at("csl_r1r2") == z2);
}

TEST_CASE("tower of a repeated factor") {
    Lattice z2 = Lattice::standard(2);
    Isometry r5 = *isometry_preset("rot5");
    TowerReport t = build_tower(z2, r5, r5);
    CHECK(t.consistent);
    CHECK(t.m == 5);
    CHECK(t.n == 5);
    CHECK(t.d * t.k == 1);
    CHECK(index(t.nodes.at("csl_r1r2"), t.nodes.at("gamma")) == 25);
}

TEST_CASE("recovering the factors from a product") {
    Lattice z2 = Lattice::standard(2);
    RecoveryReport rep =
        check_recovery(z2, *isometry_preset("rot5"), *isometry_preset("rot13"));
    CHECK(rep.first);
    CHECK(rep.second_m);
    CHECK_FALSE(rep.second_n);
    CHECK_THROWS_AS(check_recovery(z2, *isometry_preset("rot5"), *isometry_preset("rot5")),
                    std::invalid_argument);
}

TEST_CASE("sweep over the square lattice") {
    EnumerationResult pool = enumerate_square(30);
    PairSweepReport rep = sweep_pairs(pool);
    // 11 classes up to index 30, times 11, times the 8 point-group twists.
    CHECK(rep.pairs == 968);
    CHECK(rep.coprime_pairs == 744);
    CHECK(rep.divisibility_failed == 0);
    CHECK(rep.product_index_failed == 0);
    CHECK(rep.intersection_failed == 0);
    CHECK(rep.tower_failed == 0);
    CHECK(rep.collapse_failed == 0);
    CHECK(rep.recovery_first_failed == 0);
    CHECK(rep.recovery_second_m_failed == 0);
    // The n-scaled reading only survives pairs with m = n = 1.
    CHECK(rep.recovery_second_n_failed == 736);
    CHECK(rep.examples.empty());
}

TEST_CASE("sweep rejects incomplete pools") {
    EnumerationResult pool = enumerate_square(10);
    pool.complete = false;
    CHECK_THROWS_AS(sweep_pairs(pool), std::invalid_argument);
}

TEST_CASE("splitting a coincidence lattice into prime power parts") {
    Lattice z2 = Lattice::standard(2);
    EnumerationResult pool = enumerate_square(65);
    Isometry r65 = *isometry_preset("rot65");
    CoincidenceRecord rec = csl(z2, r65);
    auto dec = decompose_csl(z2, rec, pool);
    REQUIRE(dec.has_value());
    CHECK(dec->exact);
    REQUIRE(dec->parts.size() == 2);
    CHECK(dec->parts[0].sigma == 5);
    CHECK(dec->parts[1].sigma == 13);
    CHECK(intersect(dec->parts[0].csl, dec->parts[1].csl) == rec.csl);

    CoincidenceRecord prime = csl(z2, *isometry_preset("rot5"));
    auto self = decompose_csl(z2, prime, pool);
    REQUIRE(self.has_value());
    CHECK(self->parts.size() == 1);
    CHECK(self->parts[0].csl == prime.csl);
}

TEST_CASE("the rectangular index six lattice does not split") {
    Lattice rect = *lattice_preset("2zx3z");
    EnumerationResult pool = enumerate_auto(rect, 6);
    bool found_six = false;
    for (const auto& rec : pool.records) {
        if (rec.sigma != 6) continue;
        found_six = true;
        CHECK_FALSE(decompose_csl(rect, rec, pool).has_value());
    }
    CHECK(found_six);
}

TEST_CASE("splitting multiple intersections") {
    Lattice z2 = Lattice::standard(2);
    EnumerationResult pool = enumerate_square(65);
    std::vector<Isometry> rs{*isometry_preset("rot5"), *isometry_preset("rot13")};
    auto parts = decompose_mcsl(z2, rs, pool);
    REQUIRE(parts.has_value());
    CHECK(parts->size() == 2);
    Lattice meet = (*parts)[0].lattice;
    for (std::size_t i = 1; i < parts->size(); ++i)
        meet = intersect(meet, (*parts)[i].lattice);
    CHECK(meet == mcsl(z2, rs).lattice);
    for (const auto& part : *parts) {
        auto fs = [&] {
            Int s = part.sigma;
            int distinct = 0;
            for (Int p = 2; p * p <= s; ++p)
                if (s % p == 0) {
                    ++distinct;
                    while (s % p == 0) s /= p;
                }
            if (s > 1) ++distinct;
            return distinct;
        }();
        CHECK(fs <= 1);
    }
}

TEST_CASE("ordered prime factorizations of a rotation") {
    Lattice z2 = Lattice::standard(2);
    EnumerationResult pool = enumerate_square(65);
    Isometry r65 = *isometry_preset("rot65");

    for (std::vector<Int> pi : {std::vector<Int>{5, 13}, std::vector<Int>{13, 5}}) {
        auto dec = pi_decompose(z2, r65, pi, pool);
        REQUIRE(dec.has_value());
        CHECK(dec->ordering == pi);
        REQUIRE(dec->factors.size() == 2);
        CHECK(sigma(z2, dec->factors[0]) == pi[0]);
        CHECK(sigma(z2, dec->factors[1]) == pi[1]);
        CHECK(dec->factors[0] * dec->factors[1] == r65);
    }

    auto with_spare = pi_decompose(z2, r65, {17, 5, 13}, pool);
    REQUIRE(with_spare.has_value());
    CHECK(with_spare->factors[0] == Isometry::identity(2));

    CHECK_FALSE(pi_decompose(z2, r65, {17}, pool).has_value());
    CHECK_THROWS_AS(pi_decompose(z2, r65, {5, 5}, pool), std::invalid_argument);

    auto empty_ok = pi_decompose(z2, Isometry::identity(2), {}, pool);
    REQUIRE(empty_ok.has_value());
    CHECK(empty_ok->factors.empty());
    CHECK_FALSE(pi_decompose(z2, r65, {}, pool).has_value());
}

TEST_CASE("no ordered factorization for the rectangular example") {
    Lattice rect = *lattice_preset("2zx3z");
    EnumerationResult pool = enumerate_auto(rect, 6);
    for (const auto& rec : pool.records) {
        if (rec.sigma != 6) continue;
        CHECK_FALSE(pi_decompose(rect, rec.isometry, {2, 3}, pool).has_value());
        CHECK_FALSE(pi_decompose(rect, rec.isometry, {3, 2}, pool).has_value());
    }
}

TEST_CASE("survey of multiplicativity per lattice") {
    auto entries = open_question_experiment(
        {Lattice::standard(2), *lattice_preset("2zx3z")}, 12);
    REQUIRE(entries.size() == 2);
    CHECK(entries[0].f_multiplicative);
    CHECK(entries[0].f_iso_multiplicative);
    CHECK(entries[0].f_witnesses.empty());
    CHECK_FALSE(entries[0].converse_candidate);

    CHECK_FALSE(entries[1].f_multiplicative);
    CHECK_FALSE(entries[1].f_iso_multiplicative);
    CHECK(!entries[1].f_witnesses.empty());
    CHECK(entries[1].f_witnesses[0].m == 2);
    CHECK(entries[1].f_witnesses[0].n == 3);
    CHECK_FALSE(entries[1].converse_candidate);
    CHECK(entries[1].range == 12);
}

TEST_CASE("composition does not intersect the two lattices") {
    EnumerationResult pool = enumerate_square(30);
    auto found = find_order_sensitivity(pool);
    REQUIRE(found.has_value());
    Lattice z2 = Lattice::standard(2);
    CHECK(found->product_csl == csl(z2, found->r1 * found->r2).csl);
    CHECK(found->intersection ==
          intersect(csl(z2, found->r1).csl, csl(z2, found->r2).csl));
    CHECK_FALSE(found->product_csl == found->intersection);
}

}
