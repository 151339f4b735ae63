#include "csl_lab/normal_form.hpp"

#include "doctest.h"

#include <stdexcept>

using namespace csl_lab;

namespace {

bool is_zero(const IntMatrix& m) {
    for (const auto& v : m.entries())
        if (v != 0) return false;
    return true;
}

bool canonical_triangular(const IntMatrix& h) {
    for (std::size_t i = 0; i < h.rows(); ++i) {
        if (h(i, i) <= 0) return false;
        for (std::size_t j = 0; j < h.cols(); ++j) {
            if (j < i && h(i, j) != 0) return false;
            if (j > i && (h(i, j) < 0 || h(i, j) >= h(i, i))) return false;
        }
    }
    return true;
}

}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("column normal form of a pinned basis") {
    IntMatrix m{{2, -1}, {1, 2}};
    auto r = hnf(m);
    CHECK(r.h == IntMatrix{{5, 2}, {0, 1}});
    CHECK(is_unimodular(r.u));
    CHECK(m * r.u == r.h);
    CHECK(canonical_triangular(r.h));
}

TEST_CASE("normal form is idempotent and basis-independent") {
    IntMatrix m{{4, 6, 2}, {2, 2, 8}, {0, 2, 4}};
    IntMatrix h = hnf_basis(m);
    CHECK(canonical_triangular(h));
    CHECK(hnf_basis(h) == h);

    IntMatrix u{{1, 4, 0}, {0, 1, 0}, {2, 3, 1}};
    REQUIRE(is_unimodular(u));
    CHECK(hnf_basis(m * u) == h);
    CHECK(csl_lab::abs(det(m)) == det(h));
}

TEST_CASE("rectangular generators") {
    IntMatrix m{{2, 0, 1}, {0, 3, 1}};
    auto r = hnf(m);
    CHECK(r.h.rows() == 2);
    CHECK(r.h.cols() == 2);
    CHECK(canonical_triangular(r.h));
    CHECK(det(r.h) == 1);

    IntMatrix rank_deficient{{1, 2}, {2, 4}};
    CHECK_THROWS_AS(hnf(rank_deficient), std::invalid_argument);
}

TEST_CASE("integer kernel") {
    IntMatrix m{{1, 2, 3}, {2, 4, 6}};
    IntMatrix k = integer_kernel(m);
    CHECK(k.rows() == 3);
    CHECK(k.cols() == 2);
    CHECK(is_zero(m * k));

    IntMatrix id{{1, 0}, {0, 1}};
    CHECK(integer_kernel(id).cols() == 0);

    IntMatrix onerow{{2, 4}};
    IntMatrix k2 = integer_kernel(onerow);
    CHECK(k2.cols() == 1);
    CHECK(k2(0, 0) * 2 + k2(1, 0) * 4 == 0);
    CHECK(csl_lab::gcd(csl_lab::abs(k2(0, 0)), csl_lab::abs(k2(1, 0))) == 1);
}

TEST_CASE("determinant and inverse") {
    IntMatrix m{{3, 1, 4}, {1, 5, 9}, {2, 6, 5}};
    CHECK(det(m) == -90);

    RatMatrix q = to_rational(m);
    RatMatrix inv = inverse(q);
    RatMatrix prod = q * inv;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(prod(i, j) == Rational(i == j ? 1 : 0));

    CHECK(det(q) == Rational(-90));
    RatMatrix singular{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
    CHECK_THROWS_AS(inverse(singular), std::invalid_argument);
}

TEST_CASE("exact solve") {
    RatMatrix a{{Rational(2), Rational(1)}, {Rational(1), Rational(3)}};
    RatMatrix b{{Rational(1)}, {Rational(0)}};
    RatMatrix x = solve(a, b);
    CHECK(x(0, 0) == Rational(3, 5));
    CHECK(x(1, 0) == Rational(-1, 5));
    CHECK(a * x == b);
}

}
