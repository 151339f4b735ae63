#include "csl_lab/quadratic_form.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>

namespace csl_lab {

namespace {

struct Ldlt {
    std::vector<Rational> d;  // positive pivots
    RatMatrix u;              // unit upper triangular
};

// q(x) = sum_i d_i (x_i + sum_{j>i} u_ij x_j)^2
Ldlt ldlt(const RatMatrix& g) {
    const std::size_t n = g.rows();
    Ldlt f{std::vector<Rational>(n), RatMatrix::identity(n)};
    RatMatrix a = g;
    for (std::size_t i = 0; i < n; ++i) {
        if (!a(i, i).is_positive())
            throw std::invalid_argument("ldlt: form not positive definite");
        f.d[i] = a(i, i);
        for (std::size_t j = i + 1; j < n; ++j) f.u(i, j) = a(i, j) / a(i, i);
        for (std::size_t r = i + 1; r < n; ++r)
            for (std::size_t c = i + 1; c < n; ++c)
                a(r, c) -= a(i, r) * a(i, c) / a(i, i);
    }
    return f;
}

// Largest integer t with (t - center)^2 <= bound, and the smallest; empty
// range flagged by lo > hi.  Exact: a double estimate fixed up by the
// rational predicate.
void integer_window(const Rational& center, const Rational& bound, Int& lo, Int& hi) {
    double c = center.to_double();
    double r = std::sqrt(std::max(0.0, bound.to_double()));
    lo = Int(static_cast<long long>(std::floor(c - r))) - 2;
    hi = Int(static_cast<long long>(std::ceil(c + r))) + 2;
    auto inside = [&](const Int& t) {
        Rational diff = Rational(t) - center;
        return diff * diff <= bound;
    };
    while (lo <= hi && !inside(lo)) ++lo;
    while (hi >= lo && !inside(hi)) --hi;
}

// Remaining form over x_0..x_i with exact budget; below index 0 emit when
// the budget has been consumed exactly.
void enumerate_rec(const Ldlt& f, std::size_t i, std::vector<Int>& x,
                   const Rational& budget, std::vector<std::vector<Int>>& out) {
    if (budget.is_negative()) return;
    if (i == static_cast<std::size_t>(-1)) {
        if (budget.is_zero()) out.push_back(x);
        return;
    }
    Rational center(0);
    for (std::size_t j = i + 1; j < f.u.cols(); ++j)
        center -= f.u(i, j) * Rational(x[j]);
    Int lo, hi;
    integer_window(center, budget / f.d[i], lo, hi);
    for (Int t = lo; t <= hi; ++t) {
        x[i] = t;
        Rational diff = Rational(t) - center;
        enumerate_rec(f, i - 1, x, budget - f.d[i] * diff * diff, out);
    }
    x[i] = 0;
}

}  // namespace

std::vector<std::vector<Int>> vectors_with_norm(const RatMatrix& g, const Rational& c) {
    if (!g.is_square()) throw std::invalid_argument("vectors_with_norm: not square");
    std::vector<std::vector<Int>> out;
    if (c.is_negative()) return out;
    const std::size_t n = g.rows();
    if (c.is_zero()) {
        out.push_back(std::vector<Int>(n, 0));
        return out;
    }
    Ldlt f = ldlt(g);
    std::vector<Int> x(n, 0);
    enumerate_rec(f, n - 1, x, c, out);
    return out;
}

std::vector<IntMatrix> form_isometries(const RatMatrix& g1, const RatMatrix& g2) {
    if (!g1.is_square() || !g2.is_square() || g1.rows() != g2.rows())
        throw std::invalid_argument("form_isometries: dimension mismatch");
    const std::size_t n = g1.rows();
    std::vector<IntMatrix> out;

    // Candidate columns share the norm demanded by g2's diagonal.
    std::vector<std::vector<std::vector<Int>>> candidates(n);
    for (std::size_t j = 0; j < n; ++j) {
        candidates[j] = vectors_with_norm(g1, g2(j, j));
        if (candidates[j].empty()) return out;
    }

    std::vector<std::vector<Int>> chosen(n);
    std::vector<std::vector<Int>> g1_chosen(n);  // g1 * chosen[j], cached

    auto cross = [&](std::size_t i, const std::vector<Int>& v) {
        Rational s(0);
        for (std::size_t r = 0; r < n; ++r) {
            Rational acc(0);
            for (std::size_t c = 0; c < n; ++c) acc += g1(r, c) * Rational(v[c]);
            s += Rational(chosen[i][r]) * acc;
        }
        return s;
    };

    auto rec = [&](auto&& self, std::size_t j) -> void {
        if (j == n) {
            IntMatrix u(n, n);
            for (std::size_t col = 0; col < n; ++col) u.set_column(col, chosen[col]);
            out.push_back(std::move(u));
            return;
        }
        for (const auto& v : candidates[j]) {
            bool ok = true;
            for (std::size_t i = 0; i < j; ++i)
                if (cross(i, v) != g2(i, j)) { ok = false; break; }
            if (!ok) continue;
            chosen[j] = v;
            self(self, j + 1);
        }
    };
    rec(rec, 0);
    return out;
}

BinaryFormShape reduce_binary_form(const RatMatrix& gram) {
    if (gram.rows() != 2 || gram.cols() != 2)
        throw std::invalid_argument("reduce_binary_form: need a 2x2 Gram");
    if (gram(0, 1) != gram(1, 0))
        throw std::invalid_argument("reduce_binary_form: not symmetric");
    Int q = common_denominator(gram);
    IntMatrix m = scale_to_integer(gram, q);
    Int a = m(0, 0), b = m(0, 1), c = m(1, 1);
    if (a <= 0 || c <= 0 || a * c - b * b <= 0)
        throw std::invalid_argument("reduce_binary_form: form not positive definite");
    Int g = gcd(gcd(abs(a), abs(b)), abs(c));
    a /= g; b /= g; c /= g;

    // Gauss reduction to 0 <= 2b <= a <= c; sign flips are GL(2,Z) moves.
    for (;;) {
        Int t = floor_div(2 * b + a, 2 * a);  // nearest shift: |b - t a| <= a/2
        if (t != 0) {
            c += t * t * a - 2 * t * b;
            b -= t * a;
        }
        if (b < 0) b = -b;
        if (a > c) { std::swap(a, c); continue; }
        break;
    }
    return BinaryFormShape{Rational(g, q), a, b, c};
}

}  // namespace csl_lab
