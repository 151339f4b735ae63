#include "csl_lab/normal_form.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace csl_lab {

namespace {

void swap_cols(IntMatrix& a, std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
}

void negate_col(IntMatrix& a, std::size_t j) {
    for (std::size_t r = 0; r < a.rows(); ++r) a(r, j) = -a(r, j);
}

// col_j += t * col_i
void addmul_col(IntMatrix& a, std::size_t j, std::size_t i, const Int& t) {
    if (t == 0) return;
    for (std::size_t r = 0; r < a.rows(); ++r) a(r, j) += t * a(r, i);
}

struct Reduction {
    IntMatrix a;                     // echelon form, pivot columns at the right
    IntMatrix u;                     // column operation record, a_in * u == a
    std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col), bottom row first
};

// Column elimination working up from the bottom row.  Pivot columns end up
// rightmost; columns left of them are zero.  Keeps row i of processed pivots
// untouched because all remaining active columns are zero there.
Reduction column_reduce(const IntMatrix& m) {
    const std::size_t d = m.rows(), k = m.cols();
    Reduction red{m, IntMatrix::identity(k), {}};
    IntMatrix& a = red.a;
    IntMatrix& u = red.u;

    std::size_t active = k;  // columns 0..active-1 still in play
    for (std::size_t ii = d; ii-- > 0;) {
        std::size_t nz = active;
        for (std::size_t j = 0; j < active; ++j)
            if (a(ii, j) != 0) { nz = j; break; }
        if (nz == active) continue;  // no pivot in this row

        // Gather the gcd of row ii into column active-1 by paired
        // Euclidean steps, zeroing the rest of the row.
        std::size_t p = active - 1;
        if (a(ii, p) == 0) {
            swap_cols(a, p, nz);
            swap_cols(u, p, nz);
        }
        for (std::size_t j = 0; j < p; ++j) {
            while (a(ii, j) != 0) {
                Int q = floor_div(a(ii, p), a(ii, j));
                addmul_col(a, p, j, -q);
                addmul_col(u, p, j, -q);
                if (a(ii, p) == 0) {
                    swap_cols(a, p, j);
                    swap_cols(u, p, j);
                    break;
                }
                q = floor_div(a(ii, j), a(ii, p));
                addmul_col(a, j, p, -q);
                addmul_col(u, j, p, -q);
            }
        }
        if (a(ii, p) < 0) {
            negate_col(a, p);
            negate_col(u, p);
        }
        red.pivots.emplace_back(ii, p);
        active = p;
    }
    return red;
}

// 0 <= h(i,j) < h(i,i) for j > i, by column operations mirrored into u.
void reduce_off_diagonal(IntMatrix& h, IntMatrix* u, std::size_t u_offset) {
    const std::size_t d = h.rows();
    for (std::size_t j = 1; j < d; ++j)
        for (std::size_t ii = j; ii-- > 0;) {
            Int q = floor_div(h(ii, j), h(ii, ii));
            if (q == 0) continue;
            addmul_col(h, j, ii, -q);
            if (u) addmul_col(*u, u_offset + j, u_offset + ii, -q);
        }
}

}  // namespace

HnfResult hnf(const IntMatrix& m) {
    const std::size_t d = m.rows(), k = m.cols();
    if (k < d) throw std::invalid_argument("hnf: fewer columns than rows");
    Reduction red = column_reduce(m);
    if (red.pivots.size() != d) throw std::invalid_argument("hnf: rank deficient input");

    IntMatrix h(d, d);
    const std::size_t off = k - d;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) h(i, j) = red.a(i, off + j);
    reduce_off_diagonal(h, &red.u, off);
    return {std::move(h), std::move(red.u)};
}

IntMatrix hnf_basis(const IntMatrix& m) { return hnf(m).h; }

IntMatrix integer_kernel(const IntMatrix& m) {
    Reduction red = column_reduce(m);
    const std::size_t k = m.cols();
    const std::size_t null_dim = k - red.pivots.size();

    IntMatrix basis(k, null_dim);
    for (std::size_t j = 0; j < null_dim; ++j)
        for (std::size_t i = 0; i < k; ++i) basis(i, j) = red.u(i, j);
    if (null_dim == 0) return basis;

    // Canonicalize the kernel basis itself: echelon plus off-pivot reduction.
    Reduction canon = column_reduce(basis);
    IntMatrix out(k, null_dim);
    for (std::size_t j = 0; j < null_dim; ++j)
        for (std::size_t i = 0; i < k; ++i) out(i, j) = canon.a(i, j);

    // Reduce entries in each pivot row over the columns to its right.
    for (auto [prow, pcol] : canon.pivots)
        for (std::size_t j = pcol + 1; j < null_dim; ++j) {
            Int q = floor_div(out(prow, j), out(prow, pcol));
            addmul_col(out, j, pcol, -q);
        }
    return out;
}

Int det(const IntMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("det: not square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = k; j < n; ++j) std::swap(a(k, j), a(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

Rational det(const RatMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("det: not square");
    const std::size_t n = m.rows();
    RatMatrix a = m;
    Rational result(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a(p, k).is_zero()) ++p;
        if (p == n) return Rational(0);
        if (p != k) {
            for (std::size_t j = k; j < n; ++j) std::swap(a(k, j), a(p, j));
            result = -result;
        }
        result *= a(k, k);
        Rational inv = a(k, k).inv();
        for (std::size_t i = k + 1; i < n; ++i) {
            Rational f = a(i, k) * inv;
            if (f.is_zero()) continue;
            for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
        }
    }
    return result;
}

RatMatrix inverse(const RatMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("inverse: not square");
    return solve(m, RatMatrix::identity(m.rows()));
}

RatMatrix solve(const RatMatrix& a_in, const RatMatrix& b_in) {
    if (!a_in.is_square() || a_in.rows() != b_in.rows())
        throw std::invalid_argument("solve: dimension mismatch");
    const std::size_t n = a_in.rows(), w = b_in.cols();
    RatMatrix a = a_in, b = b_in;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a(p, k).is_zero()) ++p;
        if (p == n) throw std::invalid_argument("solve: singular matrix");
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
            for (std::size_t j = 0; j < w; ++j) std::swap(b(k, j), b(p, j));
        }
        Rational inv = a(k, k).inv();
        for (std::size_t j = k; j < n; ++j) a(k, j) *= inv;
        for (std::size_t j = 0; j < w; ++j) b(k, j) *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a(i, k).is_zero()) continue;
            Rational f = a(i, k);
            for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
            for (std::size_t j = 0; j < w; ++j) b(i, j) -= f * b(k, j);
        }
    }
    return b;
}

}  // namespace csl_lab
