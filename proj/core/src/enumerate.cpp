#include "csl_lab/enumerate.hpp"

#include "csl_lab/normal_form.hpp"
#include "csl_lab/quadratic_form.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace csl_lab {

namespace {

bool record_less(const CoincidenceRecord& a, const CoincidenceRecord& b) {
    if (a.sigma != b.sigma) return a.sigma < b.sigma;
    return lex_less(a.cls.representative.mat(), b.cls.representative.mat());
}

std::vector<Rational> matrix_key(const RatMatrix& m) {
    return m.entries();
}

/// Deduplicates isometries by symmetry class and keeps one full record per
/// class with Σ ≤ max_sigma. Every class, kept or not, gets its CSL computed
/// exactly once.
class ClassCollector {
public:
    ClassCollector(const Lattice& l, const PointGroup& p, Int max_sigma)
        : l_(l), p_(p), max_sigma_(std::move(max_sigma)) {}

    Int add(const Isometry& r) { return add_class(symmetry_class(r, p_)); }

    Int add_class(const SymmetryClass& cls) {
        auto key = matrix_key(cls.representative.mat());
        auto it = seen_.find(key);
        if (it != seen_.end()) return it->second;
        CoincidenceRecord rec = csl(l_, cls.representative, p_);
        Int sigma = rec.sigma;
        seen_.emplace(std::move(key), sigma);
        if (sigma <= max_sigma_) kept_.push_back(std::move(rec));
        return sigma;
    }

    std::vector<CoincidenceRecord> take() {
        std::sort(kept_.begin(), kept_.end(), record_less);
        return std::move(kept_);
    }

private:
    const Lattice& l_;
    const PointGroup& p_;
    Int max_sigma_;
    std::map<std::vector<Rational>, Int> seen_;
    std::vector<CoincidenceRecord> kept_;
};

Int odd_part(Int n) {
    while (n % 2 == 0) n /= 2;
    return n;
}

long long isqrt_ll(long long x) {
    if (x < 0) return -1;
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(x)));
    while (r > 0 && r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

[[noreturn]] void fail(const std::string& msg) {
    throw std::runtime_error(msg);
}

}  // namespace

EnumerationResult enumerate_square(const Int& max_sigma) {
    if (max_sigma < 1) fail("enumerate_square: max_sigma must be positive");
    Lattice l = Lattice::standard(2);
    PointGroup p = point_group(l);
    ClassCollector collector(l, p, max_sigma);

    // R = (1/m) [[a^2-b^2, -2ab], [2ab, a^2-b^2]] with gcd(a,b) = 1 and
    // m = a^2 + b^2 odd hits every coincidence rotation class of Z^2.
    collector.add(Isometry::identity(2));
    for (Int a = 1; a * a <= max_sigma; ++a) {
        Int bmax = isqrt(max_sigma - a * a);
        for (Int b = -bmax; b <= bmax; ++b) {
            if (gcd(a, b) != 1) continue;
            Int m = a * a + b * b;
            if (m % 2 == 0 || m == 1) continue;
            IntMatrix num(2, 2);
            num(0, 0) = a * a - b * b;
            num(0, 1) = -2 * a * b;
            num(1, 0) = 2 * a * b;
            num(1, 1) = a * a - b * b;
            Isometry r = make_isometry(Rational(Int(1), m) * to_rational(num));
            Int sigma = collector.add(r);
            if (sigma != m)
                fail("enumerate_square: parametrized index mismatch at m=" + m.str());
        }
    }

    return EnumerationResult{l, max_sigma, collector.take(), true};
}

EnumerationResult enumerate_cubic(const Int& max_sigma) {
    if (max_sigma < 1) fail("enumerate_cubic: max_sigma must be positive");
    Lattice l = Lattice::standard(3);
    PointGroup p = point_group(l);
    if (p.order != 48 || p.rotation_order != 24)
        fail("enumerate_cubic: unexpected point group");
    ClassCollector collector(l, p, max_sigma);

    // Right-multiplying by the point group permutes and flips columns, so
    // the lex-least signed column permutation of the integer numerator is a
    // class key that stays in integer arithmetic.
    const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                             {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    auto class_key = [&](const IntMatrix& a) {
        std::vector<Int> best;
        std::vector<Int> cur(9);
        for (const auto& perm : perms) {
            for (int signs = 0; signs < 8; ++signs) {
                for (int j = 0; j < 3; ++j) {
                    int src = perm[j];
                    Int s = (signs >> j) & 1 ? Int(-1) : Int(1);
                    for (int i = 0; i < 3; ++i) cur[3 * i + j] = s * a(i, src);
                }
                if (best.empty() || cur < best) best = cur;
            }
        }
        return best;
    };

    // A primitive quaternion has norm with 2-adic valuation at most 2, so
    // norms up to 4 * max_sigma cover every index up to max_sigma; the index
    // is the odd part of the norm.
    long long limit = to_int64(4 * max_sigma);
    std::set<std::pair<Int, std::vector<Int>>> seen;
    for (long long k = 0; k * k <= limit; ++k) {
        long long lmax = isqrt_ll(limit - k * k);
        for (long long li = k > 0 ? -lmax : 0; li <= lmax; ++li) {
            long long mmax = isqrt_ll(limit - k * k - li * li);
            for (long long m = k > 0 || li > 0 ? -mmax : 0; m <= mmax; ++m) {
                long long rem = limit - k * k - li * li - m * m;
                long long nmax = isqrt_ll(rem);
                for (long long n = k > 0 || li > 0 || m > 0 ? -nmax : 1;
                     n <= nmax; ++n) {
                    long long g4 = std::gcd(std::gcd(k, std::abs(li)),
                                            std::gcd(std::abs(m), std::abs(n)));
                    if (g4 != 1) continue;
                    long long norm = k * k + li * li + m * m + n * n;
                    Int sigma_expected = odd_part(Int(norm));
                    if (sigma_expected > max_sigma) continue;

                    IntMatrix num(3, 3);
                    num(0, 0) = k * k + li * li - m * m - n * n;
                    num(0, 1) = 2 * (li * m - k * n);
                    num(0, 2) = 2 * (li * n + k * m);
                    num(1, 0) = 2 * (li * m + k * n);
                    num(1, 1) = k * k - li * li + m * m - n * n;
                    num(1, 2) = 2 * (m * n - k * li);
                    num(2, 0) = 2 * (li * n - k * m);
                    num(2, 1) = 2 * (m * n + k * li);
                    num(2, 2) = k * k - li * li - m * m + n * n;

                    Int den(norm);
                    Int g = gcd(content(num), den);
                    if (g > 1) {
                        for (std::size_t i = 0; i < 3; ++i)
                            for (std::size_t j = 0; j < 3; ++j) num(i, j) /= g;
                        den /= g;
                    }
                    if (!seen.emplace(den, class_key(num)).second) continue;

                    Isometry r =
                        make_isometry(Rational(Int(1), den) * to_rational(num));
                    Int sigma = collector.add(r);
                    if (sigma != sigma_expected)
                        fail("enumerate_cubic: quaternion index mismatch at norm=" +
                             std::to_string(norm));
                }
            }
        }
    }

    return EnumerationResult{l, max_sigma, collector.take(), true};
}

namespace {

/// All integer points with |x|^2 = n^2, in a deterministic order.
std::vector<std::vector<Int>> sphere_points(std::size_t dim, const Int& n) {
    RatMatrix g(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) g(i, i) = Rational(1);
    return vectors_with_norm(g, Rational(n * n));
}

bool all_integral_group(const PointGroup& p) {
    for (const auto& q : p.elements)
        if (!is_integral(q.mat())) return false;
    return true;
}

}  // namespace

EnumerationResult enumerate_brute(const Lattice& l, const Int& max_den,
                                  const EnumerateOptions& opts) {
    if (l.dim() > opts.max_dim)
        fail("enumerate_brute: guard exceeded (dim " + std::to_string(l.dim()) +
             " > " + std::to_string(opts.max_dim) + ")");
    if (max_den > opts.den_limit)
        fail("enumerate_brute: guard exceeded (max_den " + max_den.str() + " > " +
             opts.den_limit.str() + ")");
    if (max_den < 1) fail("enumerate_brute: max_den must be positive");

    const std::size_t d = l.dim();
    PointGroup p = point_group(l);
    ClassCollector collector(l, p, max_den);
    bool integral_group = all_integral_group(p);
    bool standard = l == Lattice::standard(d);
    std::map<Int, Int> raw_counts;
    std::map<Int, std::set<std::vector<Rational>>> class_reps;

    for (Int n = 1; n <= max_den; ++n) {
        auto sphere = sphere_points(d, n);
        // Build the numerator column by column from sphere points with
        // pairwise zero dot products; gcd(content, n) = 1 keeps each isometry
        // at exactly one n, its true denominator.
        std::vector<std::size_t> pick(d);
        std::vector<Int> running_gcd(d + 1);
        running_gcd[0] = n;
        auto dot = [&](const std::vector<Int>& a, const std::vector<Int>& b) {
            Int s = 0;
            for (std::size_t i = 0; i < d; ++i) s += a[i] * b[i];
            return s;
        };
        auto rec = [&](auto&& self, std::size_t col) -> void {
            if (col == d) {
                if (running_gcd[d] != 1) return;
                IntMatrix num(d, d);
                for (std::size_t j = 0; j < d; ++j)
                    for (std::size_t i = 0; i < d; ++i)
                        num(i, j) = sphere[pick[j]][i];
                Isometry r =
                    make_isometry(Rational(Int(1), n) * to_rational(num));
                SymmetryClass cls = symmetry_class(r, p);
                Int sigma = collector.add_class(cls);
                if (sigma > max_den) return;
                if (standard && n > sigma)
                    fail("enumerate_brute: denominator " + n.str() +
                         " exceeds index " + sigma.str() +
                         " on a standard lattice");
                raw_counts[sigma] += 1;
                class_reps[sigma].insert(matrix_key(cls.representative.mat()));
                return;
            }
            for (std::size_t s = 0; s < sphere.size(); ++s) {
                bool ok = true;
                for (std::size_t j = 0; j < col && ok; ++j)
                    ok = dot(sphere[pick[j]], sphere[s]) == 0;
                if (!ok) continue;
                pick[col] = s;
                Int g = running_gcd[col];
                for (const auto& e : sphere[s]) g = gcd(g, abs(e));
                running_gcd[col + 1] = g;
                self(self, col + 1);
            }
        };
        rec(rec, 0);
    }

    // When the point group is integral every member of a class shares its
    // denominator, so each kept class is met exactly |P| times.
    if (integral_group) {
        for (const auto& [sigma, count] : raw_counts) {
            Int expected = Int(class_reps[sigma].size()) * Int(p.order);
            if (count != expected)
                fail("enumerate_brute: raw count " + count.str() + " at index " +
                     sigma.str() + " does not match " + expected.str());
        }
    }

    return EnumerationResult{l, max_den, collector.take(), true};
}

Int conjugation_denominator(const Lattice& l) {
    RatMatrix a = l.basis();
    RatMatrix ainv = inverse(a);
    Int d = 1;
    for (const Rational& x : a.entries())
        for (const Rational& y : ainv.entries()) d = lcm(d, (x * y).den());
    return d;
}

EnumerationResult enumerate_conjugated(const Lattice& l, const Int& max_sigma,
                                       const EnumerateOptions& opts) {
    if (max_sigma < 1) fail("enumerate_conjugated: max_sigma must be positive");
    Int d_factor = conjugation_denominator(l);
    Int max_den = d_factor * max_sigma;
    EnumerateOptions inner = opts;
    // Any isometry with Σ ≤ max_sigma has standard-basis denominator at most
    // D * Σ, so the denominator sweep below is exhaustive. In the plane the
    // guard scales with the derived bound; in higher dimensions it stands.
    if (l.dim() <= 2) inner.den_limit = std::max(inner.den_limit, max_den);

    EnumerationResult raw = enumerate_brute(l, max_den, inner);
    EnumerationResult out{l, max_sigma, {}, true};
    for (auto& rec : raw.records) {
        if (rec.sigma > max_sigma) continue;
        Int den_std = common_denominator(rec.isometry.mat());
        if (den_std > d_factor * rec.sigma)
            fail("enumerate_conjugated: denominator " + den_std.str() +
                 " exceeds " + d_factor.str() + " * sigma at sigma " +
                 rec.sigma.str());
        out.records.push_back(std::move(rec));
    }
    return out;
}

EnumerationResult enumerate_auto(const Lattice& l, const Int& max_sigma) {
    if (l == Lattice::standard(2)) return enumerate_square(max_sigma);
    if (l == Lattice::standard(3)) return enumerate_cubic(max_sigma);
    return enumerate_conjugated(l, max_sigma);
}

}  // namespace csl_lab
