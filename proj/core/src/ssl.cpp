#include "csl_lab/ssl.hpp"

#include "csl_lab/quadratic_form.hpp"

#include <stdexcept>

namespace csl_lab {

Int SSLTable::g(const Int& m) const {
    auto it = rows.find(m);
    return it == rows.end() ? Int(0) : it->second;
}

namespace {

/// Number of index-m sublattices of Z^d: sum over diagonals (h_1..h_d) with
/// product m of h_1^{d-1} h_2^{d-2} ... h_{d-1}.
Int sublattice_count(std::size_t d, const Int& m) {
    if (d == 1) return 1;
    Int total = 0;
    for (Int h = 1; h <= m; ++h) {
        if (m % h != 0) continue;
        Int weight = 1;
        for (std::size_t i = 1; i < d; ++i) weight *= h;
        total += weight * sublattice_count(d - 1, m / h);
    }
    return total;
}

}  // namespace

std::vector<Lattice> enumerate_sublattices(const Lattice& l, const Int& m,
                                           const SublatticeOptions& opts) {
    if (m < 1)
        throw std::invalid_argument("enumerate_sublattices: index must be positive");
    if (l.dim() > opts.max_dim || m > opts.max_index)
        throw std::invalid_argument("enumerate_sublattices: bound exceeded");

    const std::size_t d = l.dim();
    std::vector<Lattice> out;
    IntMatrix h(d, d);
    // Upper triangular column-style HNF: positive diagonal with product m,
    // row entries right of the diagonal reduced modulo the diagonal.
    auto rec = [&](auto&& self, std::size_t i, const Int& rest) -> void {
        if (i == d) {
            if (rest != 1) return;
            out.push_back(Lattice::from_generators(l.den(), l.mat() * h));
            return;
        }
        for (Int diag = 1; diag <= rest; ++diag) {
            if (rest % diag != 0) continue;
            h(i, i) = diag;
            std::vector<Int> digits(d > i + 1 ? d - i - 1 : 0, Int(0));
            auto off = [&](auto&& inner, std::size_t j) -> void {
                if (j == d) {
                    self(self, i + 1, rest / diag);
                    return;
                }
                for (Int v = 0; v < diag; ++v) {
                    h(i, j) = v;
                    inner(inner, j + 1);
                }
            };
            off(off, i + 1);
        }
    };
    rec(rec, 0, m);

    if (Int(out.size()) != sublattice_count(d, m))
        throw std::logic_error("enumerate_sublattices: count mismatch");
    return out;
}

bool is_similar(const Lattice& l, const Lattice& lsub) {
    if (!is_sublattice(lsub, l))
        throw std::invalid_argument("is_similar: not a sublattice");
    Int m = index(lsub, l);
    const std::size_t d = l.dim();
    if (d == 1) return true;
    if (d == 2)
        return reduce_binary_form(lsub.gram()) ==
               reduce_binary_form(Rational(m) * l.gram());
    Int t;
    if (!cube_root(m, t)) return false;
    return !form_isometries(Rational(t * t) * l.gram(), lsub.gram()).empty();
}

SSLTable ssl_table(const Lattice& l, const Int& n, const SublatticeOptions& opts) {
    if (n < 1) throw std::invalid_argument("ssl_table: range must be positive");
    SSLTable t;
    t.lattice = l;
    t.max_index = n;
    for (Int m = 1; m <= n; ++m) {
        Int count = 0;
        for (const auto& sub : enumerate_sublattices(l, m, opts))
            if (is_similar(l, sub)) ++count;
        t.rows[m] = count;
    }
    if (t.g(1) != 1)
        throw std::logic_error("ssl_table: index 1 must count the lattice itself");
    return t;
}

SimilarityRecord primitive_ssl(const Lattice& l, const Isometry& r) {
    Int c = den(l, r);
    Lattice sub = scale(transform(r.mat(), l), Rational(c));
    if (!is_sublattice(sub, l))
        throw std::logic_error("primitive_ssl: den(R) R does not map into the lattice");
    Int idx = index(sub, l);
    Int expected = 1;
    for (std::size_t i = 0; i < l.dim(); ++i) expected *= c;
    if (idx != expected)
        throw std::logic_error("primitive_ssl: index " + idx.str() +
                               " differs from den^d = " + expected.str());
    return SimilarityRecord{r, Rational(c), sub, idx};
}

std::vector<Witness> check_multiplicative(const SSLTable& t) {
    return check_multiplicative([&](const Int& m) { return t.g(m); },
                                t.max_index);
}

std::optional<Witness> check_supermultiplicative(const SSLTable& t) {
    return check_supermultiplicative([&](const Int& m) { return t.g(m); },
                                     t.max_index);
}

}  // namespace csl_lab
