#include "csl_lab/lattice.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace csl_lab {

Lattice Lattice::from_generators(const Int& den, const IntMatrix& cols) {
    if (den <= 0) throw std::invalid_argument("Lattice: denominator must be positive");
    const std::size_t d = cols.rows();
    if (cols.cols() < d) throw std::invalid_argument("Lattice: not enough generators");
    IntMatrix h = hnf_basis(cols);
    Int g = gcd(den, content(h));
    Int q = den;
    if (g > 1) {
        q /= g;
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) h(i, j) /= g;
    }
    return Lattice(d, std::move(q), std::move(h));
}

Lattice Lattice::from_basis(const RatMatrix& basis) {
    if (!basis.is_square()) throw std::invalid_argument("Lattice: basis must be square");
    Int q = common_denominator(basis);
    return from_generators(q, scale_to_integer(basis, q));
}

Lattice Lattice::standard(std::size_t dim) {
    return Lattice(dim, 1, IntMatrix::identity(dim));
}

RatMatrix Lattice::basis() const {
    RatMatrix b(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) b(i, j) = Rational(mat_(i, j), den_);
    return b;
}

Rational Lattice::basis_det() const {
    return Rational(det(mat_)) / Rational(boost::multiprecision::pow(den_, static_cast<unsigned>(dim_)));
}

RatMatrix Lattice::gram() const {
    RatMatrix b = basis();
    return b.transpose() * b;
}

bool Lattice::contains(const std::vector<Rational>& v) const {
    if (v.size() != dim_) throw std::invalid_argument("Lattice: dimension mismatch");
    // Solve mat * x = den * v by back substitution on the triangular basis.
    std::vector<Rational> x(dim_);
    for (std::size_t ii = dim_; ii-- > 0;) {
        Rational rhs = Rational(den_) * v[ii];
        for (std::size_t j = ii + 1; j < dim_; ++j) rhs -= Rational(mat_(ii, j)) * x[j];
        x[ii] = rhs / Rational(mat_(ii, ii));
        if (!x[ii].is_integer()) return false;
    }
    return true;
}

bool operator<(const Lattice& a, const Lattice& b) {
    if (a.dim_ != b.dim_) return a.dim_ < b.dim_;
    if (a.den_ != b.den_) return a.den_ < b.den_;
    return a.mat_.entries() < b.mat_.entries();
}

std::string Lattice::str() const {
    std::ostringstream os;
    os << "(1/" << den_ << ")[";
    for (std::size_t j = 0; j < dim_; ++j) {
        if (j) os << "; ";
        for (std::size_t i = 0; i < dim_; ++i) {
            if (i) os << ",";
            os << mat_(i, j);
        }
    }
    os << "]";
    return os.str();
}

bool is_sublattice(const Lattice& sub, const Lattice& sup) {
    if (sub.dim() != sup.dim()) return false;
    for (std::size_t j = 0; j < sub.dim(); ++j) {
        std::vector<Rational> v(sub.dim());
        for (std::size_t i = 0; i < sub.dim(); ++i) v[i] = Rational(sub.mat()(i, j), sub.den());
        if (!sup.contains(v)) return false;
    }
    return true;
}

Int index(const Lattice& sub, const Lattice& sup) {
    if (!is_sublattice(sub, sup)) throw std::invalid_argument("index: not a sublattice");
    Rational r = (sub.basis_det() / sup.basis_det()).abs();
    if (!r.is_integer()) throw std::logic_error("index: non-integral ratio");
    return r.num();
}

Lattice intersect(const Lattice& a, const Lattice& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("intersect: dimension mismatch");
    const std::size_t d = a.dim();
    // Points (1/qa) Ma x = (1/qb) Mb y: stack the integer relation and take
    // its kernel; the x block then spans the intersection in a-coordinates.
    IntMatrix rel(d, 2 * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            rel(i, j) = b.den() * a.mat()(i, j);
            rel(i, d + j) = -(a.den() * b.mat()(i, j));
        }
    IntMatrix ker = integer_kernel(rel);
    if (ker.cols() != d) throw std::logic_error("intersect: unexpected kernel rank");
    IntMatrix x(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) x(i, j) = ker(i, j);
    return Lattice::from_generators(a.den(), a.mat() * x);
}

Lattice sum(const Lattice& a, const Lattice& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("sum: dimension mismatch");
    const std::size_t d = a.dim();
    IntMatrix gen(d, 2 * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            gen(i, j) = b.den() * a.mat()(i, j);
            gen(i, d + j) = a.den() * b.mat()(i, j);
        }
    return Lattice::from_generators(a.den() * b.den(), gen);
}

Lattice scale(const Lattice& l, const Rational& c) {
    if (!c.is_positive()) throw std::invalid_argument("scale: scalar must be positive");
    return Lattice::from_generators(l.den() * c.den(), c.num() * l.mat());
}

Lattice transform(const RatMatrix& a, const Lattice& l) {
    if (a.rows() != l.dim() || a.cols() != l.dim())
        throw std::invalid_argument("transform: dimension mismatch");
    RatMatrix b = a * l.basis();
    if (det(b).is_zero()) throw std::invalid_argument("transform: singular matrix");
    return Lattice::from_basis(b);
}

bool commensurate(const Lattice& a, const Lattice& b) {
    return a.dim() == b.dim();
}

}  // namespace csl_lab
