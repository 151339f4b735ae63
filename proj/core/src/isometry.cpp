#include "csl_lab/isometry.hpp"

#include "csl_lab/quadratic_form.hpp"

#include <algorithm>
#include <stdexcept>

namespace csl_lab {

Isometry Isometry::from_matrix(const RatMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("Isometry: not square");
    if (!(m.transpose() * m == RatMatrix::identity(m.rows())))
        throw std::invalid_argument("Isometry: matrix is not orthogonal");
    Rational d = det(m);
    return Isometry(m, d == Rational(1));
}

Isometry Isometry::identity(std::size_t dim) {
    return Isometry(RatMatrix::identity(dim), true);
}

Isometry Isometry::inverse() const { return Isometry(mat_.transpose(), det_plus_); }

Isometry operator*(const Isometry& a, const Isometry& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("Isometry: dimension mismatch");
    return Isometry(a.mat_ * b.mat_, a.det_plus_ == b.det_plus_);
}

bool PointGroup::contains(const Isometry& r) const {
    return std::binary_search(elements.begin(), elements.end(), r);
}

PointGroup point_group(const Lattice& l) {
    const RatMatrix g = l.gram();
    const RatMatrix b = l.basis();
    const RatMatrix binv = inverse(b);

    PointGroup pg;
    for (const IntMatrix& s : form_isometries(g, g)) {
        RatMatrix r = b * to_rational(s) * binv;
        pg.elements.push_back(Isometry::from_matrix(r));
    }
    std::sort(pg.elements.begin(), pg.elements.end());
    pg.order = pg.elements.size();
    for (const Isometry& r : pg.elements)
        if (r.is_rotation()) ++pg.rotation_order;
    return pg;
}

Int den(const Lattice& l, const Isometry& r) {
    if (r.dim() != l.dim()) throw std::invalid_argument("den: dimension mismatch");
    RatMatrix c = solve(l.basis(), r.mat() * l.basis());
    return common_denominator(c);
}

SymmetryClass symmetry_class(const Isometry& r, const PointGroup& p) {
    if (p.order == 0) throw std::invalid_argument("symmetry_class: empty point group");
    Isometry best = r * p.elements.front();
    for (std::size_t i = 1; i < p.elements.size(); ++i) {
        Isometry candidate = r * p.elements[i];
        if (candidate < best) best = candidate;
    }
    return SymmetryClass{best};
}

bool same_class(const Isometry& a, const Isometry& b, const PointGroup& p) {
    return p.contains(a.inverse() * b);
}

}  // namespace csl_lab
