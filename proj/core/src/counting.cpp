#include "csl_lab/counting.hpp"

#include "csl_lab/normal_form.hpp"

#include <set>
#include <stdexcept>

namespace csl_lab {

MultiplicityRow MultiplicityTable::at(const Int& m) const {
    auto it = rows.find(m);
    if (it == rows.end()) return MultiplicityRow{0, 0, 0};
    return it->second;
}

Int MultiplicityTable::value(const Int& m, Multiplicity which) const {
    MultiplicityRow row = at(m);
    switch (which) {
        case Multiplicity::f_iso: return row.f_iso;
        case Multiplicity::f_rot: return row.f_rot;
        case Multiplicity::f: return row.f;
    }
    throw std::logic_error("MultiplicityTable: bad selector");
}

MultiplicityTable multiplicity_table(const EnumerationResult& e) {
    if (!e.complete)
        throw std::invalid_argument(
            "multiplicity_table: enumeration is not complete");
    PointGroup p = point_group(e.lattice);
    MultiplicityTable t;
    t.lattice = e.lattice;
    t.max_index = e.max_sigma;
    t.pg_order = p.order;
    t.pg_rotation_order = p.rotation_order;

    Int rot_in_proper = Int(p.rotation_order);
    Int rot_in_improper = Int(p.order) - Int(p.rotation_order);

    std::map<Int, std::set<Lattice>> lattices;
    std::map<Int, Int> rotation_counts;
    for (const auto& rec : e.records) {
        auto& row = t.rows[rec.sigma];
        row.f_iso += 1;
        rotation_counts[rec.sigma] +=
            rec.cls.representative.is_rotation() ? rot_in_proper : rot_in_improper;
        lattices[rec.sigma].insert(rec.csl);
    }
    for (auto& [m, row] : t.rows) {
        Int rotations = rotation_counts[m];
        if (rotations % Int(p.rotation_order) != 0)
            throw std::logic_error(
                "multiplicity_table: rotation count not divisible by the "
                "rotation group order");
        row.f_rot = rotations / Int(p.rotation_order);
        row.f = Int(lattices[m].size());
        if (row.f > row.f_iso)
            throw std::logic_error("multiplicity_table: more lattices than classes");
    }
    if (t.at(1).f != 1)
        throw std::logic_error("multiplicity_table: index 1 must be the lattice itself");
    return t;
}

Int square_formula(const Int& m) {
    if (m < 1) throw std::invalid_argument("square_formula: m must be positive");
    if (m == 1) return 1;
    if (m % 2 == 0) return 0;
    Int rest = m;
    Int result = 1;
    for (Int p = 3; p * p <= rest; p += 2) {
        if (rest % p != 0) continue;
        if (p % 4 != 1) return 0;
        result *= 2;
        while (rest % p == 0) rest /= p;
    }
    if (rest > 1) {
        if (rest % 4 != 1) return 0;
        result *= 2;
    }
    return result;
}

namespace {

std::vector<Witness> scan_pairs(const std::function<Int(const Int&)>& val,
                                const Int& max_index, bool first_violation_only) {
    std::vector<Witness> out;
    for (Int m = 1; m * m <= max_index; ++m) {
        for (Int n = m; m * n <= max_index; ++n) {
            if (gcd(m, n) != 1) continue;
            Int lhs = val(m * n);
            Int rhs = val(m) * val(n);
            if (lhs == rhs) continue;
            if (first_violation_only && lhs > rhs) continue;
            out.push_back(Witness{m, n, lhs, rhs,
                                  lhs < rhs ? "multiplicative-violation"
                                            : "strict-supermultiplicative"});
            if (first_violation_only) return out;
        }
    }
    return out;
}

}  // namespace

std::vector<Witness> check_multiplicative(const std::function<Int(const Int&)>& val,
                                          const Int& max_index) {
    return scan_pairs(val, max_index, false);
}

std::vector<Witness> check_multiplicative(const MultiplicityTable& t,
                                          Multiplicity which) {
    return check_multiplicative(
        [&](const Int& m) { return t.value(m, which); }, t.max_index);
}

std::optional<Witness> check_supermultiplicative(
    const std::function<Int(const Int&)>& val, const Int& max_index) {
    auto hits = scan_pairs(val, max_index, true);
    if (hits.empty()) return std::nullopt;
    return hits.front();
}

std::optional<Witness> check_supermultiplicative(const MultiplicityTable& t,
                                                 Multiplicity which) {
    return check_supermultiplicative(
        [&](const Int& m) { return t.value(m, which); }, t.max_index);
}

DirichletData dirichlet_coefficients(const MultiplicityTable& t,
                                     Multiplicity which) {
    DirichletData d;
    d.truncation = t.max_index;
    for (const auto& [m, row] : t.rows) {
        Int v = t.value(m, which);
        if (v != 0) d.coefficients[m] = v;
    }
    return d;
}

DirichletData euler_product_square(const Int& truncation) {
    if (truncation < 1)
        throw std::invalid_argument("euler_product_square: truncation must be positive");
    DirichletData d;
    d.truncation = truncation;
    d.coefficients[1] = 1;
    for (Int p = 5; p <= truncation; p += 4) {
        bool prime = true;
        for (Int q = 3; q * q <= p; q += 2)
            if (p % q == 0) { prime = false; break; }
        if (!prime) continue;
        d.euler_primes.push_back(p);
        // (1 + x) / (1 - x) = 1 + 2x + 2x^2 + ... at x = p^{-s}
        auto base = d.coefficients;
        for (const auto& [m, c] : base)
            for (Int q = p; m * q <= truncation; q *= p)
                d.coefficients[m * q] += 2 * c;
    }
    return d;
}

}  // namespace csl_lab
