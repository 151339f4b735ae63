#include "csl_lab/csl.hpp"

#include <set>
#include <stdexcept>

namespace csl_lab {

bool is_coincidence(const Lattice& l, const Isometry& r) {
    return r.dim() == l.dim();
}

CoincidenceRecord csl(const Lattice& l, const Isometry& r, const PointGroup& p) {
    if (!is_coincidence(l, r)) throw std::invalid_argument("csl: dimension mismatch");
    Lattice meet = intersect(l, transform(r.mat(), l));
    Int s = index(meet, l);
    return CoincidenceRecord{r, std::move(meet), std::move(s), symmetry_class(r, p)};
}

CoincidenceRecord csl(const Lattice& l, const Isometry& r) {
    return csl(l, r, point_group(l));
}

Int sigma(const Lattice& l, const Isometry& r) {
    if (!is_coincidence(l, r)) throw std::invalid_argument("sigma: dimension mismatch");
    return index(intersect(l, transform(r.mat(), l)), l);
}

MCSLRecord mcsl(const Lattice& l, const std::vector<Isometry>& rs) {
    Lattice meet = l;
    for (const Isometry& r : rs) {
        if (!is_coincidence(l, r)) throw std::invalid_argument("mcsl: dimension mismatch");
        meet = intersect(meet, transform(r.mat(), l));
    }
    Int s = index(meet, l);
    return MCSLRecord{rs, std::move(meet), std::move(s)};
}

std::vector<SymmetryClass> generators_of_csl(const Lattice& target,
                                             const std::vector<CoincidenceRecord>& pool) {
    std::set<SymmetryClass> classes;
    for (const CoincidenceRecord& rec : pool)
        if (rec.csl == target) classes.insert(rec.cls);
    return {classes.begin(), classes.end()};
}

}  // namespace csl_lab
