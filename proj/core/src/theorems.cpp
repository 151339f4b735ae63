#include "csl_lab/theorems.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace csl_lab {

namespace {

Int sigma_product(const Lattice& l, const Isometry& r1, const Isometry& r2) {
    return sigma(l, r1 * r2);
}

void require_coprime(const Int& m, const Int& n, const char* who) {
    if (gcd(m, n) != 1)
        throw std::invalid_argument(std::string(who) +
                                    ": precondition requires coprime indices");
}

std::map<Int, Int> factorize(Int n) {
    std::map<Int, Int> out;
    for (Int p = 2; p * p <= n; ++p)
        while (n % p == 0) {
            out[p] += 1;
            n /= p;
        }
    if (n > 1) out[n] += 1;
    return out;
}

Int int_pow(const Int& p, Int e) {
    Int r = 1;
    for (; e > 0; --e) r *= p;
    return r;
}

}  // namespace

bool check_divisibility(const Lattice& l, const Isometry& r1, const Isometry& r2) {
    Int s1 = sigma(l, r1);
    Int s2 = sigma(l, r2);
    Int s12 = sigma_product(l, r1, r2);
    return (s1 * s2) % s12 == 0;
}

bool check_coprime_multiplicativity(const Lattice& l, const Isometry& r1,
                                    const Isometry& r2) {
    Int s1 = sigma(l, r1);
    Int s2 = sigma(l, r2);
    require_coprime(s1, s2, "check_coprime_multiplicativity");
    return sigma_product(l, r1, r2) == s1 * s2;
}

bool check_intersection_identity(const Lattice& l, const Isometry& r1,
                                 const Isometry& r2) {
    Int s1 = sigma(l, r1);
    Int s2 = sigma(l, r2);
    require_coprime(s1, s2, "check_intersection_identity");
    Isometry r12 = r1 * r2;
    Lattice csl12 = intersect(l, transform(r12.mat(), l));
    Lattice triple = intersect(intersect(l, transform(r1.mat(), l)),
                               transform(r12.mat(), l));
    Lattice pairwise =
        intersect(csl(l, r1).csl, transform(r1.mat(), csl(l, r2).csl));
    return csl12 == triple && csl12 == pairwise;
}

namespace {

struct TowerParts {
    Lattice gamma;
    Lattice r1_gamma;
    Lattice r1r2_gamma;
    Lattice csl_r1;
    Lattice r1_csl_r2;
    Lattice csl_r1r2;
    Int m;
    Int n;
};

TowerReport tower_from_parts(const TowerParts& tp) {
    TowerReport t;
    t.m = tp.m;
    t.n = tp.n;
    Lattice sum_left = sum(tp.csl_r1, tp.csl_r1r2);
    Lattice sum_mid = sum(tp.csl_r1, tp.r1_csl_r2);
    Lattice sum_right = sum(tp.r1_csl_r2, tp.csl_r1r2);
    Lattice triple = intersect(tp.csl_r1, tp.csl_r1r2);
    t.nodes = {{"gamma", tp.gamma},
               {"r1_gamma", tp.r1_gamma},
               {"r1r2_gamma", tp.r1r2_gamma},
               {"csl_r1", tp.csl_r1},
               {"r1_csl_r2", tp.r1_csl_r2},
               {"csl_r1r2", tp.csl_r1r2},
               {"sum_left", sum_left},
               {"sum_mid", sum_mid},
               {"sum_right", sum_right},
               {"triple", triple}};

    auto edge = [&](const Lattice& sub, const Lattice& sup, const Int& num,
                    const Int& den, const char* name) {
        if (!is_sublattice(sub, sup)) {
            t.failures.push_back(std::string(name) + ": not a sublattice");
            return;
        }
        if (index(sub, sup) * den != num)
            t.failures.push_back(std::string(name) + ": index " +
                                 index(sub, sup).str() + " != " + num.str() +
                                 "/" + den.str());
    };

    // The two defining edges; everything else is asserted against them.
    if (!is_sublattice(sum_mid, tp.r1_gamma) ||
        !is_sublattice(tp.csl_r1, sum_left)) {
        t.failures.push_back("defining edges: containment broken");
        t.consistent = false;
        return t;
    }
    t.d = index(sum_mid, tp.r1_gamma);
    t.k = index(tp.csl_r1, sum_left);
    const Int& m = t.m;
    const Int& n = t.n;
    const Int& d = t.d;
    const Int& k = t.k;

    edge(sum_left, tp.gamma, m, k, "[gamma : sum_left] = m/k");
    edge(tp.csl_r1r2, sum_left, n, d, "[sum_left : csl_r1r2] = n/d");
    edge(tp.csl_r1, sum_mid, m, d, "[sum_mid : csl_r1] = m/d");
    edge(tp.r1_csl_r2, sum_mid, n, d, "[sum_mid : r1_csl_r2] = n/d");
    edge(sum_right, tp.r1r2_gamma, n, k, "[r1r2_gamma : sum_right] = n/k");
    edge(tp.r1_csl_r2, sum_right, k, 1, "[sum_right : r1_csl_r2] = k");
    edge(tp.csl_r1r2, sum_right, m, d, "[sum_right : csl_r1r2] = m/d");
    edge(tp.csl_r1, tp.gamma, m, 1, "[gamma : csl_r1] = m");
    edge(tp.csl_r1, tp.r1_gamma, m, 1, "[r1_gamma : csl_r1] = m");
    edge(tp.r1_csl_r2, tp.r1_gamma, n, 1, "[r1_gamma : r1_csl_r2] = n");
    edge(tp.r1_csl_r2, tp.r1r2_gamma, n, 1, "[r1r2_gamma : r1_csl_r2] = n");
    edge(tp.csl_r1r2, tp.gamma, m * n, d * k, "[gamma : csl_r1r2] = mn/dk");
    edge(tp.csl_r1r2, tp.r1r2_gamma, m * n, d * k,
         "[r1r2_gamma : csl_r1r2] = mn/dk");
    edge(triple, tp.csl_r1, n, d, "[csl_r1 : triple] = n/d");
    edge(triple, tp.r1_csl_r2, m, d, "[r1_csl_r2 : triple] = m/d");
    edge(triple, tp.csl_r1r2, k, 1, "[csl_r1r2 : triple] = k");

    t.consistent = t.failures.empty();
    return t;
}

}  // namespace

TowerReport build_tower(const Lattice& l, const Isometry& r1, const Isometry& r2) {
    Isometry r12 = r1 * r2;
    Lattice r1_gamma = transform(r1.mat(), l);
    Lattice r1r2_gamma = transform(r12.mat(), l);
    Lattice csl2 = intersect(l, transform(r2.mat(), l));
    TowerParts tp{l,
                  r1_gamma,
                  r1r2_gamma,
                  intersect(l, r1_gamma),
                  transform(r1.mat(), csl2),
                  intersect(l, r1r2_gamma),
                  Int(0),
                  Int(0)};
    tp.m = index(tp.csl_r1, l);
    tp.n = index(csl2, l);
    return tower_from_parts(tp);
}

RecoveryReport check_recovery(const Lattice& l, const Isometry& r,
                              const Isometry& s) {
    Int m = sigma(l, r);
    Int n = sigma(l, s);
    require_coprime(m, n, "check_recovery");
    Lattice csl_rs = csl(l, r * s).csl;
    Lattice r_gamma = transform(r.mat(), l);
    Lattice r_csl_s = transform(r.mat(), csl(l, s).csl);
    RecoveryReport rep;
    rep.first =
        intersect(scale(l, Rational(n)), csl_rs) == scale(csl(l, r).csl, Rational(n));
    Lattice lhs = intersect(scale(r_gamma, Rational(m)), csl_rs);
    rep.second_m = lhs == scale(r_csl_s, Rational(m));
    rep.second_n = lhs == scale(r_csl_s, Rational(n));
    return rep;
}

PairSweepReport sweep_pairs(const EnumerationResult& pool) {
    if (!pool.complete)
        throw std::invalid_argument("sweep_pairs: enumeration is not complete");
    const Lattice& l = pool.lattice;
    PointGroup p = point_group(l);
    PairSweepReport rep;
    rep.lattice = l;
    rep.range = pool.max_sigma;

    auto note = [&](const std::string& what, const Isometry& r1,
                    const Isometry& r2) {
        if (rep.examples.size() >= 5) return;
        std::ostringstream os;
        os << what << " at R1=" << r1.mat()(0, 0).str() << "..,R2="
           << r2.mat()(0, 0).str() << "..";
        rep.examples.push_back(os.str());
    };

    // Right point-group factors of either argument change no tower node and
    // a common left factor rotates the whole tower, so class representatives
    // with a point-group twist between them exhaust all pairs.
    struct Twisted {
        Isometry r2;
        Lattice csl2;
        Int n;
    };
    std::vector<std::vector<Twisted>> twisted(pool.records.size());
    for (std::size_t j = 0; j < pool.records.size(); ++j) {
        const auto& rec = pool.records[j];
        twisted[j].reserve(p.elements.size());
        for (const auto& q : p.elements)
            twisted[j].push_back(Twisted{q * rec.cls.representative,
                                         transform(q.mat(), rec.csl),
                                         rec.sigma});
    }

    for (const auto& rec1 : pool.records) {
        const Isometry& r1 = rec1.cls.representative;
        const Int& m = rec1.sigma;
        Lattice r1_gamma = transform(r1.mat(), l);
        for (std::size_t j = 0; j < pool.records.size(); ++j) {
            for (const auto& tw : twisted[j]) {
                const Isometry& r2 = tw.r2;
                const Int& n = tw.n;
                ++rep.pairs;

                Isometry r12 = r1 * r2;
                Lattice r1r2_gamma = transform(r12.mat(), l);
                TowerParts tp{l,
                              r1_gamma,
                              r1r2_gamma,
                              rec1.csl,
                              transform(r1.mat(), tw.csl2),
                              intersect(l, r1r2_gamma),
                              m,
                              n};
                Int s12 = index(tp.csl_r1r2, l);

                if ((m * n) % s12 != 0) {
                    ++rep.divisibility_failed;
                    note("divisibility", r1, r2);
                }
                TowerReport tower = tower_from_parts(tp);
                if (!tower.consistent) {
                    ++rep.tower_failed;
                    note("tower", r1, r2);
                }

                if (gcd(m, n) != 1) continue;
                ++rep.coprime_pairs;
                if (s12 != m * n) {
                    ++rep.product_index_failed;
                    note("product index", r1, r2);
                }
                Lattice triple = tower.nodes.at("triple");
                Lattice pairwise = intersect(tp.csl_r1, tp.r1_csl_r2);
                if (!(tp.csl_r1r2 == triple && tp.csl_r1r2 == pairwise)) {
                    ++rep.intersection_failed;
                    note("intersection identity", r1, r2);
                }
                if (!(tower.nodes.at("sum_mid") == r1_gamma &&
                      pairwise == tp.csl_r1r2)) {
                    ++rep.collapse_failed;
                    note("coprime collapse", r1, r2);
                }
                if (intersect(scale(l, Rational(n)), tp.csl_r1r2) !=
                    scale(tp.csl_r1, Rational(n))) {
                    ++rep.recovery_first_failed;
                    note("recovery first", r1, r2);
                }
                Lattice lhs = intersect(scale(r1_gamma, Rational(m)), tp.csl_r1r2);
                if (lhs != scale(tp.r1_csl_r2, Rational(m)))
                    ++rep.recovery_second_m_failed;
                if (lhs != scale(tp.r1_csl_r2, Rational(n)))
                    ++rep.recovery_second_n_failed;
            }
        }
    }
    return rep;
}

std::optional<CSLDecomposition> decompose_csl(const Lattice& l,
                                              const CoincidenceRecord& target,
                                              const EnumerationResult& pool) {
    if (!pool.complete || pool.max_sigma < target.sigma)
        throw std::invalid_argument(
            "decompose_csl: pool is not complete up to the target index");
    auto factors = factorize(target.sigma);
    if (factors.size() <= 1)
        return CSLDecomposition{target.csl, {target}, true};

    // One candidate list per prime: the distinct CSLs of that prime-power
    // index which contain the target.
    std::vector<std::vector<const CoincidenceRecord*>> candidates;
    for (const auto& [prime, exp] : factors) {
        Int q = int_pow(prime, exp);
        std::vector<const CoincidenceRecord*> list;
        std::vector<Lattice> seen;
        for (const auto& rec : pool.records) {
            if (rec.sigma != q) continue;
            if (std::find(seen.begin(), seen.end(), rec.csl) != seen.end())
                continue;
            seen.push_back(rec.csl);
            if (is_sublattice(target.csl, rec.csl)) list.push_back(&rec);
        }
        if (list.empty()) return std::nullopt;
        candidates.push_back(std::move(list));
    }

    std::vector<const CoincidenceRecord*> current(candidates.size());
    std::optional<std::vector<const CoincidenceRecord*>> found;
    long long matches = 0;
    auto search = [&](auto&& self, std::size_t level, const Lattice& acc) -> void {
        if (level == candidates.size()) {
            if (acc == target.csl) {
                ++matches;
                if (!found) found = current;
            }
            return;
        }
        for (const auto* rec : candidates[level]) {
            current[level] = rec;
            self(self, level + 1, intersect(acc, rec->csl));
        }
    };
    search(search, 0, l);
    if (!found) return std::nullopt;
    if (matches > 1)
        throw std::logic_error("decompose_csl: decomposition is not unique");
    CSLDecomposition out;
    out.target = target.csl;
    for (const auto* rec : *found) out.parts.push_back(*rec);
    out.exact = true;
    return out;
}

std::optional<std::vector<MCSLRecord>> decompose_mcsl(
    const Lattice& l, const std::vector<Isometry>& rs,
    const EnumerationResult& pool) {
    MCSLRecord target = mcsl(l, rs);
    if (!pool.complete || pool.max_sigma < target.sigma)
        throw std::invalid_argument(
            "decompose_mcsl: pool is not complete up to the target index");
    auto factors = factorize(target.sigma);
    if (factors.size() <= 1) return std::vector<MCSLRecord>{target};

    std::vector<MCSLRecord> parts;
    Lattice check = l;
    for (const auto& [prime, exp] : factors) {
        Int q = int_pow(prime, exp);
        // Primary part: the unique lattice between target and l of index q.
        Lattice part = sum(target.lattice, scale(l, Rational(target.sigma / q)));
        if (index(part, l) != q)
            throw std::logic_error("decompose_mcsl: primary part has wrong index");
        check = intersect(check, part);

        std::vector<const CoincidenceRecord*> cands;
        std::vector<Lattice> seen;
        for (const auto& rec : pool.records) {
            if (rec.sigma == 1 || q % rec.sigma != 0) continue;
            if (!is_sublattice(part, rec.csl)) continue;
            if (std::find(seen.begin(), seen.end(), rec.csl) != seen.end())
                continue;
            seen.push_back(rec.csl);
            cands.push_back(&rec);
        }

        std::optional<std::vector<const CoincidenceRecord*>> found;
        std::vector<const CoincidenceRecord*> chosen;
        auto search = [&](auto&& self, std::size_t start,
                          const Lattice& acc) -> void {
            if (found) return;
            if (acc == part) {
                found = chosen;
                return;
            }
            if (chosen.size() == rs.size()) return;
            for (std::size_t i = start; i < cands.size(); ++i) {
                chosen.push_back(cands[i]);
                self(self, i + 1, intersect(acc, cands[i]->csl));
                chosen.pop_back();
                if (found) return;
            }
        };
        search(search, 0, l);
        if (!found) return std::nullopt;

        MCSLRecord rec;
        for (const auto* c : *found) rec.isometries.push_back(c->isometry);
        rec.lattice = part;
        rec.sigma = q;
        parts.push_back(std::move(rec));
    }
    if (check != target.lattice)
        throw std::logic_error("decompose_mcsl: primary parts do not intersect "
                               "to the target");
    return parts;
}

std::optional<PiDecomposition> pi_decompose(const Lattice& l, const Isometry& r,
                                            const std::vector<Int>& pi,
                                            const EnumerationResult& pool) {
    for (std::size_t i = 0; i < pi.size(); ++i) {
        if (pi[i] < 2 || !factorize(pi[i]).count(pi[i]))
            throw std::invalid_argument("pi_decompose: ordering entry is not prime");
        for (std::size_t j = i + 1; j < pi.size(); ++j)
            if (pi[i] == pi[j])
                throw std::invalid_argument("pi_decompose: ordering repeats a prime");
    }
    Int s = sigma(l, r);
    if (!pool.complete || pool.max_sigma < s)
        throw std::invalid_argument(
            "pi_decompose: pool is not complete up to the target index");
    auto factors = factorize(s);
    std::vector<Int> targets(pi.size(), Int(1));
    for (std::size_t i = 0; i < pi.size(); ++i) {
        auto it = factors.find(pi[i]);
        if (it != factors.end()) {
            targets[i] = int_pow(it->first, it->second);
            factors.erase(it);
        }
    }
    if (!factors.empty())
        throw std::invalid_argument(
            "pi_decompose: ordering does not cover every prime of the index");

    PointGroup p = point_group(l);
    std::vector<Isometry> acc;
    auto search = [&](auto&& self, const Isometry& remaining,
                      const Int& remaining_sigma, std::size_t idx) -> bool {
        if (idx + 1 == pi.size()) {
            // The final factor absorbs whatever is left, including a pure
            // point-group element when its target power is 1.
            if (sigma(l, remaining) != targets[idx]) return false;
            acc.push_back(remaining);
            return true;
        }
        Int q = targets[idx];
        if (q == 1) {
            acc.push_back(Isometry::identity(l.dim()));
            if (self(self, remaining, remaining_sigma, idx + 1)) return true;
            acc.pop_back();
            return false;
        }
        for (const auto& rec : pool.records) {
            if (rec.sigma != q) continue;
            for (const auto& tw : p.elements) {
                Isometry f = rec.cls.representative * tw;
                Isometry rest = f.inverse() * remaining;
                if (sigma(l, rest) * q != remaining_sigma) continue;
                acc.push_back(f);
                if (self(self, rest, remaining_sigma / q, idx + 1)) return true;
                acc.pop_back();
            }
        }
        return false;
    };
    if (pi.empty()) {
        if (!(r == Isometry::identity(l.dim()))) return std::nullopt;
        return PiDecomposition{pi, {}, r};
    }
    if (!search(search, r, s, 0)) return std::nullopt;

    Isometry prod = Isometry::identity(l.dim());
    for (const auto& f : acc) prod = prod * f;
    if (!(prod == r))
        throw std::logic_error("pi_decompose: factor product mismatch");
    return PiDecomposition{pi, acc, r};
}

std::vector<OpenQuestionEntry> open_question_experiment(
    const std::vector<Lattice>& family, const Int& n) {
    std::vector<OpenQuestionEntry> out;
    for (const auto& l : family) {
        MultiplicityTable t = multiplicity_table(enumerate_auto(l, n));
        OpenQuestionEntry e;
        e.lattice = l;
        e.range = n;
        e.f_witnesses = check_multiplicative(t, Multiplicity::f);
        e.f_iso_witnesses = check_multiplicative(t, Multiplicity::f_iso);
        e.f_multiplicative = e.f_witnesses.empty();
        e.f_iso_multiplicative = e.f_iso_witnesses.empty();
        e.converse_candidate = e.f_multiplicative && !e.f_iso_multiplicative;
        out.push_back(std::move(e));
    }
    return out;
}

std::optional<OrderSensitivity> find_order_sensitivity(
    const EnumerationResult& pool) {
    const Lattice& l = pool.lattice;
    PointGroup p = point_group(l);
    // Class representatives first, point-group twists only if needed.
    for (int with_twists = 0; with_twists < 2; ++with_twists) {
        for (const auto& a : pool.records) {
            for (const auto& b : pool.records) {
                std::size_t twists = with_twists ? p.elements.size() : 1;
                for (std::size_t ti = 0; ti < twists; ++ti) {
                    Isometry r2 = with_twists
                                      ? p.elements[ti] * b.cls.representative
                                      : b.cls.representative;
                    Isometry r1 = a.cls.representative;
                    Lattice prod = csl(l, r1 * r2, p).csl;
                    Lattice both = intersect(a.csl, with_twists
                                                        ? csl(l, r2, p).csl
                                                        : b.csl);
                    if (!(prod == both))
                        return OrderSensitivity{r1, r2, prod, both};
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace csl_lab
