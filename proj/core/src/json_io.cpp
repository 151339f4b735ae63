#include "csl_lab/json_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace csl_lab {

using nlohmann::json;

json to_json(const Int& v) {
    static const Int limit = Int(1) << 53;
    if (abs(v) <= limit) return json(to_int64(v));
    return json(v.str());
}

json to_json(const Rational& v) { return json(v.str()); }

json to_json(const RatMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        rows.push_back(std::move(row));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

json to_json(const Lattice& l) {
    json cols = json::array();
    for (std::size_t j = 0; j < l.mat().cols(); ++j) {
        json col = json::array();
        for (std::size_t i = 0; i < l.mat().rows(); ++i)
            col.push_back(to_json(l.mat()(i, j)));
        cols.push_back(std::move(col));
    }
    return json{{"dim", l.dim()}, {"den", to_json(l.den())}, {"mat", cols}};
}

json to_json(const Isometry& r) {
    json rows = json::array();
    for (std::size_t i = 0; i < r.dim(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < r.dim(); ++j)
            row.push_back(r.mat()(i, j).str());
        rows.push_back(std::move(row));
    }
    return json{{"dim", r.dim()}, {"mat", rows}};
}

json to_json(const CoincidenceRecord& rec) {
    return json{{"sigma", to_json(rec.sigma)},
                {"csl", to_json(rec.csl)},
                {"isometry", to_json(rec.isometry)},
                {"class_rep", to_json(rec.cls.representative)}};
}

json to_json(const EnumerationResult& e) {
    json records = json::array();
    for (const auto& rec : e.records) records.push_back(to_json(rec));
    return json{{"lattice", to_json(e.lattice)},
                {"max_sigma", to_json(e.max_sigma)},
                {"complete", e.complete},
                {"records", records}};
}

json to_json(const MultiplicityTable& t) {
    json rows = json::array();
    for (const auto& [m, row] : t.rows)
        rows.push_back(json::array({to_json(m), to_json(row.f_iso),
                                    to_json(row.f_rot), to_json(row.f)}));
    return json{{"lattice", to_json(t.lattice)},
                {"max_index", to_json(t.max_index)},
                {"pg_order", t.pg_order},
                {"pg_rotation_order", t.pg_rotation_order},
                {"rows", rows}};
}

json to_json(const Witness& w) {
    return json{{"m", to_json(w.m)},
                {"n", to_json(w.n)},
                {"lhs", to_json(w.lhs)},
                {"rhs", to_json(w.rhs)},
                {"kind", w.kind}};
}

json to_json(const DirichletData& d) {
    json coeffs = json::array();
    for (const auto& [m, c] : d.coefficients)
        coeffs.push_back(json::array({to_json(m), to_json(c)}));
    json primes = json::array();
    for (const auto& p : d.euler_primes) primes.push_back(to_json(p));
    return json{{"coefficients", coeffs},
                {"euler_primes", primes},
                {"truncation", to_json(d.truncation)}};
}

json to_json(const TowerReport& t) {
    json nodes;
    for (const auto& [name, lattice] : t.nodes) nodes[name] = to_json(lattice);
    return json{{"m", to_json(t.m)},
                {"n", to_json(t.n)},
                {"d", to_json(t.d)},
                {"k", to_json(t.k)},
                {"consistent", t.consistent},
                {"failures", t.failures},
                {"nodes", nodes}};
}

json to_json(const RecoveryReport& r) {
    return json{{"first", r.first},
                {"second_m", r.second_m},
                {"second_n", r.second_n}};
}

json to_json(const PairSweepReport& r) {
    return json{{"lattice", to_json(r.lattice)},
                {"range", to_json(r.range)},
                {"pairs", r.pairs},
                {"coprime_pairs", r.coprime_pairs},
                {"divisibility_failed", r.divisibility_failed},
                {"product_index_failed", r.product_index_failed},
                {"intersection_failed", r.intersection_failed},
                {"tower_failed", r.tower_failed},
                {"collapse_failed", r.collapse_failed},
                {"recovery_first_failed", r.recovery_first_failed},
                {"recovery_second_m_failed", r.recovery_second_m_failed},
                {"recovery_second_n_failed", r.recovery_second_n_failed},
                {"examples", r.examples}};
}

json to_json(const CSLDecomposition& d) {
    json parts = json::array();
    for (const auto& p : d.parts) parts.push_back(to_json(p));
    return json{{"target", to_json(d.target)},
                {"parts", parts},
                {"exact", d.exact}};
}

json to_json(const MCSLRecord& m) {
    json isos = json::array();
    for (const auto& r : m.isometries) isos.push_back(to_json(r));
    return json{{"isometries", isos},
                {"lattice", to_json(m.lattice)},
                {"sigma", to_json(m.sigma)}};
}

json to_json(const PiDecomposition& p) {
    json ordering = json::array();
    for (const auto& q : p.ordering) ordering.push_back(to_json(q));
    json factors = json::array();
    for (const auto& f : p.factors) factors.push_back(to_json(f));
    return json{{"ordering", ordering},
                {"factors", factors},
                {"target", to_json(p.target)}};
}

json to_json(const OpenQuestionEntry& e) {
    json fw = json::array();
    for (const auto& w : e.f_witnesses) fw.push_back(to_json(w));
    json iw = json::array();
    for (const auto& w : e.f_iso_witnesses) iw.push_back(to_json(w));
    return json{{"lattice", to_json(e.lattice)},
                {"range", to_json(e.range)},
                {"f_multiplicative", e.f_multiplicative},
                {"f_iso_multiplicative", e.f_iso_multiplicative},
                {"f_witnesses", fw},
                {"f_iso_witnesses", iw},
                {"converse_candidate", e.converse_candidate}};
}

json to_json(const SSLTable& t) {
    json rows = json::array();
    for (const auto& [m, g] : t.rows)
        rows.push_back(json::array({to_json(m), to_json(g)}));
    return json{{"lattice", to_json(t.lattice)},
                {"max_index", to_json(t.max_index)},
                {"rows", rows}};
}

json to_json(const SimilarityRecord& r) {
    return json{{"isometry", to_json(r.r)},
                {"scale", r.c.str()},
                {"sublattice", to_json(r.sublattice)},
                {"index", to_json(r.index)}};
}

json to_json(const OrderSensitivity& o) {
    return json{{"r1", to_json(o.r1)},
                {"r2", to_json(o.r2)},
                {"product_csl", to_json(o.product_csl)},
                {"intersection", to_json(o.intersection)}};
}

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) return parse_int(j.get<std::string>());
    throw std::invalid_argument("int_from_json: expected integer or string");
}

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(Int(j.get<long long>()));
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    throw std::invalid_argument("rational_from_json: expected rational string");
}

RatMatrix matrix_from_json(const json& j) {
    std::size_t rows = j.at("rows").get<std::size_t>();
    std::size_t cols = j.at("cols").get<std::size_t>();
    const json& entries = j.at("entries");
    if (entries.size() != rows)
        throw std::invalid_argument("matrix_from_json: row count mismatch");
    RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (entries[i].size() != cols)
            throw std::invalid_argument("matrix_from_json: column count mismatch");
        for (std::size_t jj = 0; jj < cols; ++jj)
            m(i, jj) = rational_from_json(entries[i][jj]);
    }
    return m;
}

Lattice lattice_from_json(const json& j) {
    std::size_t dim = j.at("dim").get<std::size_t>();
    Int den = int_from_json(j.at("den"));
    const json& cols = j.at("mat");
    IntMatrix m(dim, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != dim)
            throw std::invalid_argument("lattice_from_json: column length mismatch");
        for (std::size_t i = 0; i < dim; ++i) m(i, c) = int_from_json(cols[c][i]);
    }
    return Lattice::from_generators(den, m);
}

Isometry isometry_from_json(const json& j) {
    std::size_t dim = j.at("dim").get<std::size_t>();
    const json& rows = j.at("mat");
    if (rows.size() != dim)
        throw std::invalid_argument("isometry_from_json: row count mismatch");
    RatMatrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (rows[i].size() != dim)
            throw std::invalid_argument("isometry_from_json: column count mismatch");
        for (std::size_t jj = 0; jj < dim; ++jj)
            m(i, jj) = rational_from_json(rows[i][jj]);
    }
    return Isometry::from_matrix(m);
}

void write_json_file(const std::string& path, const json& j) {
    std::filesystem::path target(path);
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw std::runtime_error("write_json_file: cannot open " + tmp.string());
        out << j.dump(2) << "\n";
        if (!out) throw std::runtime_error("write_json_file: write failed");
    }
    std::filesystem::rename(tmp, target);
}

std::string csv_multiplicity(const MultiplicityTable& t) {
    std::ostringstream os;
    os << "m,f_iso,f_rot,f\n";
    for (Int m = 1; m <= t.max_index; ++m) {
        MultiplicityRow row = t.at(m);
        os << m.str() << "," << row.f_iso.str() << "," << row.f_rot.str() << ","
           << row.f.str() << "\n";
    }
    return os.str();
}

std::string csv_ssl(const SSLTable& t) {
    std::ostringstream os;
    os << "m,g\n";
    for (Int m = 1; m <= t.max_index; ++m) os << m.str() << "," << t.g(m).str() << "\n";
    return os.str();
}

}  // namespace csl_lab
