#pragma once

#include "csl_lab/ssl.hpp"
#include "csl_lab/theorems.hpp"

#include "json.hpp"

#include <string>

namespace csl_lab {

/// Integers serialize as JSON numbers while they fit 53 bits, as decimal
/// strings beyond; rationals as "p/q" strings. Object keys are emitted in
/// sorted order, so equal values serialize byte for byte.
nlohmann::json to_json(const Int& v);
nlohmann::json to_json(const Rational& v);
nlohmann::json to_json(const RatMatrix& m);
nlohmann::json to_json(const Lattice& l);
nlohmann::json to_json(const Isometry& r);
nlohmann::json to_json(const CoincidenceRecord& rec);
nlohmann::json to_json(const EnumerationResult& e);
nlohmann::json to_json(const MultiplicityTable& t);
nlohmann::json to_json(const Witness& w);
nlohmann::json to_json(const DirichletData& d);
nlohmann::json to_json(const TowerReport& t);
nlohmann::json to_json(const RecoveryReport& r);
nlohmann::json to_json(const PairSweepReport& r);
nlohmann::json to_json(const CSLDecomposition& d);
nlohmann::json to_json(const MCSLRecord& m);
nlohmann::json to_json(const PiDecomposition& p);
nlohmann::json to_json(const OpenQuestionEntry& e);
nlohmann::json to_json(const SSLTable& t);
nlohmann::json to_json(const SimilarityRecord& r);
nlohmann::json to_json(const OrderSensitivity& o);

Int int_from_json(const nlohmann::json& j);
Rational rational_from_json(const nlohmann::json& j);
RatMatrix matrix_from_json(const nlohmann::json& j);
Lattice lattice_from_json(const nlohmann::json& j);
Isometry isometry_from_json(const nlohmann::json& j);

/// Writes via a temporary file and rename, so readers never see a partial
/// document.
void write_json_file(const std::string& path, const nlohmann::json& j);

std::string csv_multiplicity(const MultiplicityTable& t);
std::string csv_ssl(const SSLTable& t);

}  // namespace csl_lab
