#include "csl_lab/csl.hpp"
#include "csl_lab/json_io.hpp"
#include "csl_lab/presets.hpp"

#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

using namespace csl_lab;
using nlohmann::json;

TEST_SUITE("json") {

TEST_CASE("integers widen to strings only past 53 bits") {
    CHECK(to_json(Int(42)).is_number());
    CHECK(to_json(Int(-7)).is_number());
    Int edge = Int(1) << 53;
    CHECK(to_json(edge).is_number());
    CHECK(to_json(edge + 1).is_string());
    CHECK(to_json(-(edge + 1)).is_string());

    CHECK(int_from_json(to_json(Int(42))) == 42);
    CHECK(int_from_json(to_json(edge + 1)) == edge + 1);
    Int big("-123456789012345678901234567890");
    CHECK(int_from_json(to_json(big)) == big);
}

TEST_CASE("rationals as fraction strings") {
    CHECK(to_json(Rational(3, 5)) == json("3/5"));
    CHECK(to_json(Rational(-2)) == json("-2"));
    CHECK(rational_from_json(to_json(Rational(22, -7))) == Rational(-22, 7));
    CHECK_THROWS_AS(rational_from_json(json("x/y")), std::invalid_argument);
}

TEST_CASE("lattice round trip") {
    for (const auto& name : lattice_preset_names()) {
        Lattice l = *lattice_preset(name);
        CHECK(lattice_from_json(to_json(l)) == l);
    }
    Lattice half = scale(Lattice::standard(2), Rational(1, 2));
    CHECK(lattice_from_json(to_json(half)) == half);
    CHECK(to_json(*lattice_preset("2zx3z")).dump() ==
          "{\"den\":1,\"dim\":2,\"mat\":[[2,0],[0,3]]}");
}

TEST_CASE("isometry round trip validates orthogonality") {
    for (const auto& name : isometry_preset_names()) {
        Isometry r = *isometry_preset(name);
        CHECK(isometry_from_json(to_json(r)) == r);
    }
    json bad = to_json(*isometry_preset("rot5"));
    bad["mat"][0][0] = "1";
    CHECK_THROWS_AS(isometry_from_json(bad), std::invalid_argument);
}

TEST_CASE("records serialize with their index") {
    Lattice z2 = Lattice::standard(2);
    CoincidenceRecord rec = csl(z2, *isometry_preset("rot5"));
    json j = to_json(rec);
    CHECK(j["sigma"] == 5);
    CHECK(lattice_from_json(j["csl"]) == rec.csl);
    CHECK(isometry_from_json(j["isometry"]) == rec.isometry);
}

TEST_CASE("file output is atomic and re-readable") {
    std::string path = (std::filesystem::temp_directory_path() /
                        "csl_lab_json_test.json").string();
    json j;
    j["b"] = 2;
    j["a"] = to_json(Int(1) << 60);
    write_json_file(path, j);
    CHECK_FALSE(std::filesystem::exists(path + ".tmp"));
    std::ifstream in(path);
    REQUIRE(in.good());
    json back;
    in >> back;
    CHECK(back == j);
    std::string line;
    std::ifstream raw(path);
    std::getline(raw, line);
    CHECK(line == "{");
    std::remove(path.c_str());
}

TEST_CASE("csv tables") {
    MultiplicityTable t = multiplicity_table(enumerate_square(10));
    std::string csv = csv_multiplicity(t);
    CHECK(csv.rfind("m,f_iso,f_rot,f\n", 0) == 0);
    CHECK(csv.find("\n1,1,1,1\n") != std::string::npos);
    CHECK(csv.find("\n5,2,2,2\n") != std::string::npos);
    CHECK(csv.find("\n10,0,0,0\n") != std::string::npos);

    SSLTable s = ssl_table(Lattice::standard(2), 5);
    std::string scsv = csv_ssl(s);
    CHECK(scsv.rfind("m,g\n", 0) == 0);
    CHECK(scsv.find("\n5,2\n") != std::string::npos);
}

}
