#include "csl_lab/presets.hpp"

namespace csl_lab {

std::vector<std::string> lattice_preset_names() {
    return {"square", "cubic", "2zx3z", "zx5z"};
}

std::optional<Lattice> lattice_preset(const std::string& name) {
    if (name == "square") return Lattice::standard(2);
    if (name == "cubic") return Lattice::standard(3);
    if (name == "2zx3z")
        return Lattice::from_basis(RatMatrix{{Rational(2), Rational(0)},
                                             {Rational(0), Rational(3)}});
    if (name == "zx5z")
        return Lattice::from_basis(RatMatrix{{Rational(1), Rational(0)},
                                             {Rational(0), Rational(5)}});
    return std::nullopt;
}

std::vector<std::string> isometry_preset_names() {
    return {"identity2", "identity3", "rot90",    "mirror2", "rot5",
            "rot13",     "rot65",     "quat1110", "quat2100"};
}

std::optional<Isometry> isometry_preset(const std::string& name) {
    if (name == "identity2") return Isometry::identity(2);
    if (name == "identity3") return Isometry::identity(3);
    if (name == "rot90")
        return Isometry::from_matrix(RatMatrix{{Rational(0), Rational(-1)},
                                               {Rational(1), Rational(0)}});
    if (name == "mirror2")
        return Isometry::from_matrix(RatMatrix{{Rational(1), Rational(0)},
                                               {Rational(0), Rational(-1)}});
    if (name == "rot5")
        return Isometry::from_matrix(RatMatrix{{Rational(3, 5), Rational(-4, 5)},
                                               {Rational(4, 5), Rational(3, 5)}});
    if (name == "rot13")
        return Isometry::from_matrix(
            RatMatrix{{Rational(5, 13), Rational(-12, 13)},
                      {Rational(12, 13), Rational(5, 13)}});
    if (name == "rot65") return *isometry_preset("rot5") * *isometry_preset("rot13");
    if (name == "quat1110")
        return Isometry::from_matrix(
            RatMatrix{{Rational(1, 3), Rational(2, 3), Rational(2, 3)},
                      {Rational(2, 3), Rational(1, 3), Rational(-2, 3)},
                      {Rational(-2, 3), Rational(2, 3), Rational(-1, 3)}});
    if (name == "quat2100")
        return Isometry::from_matrix(
            RatMatrix{{Rational(1), Rational(0), Rational(0)},
                      {Rational(0), Rational(3, 5), Rational(-4, 5)},
                      {Rational(0), Rational(4, 5), Rational(3, 5)}});
    return std::nullopt;
}

}  // namespace csl_lab
