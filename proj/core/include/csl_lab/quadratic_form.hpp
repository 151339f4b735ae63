#pragma once

#include "csl_lab/matrix.hpp"

#include <vector>

namespace csl_lab {

/// All integer x with x^T g x = c, for positive definite rational g.
/// Deterministic order; includes both signs of every solution.
std::vector<std::vector<Int>> vectors_with_norm(const RatMatrix& g, const Rational& c);

/// All integer matrices u with u^T g1 u = g2, both forms positive
/// definite of equal dimension.  g1 == g2 yields the automorphism group
/// of the form.
std::vector<IntMatrix> form_isometries(const RatMatrix& g1, const RatMatrix& g2);

/// Canonical shape of a positive definite binary form: the content scalar
/// together with the content-free reduced Gram (0 <= 2b <= a <= c).  Two
/// forms are GL(2,Z)-equivalent up to no scaling iff their shapes match.
struct BinaryFormShape {
    Rational scale;   // content of the rational Gram
    Int a, b, c;      // reduced primitive form
    friend bool operator==(const BinaryFormShape&, const BinaryFormShape&) = default;
};

BinaryFormShape reduce_binary_form(const RatMatrix& gram);

}  // namespace csl_lab
