#pragma once

#include <array>
#include <utility>

#include "exppairs/rational.hpp"

namespace exppairs {

// Homogeneous coordinates (x:y:z) with big-integer entries. Canonical form
// divides out the gcd and orients z > 0 (first nonzero coordinate positive
// when z = 0).
struct ProjPoint {
  Integer x, y, z;

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
    return a.x == b.x && a.y == b.y && a.z == b.z;
  }
};

// 3x3 big-integer projective transform; canonical form has entry gcd 1.
struct ProjMatrix {
  std::array<std::array<Integer, 3>, 3> m;

  friend bool operator==(const ProjMatrix& a, const ProjMatrix& b) {
    return a.m == b.m;
  }
};

ProjPoint reduce_point(ProjPoint p);
ProjMatrix reduce_matrix(ProjMatrix mat);

// Reduced product lhs * rhs; applying it equals applying rhs, then lhs.
ProjMatrix mat_mul(const ProjMatrix& lhs, const ProjMatrix& rhs);
ProjPoint mat_apply(const ProjMatrix& mat, const ProjPoint& p);

// (k,l) -> (k:l:1) cleared to coprime integers.
ProjPoint mu(const Rational& k, const Rational& l);
// (x:y:z) -> (x/z, y/z); z must be nonzero.
std::pair<Rational, Rational> mu_inv(const ProjPoint& p);

Integer det(const ProjMatrix& mat);

const ProjMatrix& identity_matrix();
const ProjMatrix& op_a_matrix();   // (k:l:m) -> (k, k+l+m, 2k+2m)
const ProjMatrix& op_ba_matrix();  // (k:l:m) -> (l, 2k+m, 2k+2m)
const ProjMatrix& op_b_matrix();   // (k:l:m) -> (2l-m, 2k+m, 2m)

}  // namespace exppairs
