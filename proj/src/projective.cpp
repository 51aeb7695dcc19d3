#include "exppairs/projective.hpp"

#include <stdexcept>

namespace exppairs {

namespace {

Integer gcd3(const Integer& a, const Integer& b, const Integer& c) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

}  // namespace

ProjPoint reduce_point(ProjPoint p) {
  if (p.x == 0 && p.y == 0 && p.z == 0)
    throw std::domain_error("all-zero projective point");
  Integer g = gcd3(p.x, p.y, p.z);
  p.x /= g;
  p.y /= g;
  p.z /= g;
  const Integer& lead = (p.z != 0) ? p.z : (p.x != 0 ? p.x : p.y);
  if (sgn(lead) < 0) {
    p.x = -p.x;
    p.y = -p.y;
    p.z = -p.z;
  }
  return p;
}

ProjMatrix reduce_matrix(ProjMatrix mat) {
  Integer g = 0;
  for (const auto& row : mat.m)
    for (const auto& e : row) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
  if (g == 0) throw std::domain_error("zero projective matrix");
  for (auto& row : mat.m)
    for (auto& e : row) e /= g;
  return mat;
}

ProjMatrix mat_mul(const ProjMatrix& lhs, const ProjMatrix& rhs) {
  ProjMatrix out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Integer s = 0;
      for (int k = 0; k < 3; ++k) s += lhs.m[i][k] * rhs.m[k][j];
      out.m[i][j] = s;
    }
  return reduce_matrix(out);
}

ProjPoint mat_apply(const ProjMatrix& mat, const ProjPoint& p) {
  ProjPoint out;
  out.x = mat.m[0][0] * p.x + mat.m[0][1] * p.y + mat.m[0][2] * p.z;
  out.y = mat.m[1][0] * p.x + mat.m[1][1] * p.y + mat.m[1][2] * p.z;
  out.z = mat.m[2][0] * p.x + mat.m[2][1] * p.y + mat.m[2][2] * p.z;
  if (out.x == 0 && out.y == 0 && out.z == 0)
    throw std::domain_error("degenerate projective image");
  return reduce_point(out);
}

ProjPoint mu(const Rational& k, const Rational& l) {
  Integer lcm;
  mpz_lcm(lcm.get_mpz_t(), k.get_den_mpz_t(), l.get_den_mpz_t());
  ProjPoint p;
  p.x = k.get_num() * (lcm / k.get_den());
  p.y = l.get_num() * (lcm / l.get_den());
  p.z = lcm;
  return reduce_point(p);
}

std::pair<Rational, Rational> mu_inv(const ProjPoint& p) {
  if (p.z == 0) throw std::domain_error("point at infinity has no affine image");
  return {make_rational(p.x, p.z), make_rational(p.y, p.z)};
}

Integer det(const ProjMatrix& mat) {
  const auto& m = mat.m;
  Integer d = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]);
  d -= m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]);
  d += m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  return d;
}

namespace {

ProjMatrix from_longs(long e00, long e01, long e02, long e10, long e11, long e12,
                      long e20, long e21, long e22) {
  ProjMatrix m;
  m.m = {{{Integer(e00), Integer(e01), Integer(e02)},
          {Integer(e10), Integer(e11), Integer(e12)},
          {Integer(e20), Integer(e21), Integer(e22)}}};
  return m;
}

}  // namespace

const ProjMatrix& identity_matrix() {
  static const ProjMatrix m = from_longs(1, 0, 0, 0, 1, 0, 0, 0, 1);
  return m;
}

const ProjMatrix& op_a_matrix() {
  static const ProjMatrix m = from_longs(1, 0, 0, 1, 1, 1, 2, 0, 2);
  return m;
}

const ProjMatrix& op_ba_matrix() {
  static const ProjMatrix m = from_longs(0, 1, 0, 2, 0, 1, 2, 0, 2);
  return m;
}

const ProjMatrix& op_b_matrix() {
  static const ProjMatrix m = from_longs(0, 2, -1, 2, 0, 1, 0, 0, 2);
  return m;
}

}  // namespace exppairs
