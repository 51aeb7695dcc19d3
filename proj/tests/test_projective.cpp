#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "exppairs/pairs.hpp"
#include "exppairs/projective.hpp"

using namespace exppairs;

namespace {

ProjPoint pt(long x, long y, long z) { return ProjPoint{Integer(x), Integer(y), Integer(z)}; }

ProjMatrix scale(const ProjMatrix& m, long s) {
  ProjMatrix out = m;
  for (auto& row : out.m)
    for (auto& e : row) e *= s;
  return out;
}

}  // namespace

TEST_CASE("reduce_point divides by gcd and orients z positive") {
  CHECK(reduce_point(pt(2, 8, 12)) == pt(1, 4, 6));
  CHECK(reduce_point(pt(1, 4, 6)) == pt(1, 4, 6));
  CHECK(reduce_point(pt(-1, -4, -6)) == pt(1, 4, 6));
  CHECK(reduce_point(pt(-3, 6, 0)) == pt(1, -2, 0));  // z = 0: first nonzero positive
  CHECK_THROWS_AS(reduce_point(pt(0, 0, 0)), std::domain_error);
}

TEST_CASE("reduce_matrix divides by the collective gcd") {
  CHECK(reduce_matrix(scale(op_a_matrix(), 2)) == op_a_matrix());
  CHECK(reduce_matrix(op_a_matrix()) == op_a_matrix());
  CHECK(reduce_matrix(scale(identity_matrix(), 6)) == identity_matrix());
  ProjMatrix zero;
  for (auto& row : zero.m)
    for (auto& e : row) e = 0;
  CHECK_THROWS_AS(reduce_matrix(zero), std::domain_error);
}

TEST_CASE("mat_mul composes actions") {
  CHECK(mat_mul(op_a_matrix(), identity_matrix()) == op_a_matrix());

  ProjPoint p = pt(0, 1, 1);
  ProjPoint via_product = mat_apply(mat_mul(op_ba_matrix(), op_a_matrix()), p);
  ProjPoint via_steps = mat_apply(op_ba_matrix(), mat_apply(op_a_matrix(), p));
  CHECK(via_product == via_steps);
}

TEST_CASE("A^n matches the eigendecomposition closed form") {
  // A = S J S^-1 with S = [[0,-1,0],[1,0,1],[0,2,1]], det S = 1.
  ProjMatrix s, s_inv;
  s.m = {{{Integer(0), Integer(-1), Integer(0)},
          {Integer(1), Integer(0), Integer(1)},
          {Integer(0), Integer(2), Integer(1)}}};
  s_inv.m = {{{Integer(-2), Integer(1), Integer(-1)},
              {Integer(-1), Integer(0), Integer(0)},
              {Integer(2), Integer(0), Integer(1)}}};
  CHECK(mat_mul(s, s_inv) == identity_matrix());

  for (int n : {1, 2, 3, 7}) {
    ProjMatrix jordan_power;
    jordan_power.m = {{{Integer(1), Integer(n), Integer(0)},
                       {Integer(0), Integer(1), Integer(0)},
                       {Integer(0), Integer(0), Integer(1) << n}}};
    ProjMatrix closed = mat_mul(mat_mul(s, jordan_power), s_inv);
    ProjMatrix iterated = identity_matrix();
    for (int i = 0; i < n; ++i) iterated = mat_mul(iterated, op_a_matrix());
    CHECK(closed == iterated);
  }
}

TEST_CASE("mat_apply on reference points") {
  CHECK(mat_apply(op_a_matrix(), pt(1, 4, 6)) == pt(1, 11, 14));
  CHECK(mat_apply(op_ba_matrix(), pt(0, 1, 1)) == pt(1, 1, 2));
  CHECK(mat_apply(identity_matrix(), pt(1, 4, 6)) == pt(1, 4, 6));
}

TEST_CASE("mu and mu_inv") {
  CHECK(mu(make_rational(1, 6), make_rational(2, 3)) == pt(1, 4, 6));
  CHECK(mu(Rational(0), Rational(1)) == pt(0, 1, 1));
  CHECK(mu(make_rational(1, 2), make_rational(1, 2)) == pt(1, 1, 2));

  auto [k, l] = mu_inv(pt(1, 4, 6));
  CHECK(k == make_rational(1, 6));
  CHECK(l == make_rational(2, 3));
  auto [k0, l0] = mu_inv(pt(0, 1, 1));
  CHECK(k0 == 0);
  CHECK(l0 == 1);
  CHECK_THROWS_AS(mu_inv(pt(1, 2, 0)), std::domain_error);
}

TEST_CASE("round trip and action invariance on random rationals") {
  std::mt19937 rng(7);
  auto rnd = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  for (int i = 0; i < 200; ++i) {
    Rational k = make_rational(rnd(-30, 30), rnd(1, 40));
    Rational l = make_rational(rnd(-30, 30), rnd(1, 40));
    auto [k2, l2] = mu_inv(mu(k, l));
    CHECK(k2 == k);
    CHECK(l2 == l);
  }

  // Scaling a matrix does not change its projective action.
  ProjPoint p = mu(make_rational(2, 13), make_rational(35, 52));
  CHECK(mat_apply(reduce_matrix(scale(op_ba_matrix(), 15)), p) ==
        mat_apply(op_ba_matrix(), p));
}

TEST_CASE("matrix products act as composed letters") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    ProjMatrix m1 = identity_matrix(), m2 = identity_matrix();
    for (int i = 0; i < 4; ++i) {
      m1 = mat_mul(m1, (rng() & 1) ? op_a_matrix() : op_ba_matrix());
      m2 = mat_mul(m2, (rng() & 1) ? op_a_matrix() : op_ba_matrix());
    }
    ProjPoint p = mu(make_rational(1, 6), make_rational(2, 3));
    CHECK(mat_apply(mat_mul(m1, m2), p) == mat_apply(m1, mat_apply(m2, p)));
  }
}

TEST_CASE("operator matrices are nonsingular") {
  CHECK(det(op_a_matrix()) != 0);
  CHECK(det(op_ba_matrix()) != 0);
  CHECK(det(op_b_matrix()) != 0);
}
