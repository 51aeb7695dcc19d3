#pragma once

#include <optional>
#include <span>
#include <vector>

#include "exppairs/geometry.hpp"
#include "exppairs/rational.hpp"

namespace exppairs {

// (a*k + b*l + c) / (d*k + e*l + f). The denominator must stay positive on
// the search region; it may vanish at a vertex only together with the
// numerator (the function is then constant along rays from that vertex).
struct FracLinear {
  Rational a, b, c, d, e, f;

  Rational num_at(const Point& p) const { return Rational(a * p.k + b * p.l + c); }
  Rational den_at(const Point& p) const { return Rational(d * p.k + e * p.l + f); }
};

struct MaxObjective {
  std::vector<FracLinear> parts;
};

enum class Relation { strict, nonstrict };

// alpha*k + beta*l + gamma > 0 (strict) or >= 0 (nonstrict).
struct LinearConstraint {
  Rational alpha, beta, gamma;
  Relation rel = Relation::nonstrict;

  Rational value_at(const Point& p) const {
    return Rational(alpha * p.k + beta * p.l + gamma);
  }
};

Rational eval_frac(const FracLinear& fl, const Point& p);
Rational eval_frac(const FracLinear& fl, const ExponentPair& p);
std::optional<Rational> try_eval_frac(const FracLinear& fl, const Point& p);

Rational eval_objective(const MaxObjective& obj, const Point& p);
Rational eval_objective(const MaxObjective& obj, const ExponentPair& p);
std::optional<Rational> try_eval_objective(const MaxObjective& obj, const Point& p);

bool check_constraint(const LinearConstraint& c, const Point& p);
bool check_constraint(const LinearConstraint& c, const ExponentPair& p);

// Intersection with the closed halfplane alpha*k + beta*l + gamma >= 0;
// the relation field is ignored here. Empty output is a value, not an error.
ConvexPolygon clip_halfplane(const ConvexPolygon& poly, const LinearConstraint& c);

// True iff some point of the region satisfies every constraint, strict ones
// strictly. Closed clipping first; strictness then needs a positive vertex
// maximum of each strict form on the clipped part (convexity makes a joint
// witness out of per-constraint ones).
bool feasible(const Region& region, std::span<const LinearConstraint> constraints);

struct ThetaBounds {
  Rational lower;                  // theta_minus
  std::optional<Rational> upper;   // theta_plus; nullopt encodes +infinity
};

// theta_minus(V) = max_i inf_V theta_i, theta_plus(V) = max_i sup_V theta_i,
// via vertex enumeration. Returns nullopt when some part is 0/0 on the whole
// region (a single singular vertex). Throws on denominators that go negative.
std::optional<ThetaBounds> try_theta_bounds(const MaxObjective& obj, const Region& region);
ThetaBounds theta_bounds(const MaxObjective& obj, const Region& region);

// theta_i(p) < r as the strict linear constraint (r*d-a)k + (r*e-b)l + (r*f-c) > 0.
LinearConstraint strictify(const FracLinear& part, const Rational& r);

}  // namespace exppairs
