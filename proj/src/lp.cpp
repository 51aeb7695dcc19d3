#include "exppairs/lp.hpp"

#include <stdexcept>

namespace exppairs {

namespace {

Point as_point(const ExponentPair& p) { return Point{p.k, p.l}; }

}  // namespace

Rational eval_frac(const FracLinear& fl, const Point& p) {
  Rational den = fl.den_at(p);
  if (sgn(den) == 0) throw std::domain_error("objective denominator vanishes at point");
  return Rational(fl.num_at(p) / den);
}

Rational eval_frac(const FracLinear& fl, const ExponentPair& p) {
  return eval_frac(fl, as_point(p));
}

std::optional<Rational> try_eval_frac(const FracLinear& fl, const Point& p) {
  Rational den = fl.den_at(p);
  if (sgn(den) == 0) return std::nullopt;
  return Rational(fl.num_at(p) / den);
}

Rational eval_objective(const MaxObjective& obj, const Point& p) {
  if (obj.parts.empty()) throw std::invalid_argument("objective with no parts");
  Rational best = eval_frac(obj.parts[0], p);
  for (std::size_t i = 1; i < obj.parts.size(); ++i)
    best = std::max(best, eval_frac(obj.parts[i], p));
  return best;
}

Rational eval_objective(const MaxObjective& obj, const ExponentPair& p) {
  return eval_objective(obj, as_point(p));
}

std::optional<Rational> try_eval_objective(const MaxObjective& obj, const Point& p) {
  if (obj.parts.empty()) return std::nullopt;
  std::optional<Rational> best;
  for (const auto& part : obj.parts) {
    auto v = try_eval_frac(part, p);
    if (!v) return std::nullopt;
    if (!best || *v > *best) best = *v;
  }
  return best;
}

bool check_constraint(const LinearConstraint& c, const Point& p) {
  int s = sgn(c.value_at(p));
  return c.rel == Relation::strict ? s > 0 : s >= 0;
}

bool check_constraint(const LinearConstraint& c, const ExponentPair& p) {
  return check_constraint(c, as_point(p));
}

ConvexPolygon clip_halfplane(const ConvexPolygon& poly, const LinearConstraint& c) {
  const auto& v = poly.vertices;
  if (v.empty()) return poly;
  if (v.size() == 1) return sgn(c.value_at(v[0])) >= 0 ? poly : ConvexPolygon{};

  auto intersect = [&](const Point& a, const Point& b) {
    Rational va = c.value_at(a), vb = c.value_at(b);
    Rational t(va / Rational(va - vb));  // va and vb have opposite signs
    return Point{Rational(a.k + t * (b.k - a.k)), Rational(a.l + t * (b.l - a.l))};
  };

  std::vector<Point> out;
  const std::size_t n = v.size();
  // A segment is traversed once, a polygon cyclically.
  const std::size_t edges = (n == 2) ? 1 : n;
  for (std::size_t i = 0; i < edges; ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % n];
    int sa = sgn(c.value_at(a)), sb = sgn(c.value_at(b));
    if (sa >= 0) out.push_back(a);
    if ((sa > 0 && sb < 0) || (sa < 0 && sb > 0)) out.push_back(intersect(a, b));
  }
  if (n == 2 && sgn(c.value_at(v[1])) >= 0) out.push_back(v[1]);

  // Dedupe; clipping can emit coincident vertices at touch points.
  std::vector<Point> dedup;
  for (const Point& p : out)
    if (dedup.empty() || !(dedup.back() == p)) dedup.push_back(p);
  while (dedup.size() > 1 && dedup.front() == dedup.back()) dedup.pop_back();
  return ConvexPolygon{std::move(dedup)};
}

bool feasible(const Region& region, std::span<const LinearConstraint> constraints) {
  for (const auto& part : region.parts) {
    if (part.empty()) continue;
    ConvexPolygon clipped = part;
    for (const auto& c : constraints) {
      clipped = clip_halfplane(clipped, c);
      if (clipped.empty()) break;
    }
    if (clipped.empty()) continue;
    bool ok = true;
    for (const auto& c : constraints) {
      if (c.rel != Relation::strict) continue;
      bool positive = false;
      for (const Point& v : clipped.vertices)
        if (sgn(c.value_at(v)) > 0) {
          positive = true;
          break;
        }
      if (!positive) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

std::optional<ThetaBounds> try_theta_bounds(const MaxObjective& obj, const Region& region) {
  if (obj.parts.empty()) throw std::invalid_argument("objective with no parts");
  bool any_vertex = false;
  for (const auto& part : region.parts) any_vertex = any_vertex || !part.empty();
  if (!any_vertex) return std::nullopt;

  std::optional<Rational> lower;  // max over parts of inf
  std::optional<Rational> upper;  // max over parts of sup
  bool upper_infinite = false;

  for (const auto& fl : obj.parts) {
    std::optional<Rational> part_min, part_max;
    bool part_sup_infinite = false;
    for (const auto& poly : region.parts)
      for (const Point& v : poly.vertices) {
        Rational den = fl.den_at(v);
        int ds = sgn(den);
        if (ds < 0)
          throw std::domain_error("objective denominator negative on region vertex");
        if (ds == 0) {
          int ns = sgn(fl.num_at(v));
          if (ns < 0)
            throw std::domain_error("objective unbounded below on region");
          if (ns > 0) part_sup_infinite = true;
          // 0/0 vertex: the function is constant along rays from it, so the
          // remaining vertices carry its whole range.
          continue;
        }
        Rational val(fl.num_at(v) / den);
        if (!part_min || val < *part_min) part_min = val;
        if (!part_max || val > *part_max) part_max = val;
      }
    if (!part_min) return std::nullopt;  // part is 0/0 on the whole region
    if (!lower || *part_min > *lower) lower = part_min;
    if (part_sup_infinite)
      upper_infinite = true;
    else if (!upper || *part_max > *upper)
      upper = part_max;
  }
  ThetaBounds b;
  b.lower = *lower;
  if (!upper_infinite) b.upper = *upper;
  return b;
}

ThetaBounds theta_bounds(const MaxObjective& obj, const Region& region) {
  auto b = try_theta_bounds(obj, region);
  if (!b) throw std::domain_error("objective undefined on the whole region");
  return *b;
}

LinearConstraint strictify(const FracLinear& part, const Rational& r) {
  return LinearConstraint{Rational(r * part.d - part.a), Rational(r * part.e - part.b),
                          Rational(r * part.f - part.c), Relation::strict};
}

}  // namespace exppairs
