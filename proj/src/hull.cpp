#include "exppairs/geometry.hpp"
#include "exppairs/optimizer.hpp"

#include <stdexcept>

namespace exppairs {

ConvexPolygon hull_polygon(const std::vector<std::pair<Rational, Rational>>& directions,
                           const std::vector<std::string>& initials, const Rational& tolerance) {
  ConvexPolygon hull = triangle_polygon();
  if (directions.empty()) return hull;  // the triangle is the coarsest cover

  SearchConfig config;
  config.tolerance = tolerance;
  config.initial_pairs = initials;

  for (const auto& [alpha, beta] : directions) {
    if (sgn(alpha) == 0 && sgn(beta) == 0)
      throw std::invalid_argument("support direction (0,0)");
    MaxObjective obj;
    obj.parts.push_back(FracLinear{alpha, beta, Rational(0), Rational(0), Rational(0), Rational(1)});
    SearchResult run = optimize(obj, {}, config);
    if (!run.feasible) throw std::logic_error("unconstrained support search found no pair");
    // The certified lower bound keeps the support line below every pair, so
    // the clipped polygon still contains the hull of the pair set.
    hull = clip_halfplane(hull, LinearConstraint{alpha, beta, Rational(-run.lower_bound)});
    if (hull.empty()) throw std::logic_error("support lines emptied the hull polygon");
  }
  return hull;
}

}  // namespace exppairs
