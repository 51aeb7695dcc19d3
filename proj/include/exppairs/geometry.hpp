#pragma once

#include <utility>
#include <vector>

#include "exppairs/pairs.hpp"
#include "exppairs/rational.hpp"

namespace exppairs {

// A plain geometric point; unlike ExponentPair it carries no triangle
// invariants, so bounding boxes and clipped vertices can live here.
struct Point {
  Rational k, l;

  friend bool operator==(const Point& a, const Point& b) {
    return a.k == b.k && a.l == b.l;
  }
};

// Vertices in counter-clockwise order. Degenerate polygons are first-class:
// two vertices make a segment, one a point, none the empty set.
struct ConvexPolygon {
  std::vector<Point> vertices;

  bool empty() const { return vertices.empty(); }
};

struct Region {
  std::vector<ConvexPolygon> parts;
};

enum class Order { before, after, incomparable };

struct Generation {
  int depth = 0;
  std::vector<std::pair<Word, ExponentPair>> entries;
};

// All 2^n words of length n over {A, BA} applied to `initial`, evaluated
// exactly. `initial_label` names the start pair in the attached words.
Generation generation(const ExponentPair& initial, int n,
                      const std::string& initial_label = "", int cap = 20);

// (k,l) < (kappa,lambda) iff k < kappa and l > lambda.
Order precedes(const ExponentPair& p, const ExponentPair& q);

// Binary-reflected Gray order over the alphabet {A, BA}, built by the
// reflect-and-prefix construction.
std::vector<Word> gray_order_words(int n);

ConvexPolygon triangle_polygon();  // vertices (0,1/2), (1/2,1/2), (0,1)
Region triangle_region();

// Closures of the two rectangles (0,1/6)x(2/3,1) and (1/6,1/2)x(1/2,2/3)
// plus the corner point (1/6,2/3).
Region lemma1_cover();

// One round replaces every part by the bounding boxes of its images under
// A and BA and re-adds the generating point; parts absorbed by another part
// are dropped. The refinement rule (bounding boxes of images) is ours; the
// construction only promises that deeper generations stay covered.
Region refine_cover(const Region& region, int rounds,
                    const Point& generator = Point{make_rational(1, 6), make_rational(2, 3)});

bool region_contains(const Region& region, const Point& p);
bool polygon_contains(const ConvexPolygon& poly, const Point& p);

// Normalized direction of A*BA*A^n(1/6,2/3) - (1/6,2/3); converges to
// (-2/sqrt 5, 1/sqrt 5).
std::pair<double, double> tangent_direction(int n);

// Polygon helpers shared with the LP layer.
Rational cross(const Point& o, const Point& a, const Point& b);
ConvexPolygon convex_hull(std::vector<Point> points);
ConvexPolygon bounding_box(const ConvexPolygon& poly);
ConvexPolygon map_polygon(const ConvexPolygon& poly, const ProjMatrix& mat);
Point apply_operator_point(Op op, const Point& p);

// Support polygon for the pair set: the triangle clipped by support lines
// alpha*k + beta*l >= level. Declared here, computed by the optimizer.
ConvexPolygon hull_polygon(const std::vector<std::pair<Rational, Rational>>& directions,
                           const std::vector<std::string>& initials = {},
                           const Rational& tolerance = make_rational(1, 1000000000000));
const std::vector<std::pair<Rational, Rational>>& default_hull_directions();

}  // namespace exppairs
