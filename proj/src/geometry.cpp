#include "exppairs/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace exppairs {

Generation generation(const ExponentPair& initial, int n, const std::string& initial_label,
                      int cap) {
  if (n < 0) throw std::invalid_argument("negative generation depth");
  if (n > cap) throw std::invalid_argument("generation depth exceeds cap");
  std::string label = initial_label.empty()
                          ? "(" + to_string(initial.k) + "," + to_string(initial.l) + ")"
                          : initial_label;
  Generation gen;
  gen.entries.push_back({Word{{}, {}, label}, initial});
  for (int d = 0; d < n; ++d) {
    std::vector<std::pair<Word, ExponentPair>> next;
    next.reserve(gen.entries.size() * 2);
    for (Op op : {Op::A, Op::BA})
      for (const auto& [word, pair] : gen.entries) {
        Word w = word;
        w.letters.push_back(op);  // applied last
        next.push_back({std::move(w), apply_operator(op, pair)});
      }
    gen.entries = std::move(next);
  }
  gen.depth = n;
  return gen;
}

Order precedes(const ExponentPair& p, const ExponentPair& q) {
  if (p.k < q.k && p.l > q.l) return Order::before;
  if (p.k > q.k && p.l < q.l) return Order::after;
  return Order::incomparable;
}

std::vector<Word> gray_order_words(int n) {
  if (n < 1) throw std::invalid_argument("gray order needs n >= 1");
  // Printed order (leftmost letter outermost); reflect and prefix.
  std::vector<std::vector<Op>> printed = {{Op::A}, {Op::BA}};
  for (int d = 2; d <= n; ++d) {
    std::vector<std::vector<Op>> next;
    next.reserve(printed.size() * 2);
    for (const auto& w : printed) {
      next.push_back(w);
      next.back().insert(next.back().begin(), Op::A);
    }
    for (auto it = printed.rbegin(); it != printed.rend(); ++it) {
      next.push_back(*it);
      next.back().insert(next.back().begin(), Op::BA);
    }
    printed = std::move(next);
  }
  std::vector<Word> out;
  out.reserve(printed.size());
  for (const auto& w : printed) {
    Word word;
    word.letters.assign(w.rbegin(), w.rend());
    word.initial = "(1/6,2/3)";
    out.push_back(std::move(word));
  }
  return out;
}

ConvexPolygon triangle_polygon() {
  return ConvexPolygon{{Point{Rational(0), make_rational(1, 2)},
                        Point{make_rational(1, 2), make_rational(1, 2)},
                        Point{Rational(0), Rational(1)}}};
}

Region triangle_region() { return Region{{triangle_polygon()}}; }

namespace {

ConvexPolygon rectangle(const Rational& k0, const Rational& k1, const Rational& l0,
                        const Rational& l1) {
  return ConvexPolygon{{Point{k0, l0}, Point{k1, l0}, Point{k1, l1}, Point{k0, l1}}};
}

}  // namespace

Region lemma1_cover() {
  Region r;
  r.parts.push_back(rectangle(Rational(0), make_rational(1, 6), make_rational(2, 3), Rational(1)));
  r.parts.push_back(
      rectangle(make_rational(1, 6), make_rational(1, 2), make_rational(1, 2), make_rational(2, 3)));
  r.parts.push_back(ConvexPolygon{{Point{make_rational(1, 6), make_rational(2, 3)}}});
  return r;
}

Rational cross(const Point& o, const Point& a, const Point& b) {
  return Rational((a.k - o.k) * (b.l - o.l) - (a.l - o.l) * (b.k - o.k));
}

ConvexPolygon convex_hull(std::vector<Point> points) {
  std::sort(points.begin(), points.end(), [](const Point& a, const Point& b) {
    return a.k < b.k || (a.k == b.k && a.l < b.l);
  });
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() <= 2) return ConvexPolygon{std::move(points)};

  std::vector<Point> hull(2 * points.size());
  std::size_t h = 0;
  for (const Point& p : points) {  // lower chain
    while (h >= 2 && sgn(cross(hull[h - 2], hull[h - 1], p)) <= 0) --h;
    hull[h++] = p;
  }
  const std::size_t base = h + 1;  // upper chain
  for (auto it = points.rbegin() + 1; it != points.rend(); ++it) {
    while (h >= base && sgn(cross(hull[h - 2], hull[h - 1], *it)) <= 0) --h;
    hull[h++] = *it;
  }
  hull.resize(h - 1);
  if (hull.size() == 2 && hull[0] == hull[1]) hull.resize(1);
  return ConvexPolygon{std::move(hull)};
}

ConvexPolygon bounding_box(const ConvexPolygon& poly) {
  if (poly.empty()) return poly;
  Rational k0 = poly.vertices[0].k, k1 = k0, l0 = poly.vertices[0].l, l1 = l0;
  for (const Point& p : poly.vertices) {
    k0 = std::min(k0, p.k);
    k1 = std::max(k1, p.k);
    l0 = std::min(l0, p.l);
    l1 = std::max(l1, p.l);
  }
  if (k0 == k1 && l0 == l1) return ConvexPolygon{{Point{k0, l0}}};
  if (k0 == k1) return ConvexPolygon{{Point{k0, l0}, Point{k0, l1}}};
  if (l0 == l1) return ConvexPolygon{{Point{k0, l0}, Point{k1, l0}}};
  return rectangle(k0, k1, l0, l1);
}

ConvexPolygon map_polygon(const ConvexPolygon& poly, const ProjMatrix& mat) {
  std::vector<Point> image;
  image.reserve(poly.vertices.size());
  for (const Point& v : poly.vertices) {
    auto [k, l] = mu_inv(mat_apply(mat, mu(v.k, v.l)));
    image.push_back(Point{k, l});
  }
  // Projective maps with positive denominator keep extreme points extreme;
  // re-hulling restores orientation and drops duplicates.
  return convex_hull(std::move(image));
}

Point apply_operator_point(Op op, const Point& p) {
  auto [k, l] = mu_inv(mat_apply(op_matrix(op), mu(p.k, p.l)));
  return Point{k, l};
}

bool polygon_contains(const ConvexPolygon& poly, const Point& p) {
  const auto& v = poly.vertices;
  if (v.empty()) return false;
  if (v.size() == 1) return v[0] == p;
  if (v.size() == 2) {
    if (sgn(cross(v[0], v[1], p)) != 0) return false;
    Rational dot((p.k - v[0].k) * (v[1].k - v[0].k) + (p.l - v[0].l) * (v[1].l - v[0].l));
    Rational len((v[1].k - v[0].k) * (v[1].k - v[0].k) + (v[1].l - v[0].l) * (v[1].l - v[0].l));
    return sgn(dot) >= 0 && dot <= len;
  }
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(cross(v[i], v[(i + 1) % v.size()], p)) < 0) return false;
  return true;
}

bool region_contains(const Region& region, const Point& p) {
  for (const auto& part : region.parts)
    if (polygon_contains(part, p)) return true;
  return false;
}

Region refine_cover(const Region& region, int rounds, const Point& generator) {
  Region current = region;
  for (int round = 0; round < rounds; ++round) {
    Region next;
    for (const auto& part : current.parts) {
      if (part.empty()) continue;
      for (Op op : {Op::A, Op::BA})
        next.parts.push_back(bounding_box(map_polygon(part, op_matrix(op))));
    }
    next.parts.push_back(ConvexPolygon{{generator}});
    // Drop parts fully absorbed by another part.
    Region pruned;
    for (std::size_t i = 0; i < next.parts.size(); ++i) {
      bool absorbed = false;
      for (std::size_t j = 0; j < next.parts.size() && !absorbed; ++j) {
        if (i == j) continue;
        bool inside = true;
        for (const Point& v : next.parts[i].vertices)
          if (!polygon_contains(next.parts[j], v)) {
            inside = false;
            break;
          }
        if (inside && (next.parts[j].vertices.size() > next.parts[i].vertices.size() || j < i))
          absorbed = true;
      }
      if (!absorbed) pruned.parts.push_back(next.parts[i]);
    }
    current = std::move(pruned);
  }
  return current;
}

namespace {

Rational corner_chord_slope(int m) {
  ExponentPair p(make_rational(1, 6), make_rational(2, 3), false);
  for (int i = 0; i < m; ++i) p = apply_operator(Op::A, p);
  p = apply_operator(Op::BA, p);
  p = apply_operator(Op::A, p);
  Rational dk(p.k - make_rational(1, 6));
  Rational dl(p.l - make_rational(2, 3));
  return Rational(dl / dk);
}

}  // namespace

std::pair<double, double> tangent_direction(int n) {
  if (n < 1) throw std::invalid_argument("tangent direction needs n >= 1");
  // The chord slope approaches the tangent slope only like 1/m (the drift
  // (1-l)/k of A^m(1/6,2/3) toward (0,1) is exactly m+2), so the slope
  // sequence is extrapolated to its limit: exact evaluations at n*2^j and a
  // rational Lagrange step at 1/m = 0 leave an O(n^-6) error.
  constexpr int kNodes = 6;
  Rational h[kNodes], s[kNodes];
  for (int j = 0; j < kNodes; ++j) {
    int m = n << j;
    h[j] = make_rational(1, m);
    s[j] = corner_chord_slope(m);
  }
  Rational slope(0);
  for (int j = 0; j < kNodes; ++j) {
    Rational w(1);
    for (int i = 0; i < kNodes; ++i) {
      if (i == j) continue;
      w *= Rational(h[i] / Rational(h[i] - h[j]));
    }
    slope += Rational(w * s[j]);
  }
  // dk < 0 and dl > 0 along the sequence.
  double t = to_double(slope);
  double norm = std::sqrt(1.0 + t * t);
  return {-1.0 / norm, -t / norm};
}

const std::vector<std::pair<Rational, Rational>>& default_hull_directions() {
  static const std::vector<std::pair<Rational, Rational>> dirs = {
      {Rational(1), Rational(0)},    // k from the left
      {Rational(0), Rational(1)},    // l from below
      {Rational(1), Rational(1)},    // the corner at (1/6,2/3)
      {Rational(141), Rational(64)},  // edge from (0,1) to H05
      {Rational(64), Rational(141)},  // edge from H05 to (1/2,1/2)
  };
  return dirs;
}

}  // namespace exppairs
