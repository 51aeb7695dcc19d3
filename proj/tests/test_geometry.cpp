#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "exppairs/geometry.hpp"

using namespace exppairs;

namespace {

const ExponentPair kCorner(make_rational(1, 6), make_rational(2, 3));

std::vector<ExponentPair> sorted_by_order(const Generation& gen) {
  std::vector<ExponentPair> pairs;
  for (const auto& [w, p] : gen.entries) pairs.push_back(p);
  std::sort(pairs.begin(), pairs.end(),
            [](const ExponentPair& a, const ExponentPair& b) { return a.k < b.k; });
  return pairs;
}

}  // namespace

TEST_CASE("generation sizes and values") {
  Generation g1 = generation(ExponentPair(Rational(0), Rational(1)), 1);
  REQUIRE(g1.entries.size() == 2);
  CHECK(g1.entries[0].second == ExponentPair(Rational(0), Rational(1)));
  CHECK(g1.entries[1].second == ExponentPair(make_rational(1, 2), make_rational(1, 2)));

  Generation c1 = generation(kCorner, 1);
  REQUIRE(c1.entries.size() == 2);
  CHECK(c1.entries[0].second == ExponentPair(make_rational(1, 14), make_rational(11, 14)));
  CHECK(c1.entries[1].second == ExponentPair(make_rational(2, 7), make_rational(4, 7)));

  Generation c0 = generation(kCorner, 0);
  REQUIRE(c0.entries.size() == 1);
  CHECK(c0.entries[0].second == kCorner);

  CHECK_THROWS_AS(generation(kCorner, 25), std::invalid_argument);
  CHECK(generation(kCorner, 21, "", 21).entries.size() == (1u << 21));
}

TEST_CASE("the order relation") {
  CHECK(precedes(ExponentPair(make_rational(1, 14), make_rational(11, 14)), kCorner) ==
        Order::before);
  CHECK(precedes(kCorner, ExponentPair(make_rational(1, 14), make_rational(11, 14))) ==
        Order::after);

  ExponentPair p = eval_word(parse_word("A BA A^4 H05"));
  const ExponentPair& h05 = catalog_lookup("H05");
  CHECK(precedes(p, h05) == Order::incomparable);
  CHECK(precedes(h05, p) == Order::incomparable);
  CHECK(precedes(h05, h05) == Order::incomparable);
}

TEST_CASE("gray order words") {
  auto g1 = gray_order_words(1);
  REQUIRE(g1.size() == 2);
  CHECK(to_string(g1[0]) == "A (1/6,2/3)");
  CHECK(to_string(g1[1]) == "BA (1/6,2/3)");

  auto g2 = gray_order_words(2);
  std::vector<std::string> got2;
  for (const auto& w : g2) got2.push_back(to_string(w));
  CHECK(got2 == std::vector<std::string>{"A^2 (1/6,2/3)", "A BA (1/6,2/3)",
                                         "(BA)^2 (1/6,2/3)", "BA A (1/6,2/3)"});

  auto g3 = gray_order_words(3);
  std::vector<std::string> got3;
  for (const auto& w : g3) got3.push_back(to_string(w));
  CHECK(got3 == std::vector<std::string>{
                    "A^3 (1/6,2/3)", "A^2 BA (1/6,2/3)", "A (BA)^2 (1/6,2/3)",
                    "A BA A (1/6,2/3)", "(BA)^2 A (1/6,2/3)", "(BA)^3 (1/6,2/3)",
                    "BA A BA (1/6,2/3)", "BA A^2 (1/6,2/3)"});
}

TEST_CASE("gray order against the bit-twiddling construction") {
  for (int n = 1; n <= 8; ++n) {
    auto words = gray_order_words(n);
    REQUIRE(words.size() == (1u << n));
    for (std::size_t i = 0; i < words.size(); ++i) {
      unsigned code = static_cast<unsigned>(i) ^ (static_cast<unsigned>(i) >> 1);
      // bit 0 of the code drives the leftmost printed letter, i.e. the last
      // applied one
      const auto& letters = words[i].letters;
      for (int b = 0; b < n; ++b) {
        Op expected = ((code >> (n - 1 - b)) & 1) ? Op::BA : Op::A;
        CHECK(letters[letters.size() - 1 - b] == expected);
      }
    }
  }
}

TEST_CASE("the order is total on generations and equals gray order") {
  for (int n = 1; n <= 8; ++n) {
    Generation gen = generation(kCorner, n, "(1/6,2/3)");
    auto sorted = sorted_by_order(gen);
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
      CHECK(precedes(sorted[i], sorted[i + 1]) == Order::before);

    auto gray = gray_order_words(n);
    for (std::size_t i = 0; i < sorted.size(); ++i)
      CHECK(eval_word(gray[i]) == sorted[i]);
  }
}

TEST_CASE("A preserves the order and BA reverses it") {
  Generation gen = generation(kCorner, 5);
  const auto& e = gen.entries;
  for (std::size_t i = 0; i < e.size(); i += 3)
    for (std::size_t j = i + 1; j < e.size(); j += 5) {
      if (precedes(e[i].second, e[j].second) != Order::before) continue;
      CHECK(precedes(apply_operator(Op::A, e[i].second), apply_operator(Op::A, e[j].second)) ==
            Order::before);
      CHECK(precedes(apply_operator(Op::BA, e[i].second),
                     apply_operator(Op::BA, e[j].second)) == Order::after);
    }
}

TEST_CASE("A images precede the corner and BA images follow it") {
  Generation gen = generation(kCorner, 6);
  for (const auto& [w, p] : gen.entries) {
    CHECK(precedes(apply_operator(Op::A, p), kCorner) == Order::before);
    CHECK(precedes(kCorner, apply_operator(Op::BA, p)) == Order::before);
  }
}

TEST_CASE("generations of (0,1) decompose through the corner") {
  std::set<std::pair<std::string, std::string>> corner_values;
  for (int m = 0; m <= 4; ++m)
    for (const auto& [w, p] : generation(kCorner, m).entries)
      corner_values.insert({to_string(p.k), to_string(p.l)});

  ExponentPair i0(Rational(0), Rational(1));
  ExponentPair corner_pt(make_rational(1, 2), make_rational(1, 2));
  for (const auto& [w, p] : generation(i0, 6).entries) {
    if (p == i0 || p == corner_pt) continue;
    CHECK(corner_values.count({to_string(p.k), to_string(p.l)}) == 1);
  }
}

TEST_CASE("triangle region") {
  ConvexPolygon t = triangle_polygon();
  REQUIRE(t.vertices.size() == 3);
  Region region = triangle_region();
  for (const auto& e : catalog()) CHECK(region_contains(region, Point{e.pair.k, e.pair.l}));
  for (const auto& [w, p] : generation(kCorner, 6).entries)
    CHECK(region_contains(region, Point{p.k, p.l}));
}

TEST_CASE("lemma 1 cover holds to depth 8") {
  Region cover = lemma1_cover();
  ConvexPolygon p_left = cover.parts[0], p_right = cover.parts[1];
  for (int n = 1; n <= 8; ++n)
    for (const auto& [w, p] : generation(kCorner, n).entries) {
      CHECK(region_contains(cover, Point{p.k, p.l}));
      // last applied operator decides the rectangle
      bool left = polygon_contains(p_left, Point{p.k, p.l});
      bool right = polygon_contains(p_right, Point{p.k, p.l});
      if (w.letters.back() == Op::A)
        CHECK(left);
      else
        CHECK(right);
    }

  // A images of pairs land strictly inside the open left rectangle
  for (const auto& [w, p] : generation(kCorner, 5).entries) {
    ExponentPair img = apply_operator(Op::A, p);
    CHECK(img.k > 0);
    CHECK(img.k < make_rational(1, 6));
    CHECK(img.l > make_rational(2, 3));
    CHECK(img.l < 1);
  }
}

TEST_CASE("refine_cover counts and coverage") {
  Region base = lemma1_cover();
  Region zero = refine_cover(base, 0);
  CHECK(zero.parts.size() == base.parts.size());

  Region one = refine_cover(base, 1);
  int rectangles = 0;
  for (const auto& part : one.parts)
    if (part.vertices.size() >= 3) ++rectangles;
  CHECK(rectangles == 4);

  Region three = refine_cover(base, 3);
  for (int n = 1; n <= 8; ++n)
    for (const auto& [w, p] : generation(kCorner, n).entries) {
      CHECK(region_contains(one, Point{p.k, p.l}));
      CHECK(region_contains(three, Point{p.k, p.l}));
    }
  CHECK(region_contains(three, Point{kCorner.k, kCorner.l}));
}

TEST_CASE("no generated point is isolated at the corner") {
  Rational eps2 = make_rational(1, 1000000000000);  // (10^-6)^2
  ExponentPair below(make_rational(1, 6), make_rational(2, 3));
  ExponentPair above = below;
  bool found_below = false, found_above = false;
  ExponentPair x = kCorner;
  for (int n = 1; n <= 60; ++n) {
    x = apply_operator(Op::A, x);  // x = A^n corner
    ExponentPair p1 = apply_operator(Op::A, apply_operator(Op::BA, x));
    ExponentPair p2 = apply_operator(Op::BA, apply_operator(Op::BA, x));
    auto dist2 = [&](const ExponentPair& p) {
      return Rational(Rational(p.k - kCorner.k) * Rational(p.k - kCorner.k) +
                      Rational(p.l - kCorner.l) * Rational(p.l - kCorner.l));
    };
    if (precedes(p1, kCorner) == Order::before && dist2(p1) < eps2) found_below = true;
    if (precedes(kCorner, p2) == Order::before && dist2(p2) < eps2) found_above = true;
  }
  CHECK(found_below);
  CHECK(found_above);
}

TEST_CASE("tangent directions at the corner") {
  auto [dx, dy] = tangent_direction(50);
  const double s5 = std::sqrt(5.0);
  CHECK(std::abs(dx + 2.0 / s5) < 1e-6);
  CHECK(std::abs(dy - 1.0 / s5) < 1e-6);

  auto [x1, y1] = tangent_direction(1);
  CHECK(x1 < 0);
  CHECK(y1 > 0);

  // right-hand tangent via BA BA A^n: the chord slope drifts like 1/n, so
  // one Richardson step gives the limit -2 to O(1/n^2)
  auto right_slope = [](int m) {
    ExponentPair x = kCorner;
    for (int i = 0; i < m; ++i) x = apply_operator(Op::A, x);
    x = apply_operator(Op::BA, apply_operator(Op::BA, x));
    return Rational(Rational(x.l - kCorner.l) / Rational(x.k - kCorner.k));
  };
  Rational extrapolated(2 * right_slope(2000) - right_slope(1000));
  CHECK(std::abs(to_double(extrapolated) + 2.0) < 1e-4);
}

TEST_CASE("polygon helpers on degenerate inputs") {
  ConvexPolygon seg{{Point{Rational(0), Rational(1)}, Point{make_rational(1, 2), make_rational(1, 2)}}};
  CHECK(polygon_contains(seg, Point{make_rational(1, 4), make_rational(3, 4)}));
  CHECK_FALSE(polygon_contains(seg, Point{make_rational(1, 4), make_rational(1, 2)}));
  ConvexPolygon single{{Point{Rational(0), Rational(1)}}};
  CHECK(polygon_contains(single, Point{Rational(0), Rational(1)}));
  CHECK_FALSE(polygon_contains(single, Point{Rational(0), make_rational(1, 2)}));

  ConvexPolygon hull = convex_hull({Point{Rational(0), Rational(0)}, Point{Rational(1), Rational(1)},
                                    Point{make_rational(1, 2), make_rational(1, 2)}});
  CHECK(hull.vertices.size() == 2);  // collinear input collapses to a segment
}

TEST_CASE("hull_polygon support construction") {
  CHECK(hull_polygon({}).vertices == triangle_polygon().vertices);

  // inf of l over P(0,1) is exactly 1/2, so the triangle is unchanged
  ConvexPolygon h1 = hull_polygon({{Rational(0), Rational(1)}}, {"I"});
  CHECK(h1.vertices == triangle_polygon().vertices);

  // inf of k+l over P(0,1) is bounded above by 5/6 (witness the corner pair)
  // and the support line keeps every generated pair inside
  ConvexPolygon h2 = hull_polygon({{Rational(1), Rational(1)}}, {"I"});
  Rational lo(2);
  for (const auto& v : h2.vertices) lo = std::min(lo, Rational(v.k + v.l));
  CHECK(lo <= make_rational(5, 6));
  CHECK(polygon_contains(h2, Point{kCorner.k, kCorner.l}));
  CHECK_FALSE(polygon_contains(h2, Point{Rational(0), make_rational(1, 2)}));
  for (const auto& [w, p] : generation(ExponentPair(Rational(0), Rational(1)), 7).entries)
    CHECK(polygon_contains(h2, Point{p.k, p.l}));
}
