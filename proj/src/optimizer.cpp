#include "exppairs/optimizer.hpp"

#include <algorithm>
#include <stdexcept>

namespace exppairs {

long SearchStats::total_calls() const {
  long total = 0;
  for (long n : calls_per_depth) total += n;
  return total;
}

namespace {

struct InitialSelection {
  std::vector<CatalogEntry> entries;
  std::vector<ProjPoint> images;  // mu of each pair, reused at every node
};

InitialSelection select_initials(const SearchConfig& config) {
  InitialSelection sel;
  if (config.initial_pairs.empty()) {
    sel.entries = catalog();
  } else {
    for (const auto& label : config.initial_pairs)
      sel.entries.push_back({label, catalog_lookup(label)});
  }
  for (const auto& e : sel.entries) sel.images.push_back(mu(e.pair.k, e.pair.l));
  return sel;
}

Region map_region(const Region& region, const ProjMatrix& mat) {
  Region out;
  out.parts.reserve(region.parts.size());
  for (const auto& part : region.parts)
    if (!part.empty()) out.parts.push_back(map_polygon(part, mat));
  return out;
}

Region clip_region(const Region& region, std::span<const LinearConstraint> constraints) {
  Region out;
  for (const auto& part : region.parts) {
    ConvexPolygon clipped = part;
    for (const auto& c : constraints) {
      clipped = clip_halfplane(clipped, c);
      if (clipped.empty()) break;
    }
    if (!clipped.empty()) out.parts.push_back(std::move(clipped));
  }
  return out;
}

struct SearchState {
  const MaxObjective* obj = nullptr;
  const std::vector<LinearConstraint>* constraints = nullptr;
  const SearchConfig* config = nullptr;
  InitialSelection initials;

  std::optional<Rational> best;  // current minimal value r
  std::optional<ExponentPair> best_pair;
  std::optional<Word> best_word;
  std::optional<Rational> frontier_min;  // min lower bound over terminated nodes
  SearchStats stats;
  std::vector<Op> path;  // descend order == printed order

  void note_frontier(const Rational& bound) {
    if (!frontier_min || bound < *frontier_min) frontier_min = bound;
  }

  void harvest_candidates(const ProjMatrix& mat) {
    for (std::size_t i = 0; i < initials.entries.size(); ++i) {
      auto [k, l] = mu_inv(mat_apply(mat, initials.images[i]));
      Point q{k, l};
      bool ok = true;
      for (const auto& c : *constraints)
        if (!check_constraint(c, q)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      auto value = try_eval_objective(*obj, q);
      if (!value) continue;
      if (!best || *value < *best) {
        best = *value;
        best_pair = ExponentPair(q.k, q.l, initials.entries[i].pair.eps);
        Word w;
        w.letters.assign(path.rbegin(), path.rend());
        w.initial = initials.entries[i].label;
        best_word = std::move(w);
      }
    }
  }

  std::vector<LinearConstraint> constraints_with_cuts() const {
    std::vector<LinearConstraint> lc = *constraints;
    if (config->step3_cuts && best)
      for (const auto& part : obj->parts) lc.push_back(strictify(part, *best));
    return lc;
  }
};

void search(SearchState& state, const ProjMatrix& mat, int depth) {
  if (static_cast<int>(state.stats.calls_per_depth.size()) <= depth)
    state.stats.calls_per_depth.resize(depth + 1, 0);
  ++state.stats.calls_per_depth[depth];

  Region node = map_region(state.config->root_region, mat);
  Region clipped = clip_region(node, *state.constraints);
  if (clipped.parts.empty()) return;  // no feasible point can live here

  state.harvest_candidates(mat);

  auto bounds = try_theta_bounds(*state.obj, clipped);
  if (!bounds) return;  // objective undefined on a degenerate remnant
  if (state.best && *state.best <= bounds->lower) {
    state.note_frontier(bounds->lower);
    return;
  }
  if (sgn(state.config->tolerance) > 0 && bounds->upper &&
      Rational(*bounds->upper - bounds->lower) < state.config->tolerance) {
    state.note_frontier(bounds->lower);
    return;
  }
  if (depth >= state.config->max_depth) {
    state.note_frontier(bounds->lower);
    state.stats.depth_capped = true;
    return;
  }

  const Op order[2] = {state.config->branch_order == BranchOrder::a_first ? Op::A : Op::BA,
                       state.config->branch_order == BranchOrder::a_first ? Op::BA : Op::A};
  for (Op op : order) {
    ProjMatrix child = mat_mul(mat, op_matrix(op));
    std::vector<LinearConstraint> lc = state.constraints_with_cuts();
    Region child_region = map_region(state.config->root_region, child);
    if (feasible(child_region, lc)) {
      state.path.push_back(op);
      search(state, child, depth + 1);
      state.path.pop_back();
    } else if (state.best) {
      // Every feasible point of the child has some theta_i >= r.
      state.note_frontier(*state.best);
    }
  }
}

SearchResult finish(SearchState& state, SearchMode mode) {
  SearchResult result;
  result.mode = mode;
  result.stats = std::move(state.stats);
  if (!state.best) {
    result.feasible = false;
    return result;
  }
  result.feasible = true;
  result.value = *state.best;
  result.witness_pair = state.best_pair;
  result.witness_word = state.best_word;
  result.lower_bound =
      state.frontier_min ? std::min(*state.best, *state.frontier_min) : *state.best;
  result.attained = result.lower_bound == result.value;
  return result;
}

void validate_objective(const MaxObjective& obj, const Region& clipped_root) {
  if (obj.parts.empty()) throw std::invalid_argument("objective with no parts");
  // Throws if a denominator goes negative, or a part is undefined everywhere.
  if (!clipped_root.parts.empty()) theta_bounds(obj, clipped_root);
}

}  // namespace

SearchResult optimize(const MaxObjective& obj, const std::vector<LinearConstraint>& constraints,
                      const SearchConfig& config) {
  if (sgn(config.tolerance) < 0) throw std::invalid_argument("negative tolerance");
  if (config.max_depth < 1) throw std::invalid_argument("max_depth must be >= 1");

  SearchState state;
  state.obj = &obj;
  state.constraints = &constraints;
  state.config = &config;
  state.initials = select_initials(config);
  validate_objective(obj, clip_region(config.root_region, constraints));

  search(state, identity_matrix(), 0);
  return finish(state, SearchMode::rigorous);
}

SearchResult greedy_optimize(const MaxObjective& obj,
                             const std::vector<LinearConstraint>& constraints,
                             const SearchConfig& config) {
  if (config.max_depth < 1) throw std::invalid_argument("max_depth must be >= 1");

  SearchState state;
  state.obj = &obj;
  state.constraints = &constraints;
  state.config = &config;
  state.initials = select_initials(config);
  validate_objective(obj, clip_region(config.root_region, constraints));

  ProjMatrix mat = identity_matrix();
  for (int depth = 0; depth <= config.max_depth; ++depth) {
    if (static_cast<int>(state.stats.calls_per_depth.size()) <= depth)
      state.stats.calls_per_depth.resize(depth + 1, 0);
    ++state.stats.calls_per_depth[depth];

    Region clipped = clip_region(map_region(config.root_region, mat), constraints);
    if (clipped.parts.empty()) break;
    state.harvest_candidates(mat);

    auto bounds = try_theta_bounds(obj, clipped);
    if (!bounds) break;
    if (state.best && *state.best <= bounds->lower) {
      state.note_frontier(bounds->lower);
      break;
    }
    if (sgn(config.tolerance) > 0 && bounds->upper &&
        Rational(*bounds->upper - bounds->lower) < config.tolerance) {
      state.note_frontier(bounds->lower);
      break;
    }
    if (depth == config.max_depth) {
      state.note_frontier(bounds->lower);
      state.stats.depth_capped = true;
      break;
    }

    std::vector<LinearConstraint> lc = state.constraints_with_cuts();
    struct Choice {
      Op op;
      ProjMatrix mat;
      Rational lower;
    };
    std::optional<Choice> chosen;
    const Op order[2] = {config.branch_order == BranchOrder::a_first ? Op::A : Op::BA,
                         config.branch_order == BranchOrder::a_first ? Op::BA : Op::A};
    for (Op op : order) {
      ProjMatrix child = mat_mul(mat, op_matrix(op));
      Region child_region = map_region(config.root_region, child);
      if (!feasible(child_region, lc)) continue;
      Region child_clipped = clip_region(child_region, constraints);
      auto child_bounds = try_theta_bounds(obj, child_clipped);
      if (!child_bounds) continue;
      if (!chosen || child_bounds->lower < chosen->lower)
        chosen = Choice{op, child, child_bounds->lower};
    }
    if (!chosen) break;
    state.path.push_back(chosen->op);
    mat = chosen->mat;
  }
  return finish(state, SearchMode::greedy);
}

namespace {

// Minimum of the objective over a polygon boundary: every vertex, plus the
// points on each edge where two parts balance. Exact when the balance
// equation along the edge is linear or has rational roots; otherwise the
// root is bracketed by bisection and both bracket ends are scanned.
struct BoundaryScan {
  std::optional<Rational> value;
  std::optional<Point> where;
  bool approximate = false;

  void offer(const Rational& v, const Point& p) {
    if (!value || v < *value) {
      value = v;
      where = p;
    }
  }
};

Point lerp(const Point& a, const Point& b, const Rational& t) {
  return Point{Rational(a.k + t * (b.k - a.k)), Rational(a.l + t * (b.l - a.l))};
}

void scan_edge(const MaxObjective& obj, const Point& a, const Point& b, const Rational& tol,
               BoundaryScan& scan) {
  for (std::size_t i = 0; i < obj.parts.size(); ++i)
    for (std::size_t j = i + 1; j < obj.parts.size(); ++j) {
      const FracLinear& f = obj.parts[i];
      const FracLinear& g = obj.parts[j];
      // h(t) = Nf(p(t))*Dg(p(t)) - Ng(p(t))*Df(p(t)), quadratic in t.
      auto nf0 = f.num_at(a), nf1 = Rational(f.num_at(b) - f.num_at(a));
      auto df0 = f.den_at(a), df1 = Rational(f.den_at(b) - f.den_at(a));
      auto ng0 = g.num_at(a), ng1 = Rational(g.num_at(b) - g.num_at(a));
      auto dg0 = g.den_at(a), dg1 = Rational(g.den_at(b) - g.den_at(a));
      Rational c2(nf1 * dg1 - ng1 * df1);
      Rational c1(nf0 * dg1 + nf1 * dg0 - ng0 * df1 - ng1 * df0);
      Rational c0(nf0 * dg0 - ng0 * df0);

      auto offer_at = [&](const Rational& t) {
        if (sgn(t) < 0 || t > 1) return;
        Point p = lerp(a, b, t);
        if (auto v = try_eval_objective(obj, p)) scan.offer(*v, p);
      };

      if (sgn(c2) == 0) {
        if (sgn(c1) != 0) offer_at(Rational(-c0 / c1));
        continue;
      }
      Rational disc(c1 * c1 - 4 * c2 * c0);
      if (sgn(disc) < 0) continue;
      // Rational square root exists iff numerator and denominator are squares.
      if (mpz_perfect_square_p(disc.get_num_mpz_t()) &&
          mpz_perfect_square_p(disc.get_den_mpz_t())) {
        Integer num_root, den_root;
        mpz_sqrt(num_root.get_mpz_t(), disc.get_num_mpz_t());
        mpz_sqrt(den_root.get_mpz_t(), disc.get_den_mpz_t());
        Rational root = make_rational(num_root, den_root);
        offer_at(Rational((-c1 + root) / (2 * c2)));
        offer_at(Rational((-c1 - root) / (2 * c2)));
      } else {
        // Bracket each sign change of h on [0,1] and bisect.
        auto h = [&](const Rational& t) { return Rational(c0 + t * (c1 + t * c2)); };
        std::vector<std::pair<Rational, Rational>> brackets;
        Rational mid(-c1 / (2 * c2));  // extremum of the quadratic
        std::vector<Rational> knots = {Rational(0)};
        if (sgn(mid) > 0 && mid < 1) knots.push_back(mid);
        knots.push_back(Rational(1));
        for (std::size_t n = 0; n + 1 < knots.size(); ++n)
          if (sgn(h(knots[n])) * sgn(h(knots[n + 1])) < 0)
            brackets.push_back({knots[n], knots[n + 1]});
        for (auto [lo, hi] : brackets) {
          for (int it = 0; it < 128 && Rational(hi - lo) >= tol; ++it) {
            Rational m((lo + hi) / 2);
            if (sgn(h(m)) == sgn(h(lo)))
              lo = m;
            else
              hi = m;
          }
          offer_at(lo);
          offer_at(hi);
          scan.approximate = true;
        }
      }
    }
}

}  // namespace

ConvexPolygon inner_hull(const std::vector<std::string>& initials, int hull_depth) {
  std::vector<CatalogEntry> entries;
  if (initials.empty()) {
    entries = catalog();
  } else {
    for (const auto& label : initials) entries.push_back({label, catalog_lookup(label)});
  }
  std::vector<Point> points;
  for (const auto& e : entries) {
    points.push_back(Point{e.pair.k, e.pair.l});
    if (e.label == "I")  // BA(0,1): the right corner of the pair set
      points.push_back(Point{make_rational(1, 2), make_rational(1, 2)});
    for (int d = 1; d <= hull_depth; ++d)
      for (const auto& [word, pair] : generation(e.pair, d, e.label).entries)
        points.push_back(Point{pair.k, pair.l});
  }
  return convex_hull(std::move(points));
}

SearchResult optimize_hull(const MaxObjective& obj,
                           const std::vector<LinearConstraint>& constraints,
                           const SearchConfig& config) {
  SearchResult base = optimize(obj, constraints, config);

  Rational hull_tol(config.tolerance / 1000);
  if (sgn(hull_tol) <= 0) hull_tol = make_rational(1, 1000000000000);
  ConvexPolygon hull = inner_hull(config.initial_pairs, config.hull_depth);

  BoundaryScan scan;
  if (obj.parts.size() == 1) {
    // Single part: the infimum over the hull beyond the pair set can only
    // improve along the constraint lines.
    for (const auto& c : constraints) {
      ConvexPolygon section = hull;
      for (const auto& other : constraints) section = clip_halfplane(section, other);
      section = clip_halfplane(section, LinearConstraint{c.alpha, c.beta, c.gamma});
      section = clip_halfplane(
          section, LinearConstraint{Rational(-c.alpha), Rational(-c.beta), Rational(-c.gamma)});
      for (const Point& v : section.vertices)
        if (auto val = try_eval_objective(obj, v)) scan.offer(*val, v);
    }
  } else {
    ConvexPolygon section = hull;
    for (const auto& c : constraints) section = clip_halfplane(section, c);
    const auto& v = section.vertices;
    for (const Point& p : v)
      if (auto val = try_eval_objective(obj, p)) scan.offer(*val, p);
    if (v.size() >= 2) {
      const std::size_t edges = (v.size() == 2) ? 1 : v.size();
      for (std::size_t i = 0; i < edges; ++i)
        scan_edge(obj, v[i], v[(i + 1) % v.size()], hull_tol, scan);
    }
  }
  // Hull witnesses must still satisfy strict constraints exactly.
  if (scan.where) {
    for (const auto& c : constraints)
      if (!check_constraint(c, *scan.where)) {
        scan.value.reset();
        scan.where.reset();
        break;
      }
  }

  if (scan.value && (!base.feasible || *scan.value < base.value)) {
    SearchResult result;
    result.feasible = true;
    result.value = *scan.value;
    result.lower_bound = *scan.value;  // up to the hull approximation quality
    result.attained = !scan.approximate;
    result.witness_pair = ExponentPair(scan.where->k, scan.where->l, false);
    result.witness_word = std::nullopt;
    result.mode = SearchMode::rigorous;
    result.stats = std::move(base.stats);
    return result;
  }
  return base;
}

}  // namespace exppairs
