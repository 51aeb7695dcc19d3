#pragma once

#include <optional>
#include <string>
#include <vector>

#include "exppairs/lp.hpp"

namespace exppairs {

enum class BranchOrder { a_first, ba_first };
enum class SearchMode { rigorous, greedy };

struct SearchConfig {
  Rational tolerance = make_rational(1, 1000000000);
  int max_depth = 1000;
  Region root_region = triangle_region();
  BranchOrder branch_order = BranchOrder::a_first;
  SearchMode mode = SearchMode::rigorous;
  std::vector<std::string> initial_pairs;  // empty means the whole catalog
  bool step3_cuts = true;                  // the theta_i < r pruning constraints
  int hull_depth = 0;  // extra generations refining the inner hull of conv P
};

struct SearchStats {
  std::vector<long> calls_per_depth;
  bool depth_capped = false;

  long total_calls() const;
};

struct SearchResult {
  bool feasible = false;
  Rational value;       // best value found; an upper bound on the infimum
  Rational lower_bound;
  std::optional<ExponentPair> witness_pair;
  std::optional<Word> witness_word;  // absent for hull-interior witnesses
  bool attained = false;             // lower_bound == value
  SearchMode mode = SearchMode::rigorous;
  SearchStats stats;
};

// Branch-and-bound over the words generated from the initial pairs: at every
// node the images of the initial pairs are exact candidates, the image of the
// root region bounds what the subtree can reach, and subtrees survive only
// while a point of their region satisfies the constraints plus the strict
// cuts theta_i < r.
SearchResult optimize(const MaxObjective& obj, const std::vector<LinearConstraint>& constraints,
                      const SearchConfig& config = {});

// Single-path variant: drops branches whose region violates the constraints
// and otherwise follows the smaller region lower bound.
SearchResult greedy_optimize(const MaxObjective& obj,
                             const std::vector<LinearConstraint>& constraints,
                             const SearchConfig& config = {});

// Infimum over an inner approximation of conv P: the convex hull of the
// selected initial pairs, the corner BA(0,1), and optionally their deeper
// generations (config.hull_depth). Points of that hull are certified convex
// combinations of known pairs, so the result is a valid upper bound that
// tightens toward the conv P infimum as the hull grows. Combines the
// pair-set search with scans of constraint lines and of the hull boundary
// (vertices and pairwise part-balance points of edges).
SearchResult optimize_hull(const MaxObjective& obj,
                           const std::vector<LinearConstraint>& constraints,
                           const SearchConfig& config = {});

// The inner hull polygon described above.
ConvexPolygon inner_hull(const std::vector<std::string>& initials = {}, int hull_depth = 0);

}  // namespace exppairs
