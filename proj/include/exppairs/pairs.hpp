#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "exppairs/projective.hpp"
#include "exppairs/rational.hpp"

namespace exppairs {

// Process operators. BA is a single letter of the alphabet, not B followed
// by A; write "B A" to compose the two.
enum class Op { A, B, BA };

std::string op_name(Op op);
const ProjMatrix& op_matrix(Op op);

// An exponent pair (k,l) inside the triangle k >= 0, l >= 1/2, k+l <= 1,
// k <= 1/2. `eps` marks pairs that are epsilon-perturbed bounds; arithmetic
// always uses the limit values and the flag only propagates for display.
struct ExponentPair {
  ExponentPair(Rational k_val, Rational l_val, bool eps_flag = false);

  Rational k, l;
  bool eps = false;

  friend bool operator==(const ExponentPair& a, const ExponentPair& b) {
    return a.k == b.k && a.l == b.l;
  }
};

// A word over {A, B, BA} with an optional cyclic tail and an initial label.
// `letters` and `tail` are stored in application order: letters.front() is
// applied first. Printed form follows the usual convention of the leftmost
// token acting last, so printing reverses the stored order. The tail, when
// present, is iterated to its fixed point before the finite letters apply.
struct Word {
  std::vector<Op> letters;
  std::vector<Op> tail;
  std::string initial;

  friend bool operator==(const Word& a, const Word& b) {
    return a.letters == b.letters && a.tail == b.tail && a.initial == b.initial;
  }
};

struct CatalogEntry {
  std::string label;
  ExponentPair pair;
};

// The seven initial pairs; all but (0,1) carry the eps flag.
const std::vector<CatalogEntry>& catalog();
const ExponentPair& catalog_lookup(const std::string& label);

// Resolves a catalog label or a literal "(p/q,r/s)" pair.
ExponentPair resolve_initial(const std::string& label);

ExponentPair apply_operator(Op op, const ExponentPair& p);

// Product of letter matrices in application order (rightmost printed letter
// applied first), reduced.
ProjMatrix word_to_matrix(std::span<const Op> letters);

struct FixedPointResult {
  ExponentPair pair;
  Rational error_bound;
};

// Attracting fixed point of the cycle map inside the triangle, found by
// iterating the exact rational map from (1/6,2/3). The contraction factor
// sqrt(3)/2 per letter certifies error_bound <= tolerance.
FixedPointResult fixed_point(std::span<const Op> cycle, const Rational& tolerance);

// Exact evaluation for finite words; tolerance-certified approximation when
// a cyclic tail is present.
ExponentPair eval_word(const Word& w, const Rational& tolerance = make_rational(1, 1000000000));

// Word syntax: whitespace-separated tokens `A`, `B`, `BA` with optional `^n`;
// parenthesized groups with `^n` or `^inf`; a terminal initial-pair label
// (catalog name or literal pair). Example: "A (BA)^4 (A^2 BA A)^inf I".
Word parse_word(const std::string& text);
std::string to_string(const Word& w);

}  // namespace exppairs
