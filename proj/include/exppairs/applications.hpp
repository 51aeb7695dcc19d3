#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "exppairs/optimizer.hpp"

namespace exppairs {

// Error exponent for the two-dimensional asymmetric divisor problem
// Delta(a,b;x), split into the two cases of the underlying estimate.
struct DivisorTwoSpec {
  long a, b;  // requires a < b
};

// Xi(a,b): optimal exponent for the congruence-constrained divisor problem,
// inf over pairs of max{(k+l)/((k+1)(a+b)), k/(kb+a(1+k-l))}.
struct XiSpec {
  long a, b;  // requires a < b
};

// mu(sigma): bound (k+l-sigma)/2 over pairs with l-k >= sigma.
struct MuSpec {
  Rational sigma;  // in [1/2, 1]
};

struct ReportRow {
  std::string label;
  SearchResult result;
  std::string value_display;
  std::optional<Rational> word_value;        // reference-word evaluation, when distinct
  std::optional<std::string> reference_word; // the word that value came from
  std::string note;
};

MaxObjective xi_objective(long a, long b);
MaxObjective mu_objective(const Rational& sigma);
LinearConstraint mu_constraint(const Rational& sigma);

ReportRow delta_two(const DivisorTwoSpec& spec, const SearchConfig& config = {});

struct Thm4Result {
  int r;
  Rational alpha;
  ExponentPair pair;
  Word word;
};

// Closed-form exponent for Delta(1,2^r;x), r >= 5, cross-checked against the
// exact matrix evaluation of its witness word.
Thm4Result thm4_alpha(int r);

struct Thm5Result {
  int r;
  Rational alpha;
  ExponentPair witness;
  Word word;
  std::string note;
};

// Exponent 1/(2^r + 3r - 88/17) for Delta(3,2^r;x); validated for r >= 4.
Thm5Result thm5_alpha(int r);

struct Thm6Result {
  int r;
  Rational theta;
  bool below_bound;            // theta < 1/(2^r + 1)
  ExponentPair pair_b_a_a;     // witness with the trailing block read as B A^2
  ExponentPair pair_ba_ba;     // witness with the trailing block read as (BA)^2
  std::string consistency;
};

// Closed-form exponent for the three-dimensional problem theta(1,2^r,2^r),
// r >= 10. The witness word is ambiguous in the source; both readings are
// evaluated and reported.
Thm6Result thm6_theta(int r);

ReportRow xi(const XiSpec& spec, const SearchConfig& config = {}, bool use_hull = false);
ReportRow mu_sigma(const MuSpec& spec, const SearchConfig& config = {});

std::vector<ReportRow> table_xi(const SearchConfig& config = {}, int jobs = 1);
// Two rows per sigma: searches at depth 100 and depth 1000 with tolerance 0,
// matching how the call counts are reported.
std::vector<ReportRow> table_mu(const SearchConfig& config = {}, int jobs = 1);

// Deterministic SVG of generations 1..depth (or just the start pair when
// depth is 0) in shifted coordinates (k, l-1/2), with the two covering
// rectangles outlined.
void plot_generations(const ExponentPair& initial, int depth, std::ostream& out);
void plot_generations_file(const ExponentPair& initial, int depth, const std::string& path);

struct ParsedConfig {
  MaxObjective objective;
  std::vector<LinearConstraint> constraints;
  SearchConfig config;
};

// JSON config with rationals as strings "p/q" (integers allowed, floats
// rejected). See the README for the schema.
ParsedConfig parse_config(const std::string& json_text);

// Stable machine-readable result line:
//   value=<p/q|decimal> word=<word|-> attained=<bool> calls=<d:n,...>
std::string machine_line(const ReportRow& row);

// Reference data for the Xi table: the published words, and surd values as
// (p + q*sqrt(radicand))/den.
struct XiTableRow {
  long a, b;
  std::string word;
  bool irrational;
  Integer p, q, radicand, den;
};
const std::vector<XiTableRow>& xi_table_rows();

int run_cli(int argc, char** argv);

}  // namespace exppairs
