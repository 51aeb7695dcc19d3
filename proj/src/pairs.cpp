#include "exppairs/pairs.hpp"

#include <cctype>
#include <stdexcept>

namespace exppairs {

std::string op_name(Op op) {
  switch (op) {
    case Op::A: return "A";
    case Op::B: return "B";
    case Op::BA: return "BA";
  }
  throw std::logic_error("unreachable");
}

const ProjMatrix& op_matrix(Op op) {
  switch (op) {
    case Op::A: return op_a_matrix();
    case Op::B: return op_b_matrix();
    case Op::BA: return op_ba_matrix();
  }
  throw std::logic_error("unreachable");
}

ExponentPair::ExponentPair(Rational k_val, Rational l_val, bool eps_flag)
    : k(std::move(k_val)), l(std::move(l_val)), eps(eps_flag) {
  if (sgn(k) < 0 || k > make_rational(1, 2) || l < make_rational(1, 2) || l > 1 ||
      Rational(k + l) > 1)
    throw std::domain_error("pair (" + exppairs::to_string(k) + "," +
                            exppairs::to_string(l) + ") outside the exponent-pair triangle");
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    auto half = make_rational(1, 2);
    auto shifted = [&](long n, long d) {
      return ExponentPair(make_rational(n, d), Rational(half + make_rational(n, d)), true);
    };
    std::vector<CatalogEntry> v;
    v.push_back({"I", ExponentPair(Rational(0), Rational(1), false)});
    v.push_back({"Hux13", ExponentPair(make_rational(2, 13), make_rational(35, 52), true)});
    v.push_back({"Hux80", shifted(13, 80)});
    v.push_back({"Hux68", shifted(11, 68)});
    v.push_back({"HW", shifted(9, 56)});
    v.push_back({"W", shifted(89, 560)});
    v.push_back({"H05", shifted(32, 205)});
    return v;
  }();
  return entries;
}

const ExponentPair& catalog_lookup(const std::string& label) {
  for (const auto& e : catalog())
    if (e.label == label) return e.pair;
  throw std::invalid_argument("unknown initial pair label: " + label);
}

ExponentPair resolve_initial(const std::string& label) {
  if (!label.empty() && label.front() == '(') {
    if (label.back() != ')')
      throw std::invalid_argument("malformed pair literal: " + label);
    std::string body = label.substr(1, label.size() - 2);
    auto comma = body.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("malformed pair literal: " + label);
    return ExponentPair(parse_rational(body.substr(0, comma)),
                        parse_rational(body.substr(comma + 1)), false);
  }
  return catalog_lookup(label);
}

ExponentPair apply_operator(Op op, const ExponentPair& p) {
  switch (op) {
    case Op::A: {
      Rational den = Rational(2 * p.k + 2);
      return ExponentPair(Rational(p.k / den), Rational((p.k + p.l + 1) / den), p.eps);
    }
    case Op::B:
      return ExponentPair(Rational(p.l - make_rational(1, 2)),
                          Rational(p.k + make_rational(1, 2)), p.eps);
    case Op::BA: {
      Rational den = Rational(2 * p.k + 2);
      return ExponentPair(Rational(p.l / den), Rational((2 * p.k + 1) / den), p.eps);
    }
  }
  throw std::logic_error("unreachable");
}

ProjMatrix word_to_matrix(std::span<const Op> letters) {
  ProjMatrix acc = identity_matrix();
  // letters.front() applies first, so it sits rightmost in the product.
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    acc = mat_mul(acc, op_matrix(*it));
  return acc;
}

FixedPointResult fixed_point(std::span<const Op> cycle, const Rational& tolerance) {
  if (cycle.empty()) throw std::invalid_argument("empty cycle has no fixed point");
  if (sgn(tolerance) <= 0) throw std::invalid_argument("tolerance must be positive");

  // Certified upper bound on the per-cycle contraction factor: sqrt(3)/2
  // per A or BA letter; B is an isometry and contributes nothing.
  const Rational letter_factor = make_rational(866026, 1000000);
  Rational c(1);
  bool contracts = false;
  for (Op op : cycle)
    if (op != Op::B) {
      c *= letter_factor;
      contracts = true;
    }
  if (!contracts)
    throw std::runtime_error("cycle of B letters only has no attracting fixed point");
  Rational gain = Rational(c / (1 - c));

  ExponentPair x(make_rational(1, 6), make_rational(2, 3), false);
  const int max_iter = 200000;
  for (int iter = 0; iter < max_iter; ++iter) {
    ExponentPair y = x;
    for (Op op : cycle) y = apply_operator(op, y);
    Rational dk = Rational(y.k - x.k), dl = Rational(y.l - x.l);
    Rational dist = sqrt_upper(Rational(dk * dk + dl * dl));
    Rational err = Rational(dist * gain);
    if (err < tolerance && dist < Rational(tolerance / 2))
      return {y, err};
    x = y;
  }
  throw std::runtime_error("fixed-point iteration did not converge");
}

ExponentPair eval_word(const Word& w, const Rational& tolerance) {
  ExponentPair p = w.tail.empty() ? resolve_initial(w.initial)
                                  : [&] {
                                      ExponentPair fp = fixed_point(w.tail, tolerance).pair;
                                      fp.eps = resolve_initial(w.initial).eps;
                                      return fp;
                                    }();
  for (Op op : w.letters) p = apply_operator(op, p);
  return p;
}

namespace {

struct Token {
  enum Kind { letter, group_open, group_close, label } kind;
  Op op = Op::A;
  long exponent = 1;   // -1 encodes ^inf
  std::string text;    // label text
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto read_exponent = [&](Token& t) {
    if (i < s.size() && s[i] == '^') {
      ++i;
      if (s.compare(i, 3, "inf") == 0) {
        t.exponent = -1;
        i += 3;
        return;
      }
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j == i) throw std::invalid_argument("bad exponent in word: " + s);
      t.exponent = std::stol(s.substr(i, j - i));
      i = j;
    }
  };
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '(') {
      // A literal pair "(1/6,2/3)" is a terminal label, not a group.
      std::size_t close = s.find(')', i);
      std::string inside = close == std::string::npos ? "" : s.substr(i + 1, close - i - 1);
      if (inside.find(',') != std::string::npos) {
        out.push_back({Token::label, Op::A, 1, s.substr(i, close - i + 1)});
        i = close + 1;
        continue;
      }
      out.push_back({Token::group_open, Op::A, 1, ""});
      ++i;
      continue;
    }
    if (c == ')') {
      ++i;
      Token t{Token::group_close, Op::A, 1, ""};
      read_exponent(t);
      out.push_back(t);
      continue;
    }
    if (std::isalnum(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isalnum(static_cast<unsigned char>(s[j]))) ++j;
      std::string ident = s.substr(i, j - i);
      i = j;
      Token t{Token::letter, Op::A, 1, ""};
      if (ident == "A")
        t.op = Op::A;
      else if (ident == "B")
        t.op = Op::B;
      else if (ident == "BA")
        t.op = Op::BA;
      else {
        out.push_back({Token::label, Op::A, 1, ident});
        continue;
      }
      read_exponent(t);
      out.push_back(t);
      continue;
    }
    throw std::invalid_argument(std::string("unexpected character '") + c + "' in word");
  }
  return out;
}

}  // namespace

namespace {

// Parses elements up to an unmatched group_close or the end. Nested groups
// expand in place; ^inf is only legal at the top level, where it becomes the
// cyclic tail and must be the last element before the label.
std::vector<Op> parse_elements(const std::vector<Token>& tokens, std::size_t& i,
                               std::size_t end, bool top, std::vector<Op>* tail,
                               const std::string& text) {
  std::vector<Op> printed;
  auto require_no_tail = [&] {
    if (tail && !tail->empty())
      throw std::invalid_argument("tokens after the ^inf tail: " + text);
  };
  while (i < end) {
    const Token& t = tokens[i];
    if (t.kind == Token::label)
      throw std::invalid_argument("label before the end of the word: " + text);
    if (t.kind == Token::group_close) {
      if (top) throw std::invalid_argument("unbalanced ')': " + text);
      return printed;
    }
    if (t.kind == Token::letter) {
      require_no_tail();
      ++i;
      if (t.exponent == -1) {
        if (!top) throw std::invalid_argument("^inf inside a group: " + text);
        *tail = {t.op};
        continue;
      }
      for (long n = 0; n < t.exponent; ++n) printed.push_back(t.op);
      continue;
    }
    // group_open
    require_no_tail();
    ++i;
    std::vector<Op> group = parse_elements(tokens, i, end, false, nullptr, text);
    if (i >= end || tokens[i].kind != Token::group_close)
      throw std::invalid_argument("unbalanced '(': " + text);
    const Token close = tokens[i];
    ++i;
    if (close.exponent == -1) {
      if (!top) throw std::invalid_argument("^inf inside a group: " + text);
      if (group.empty()) throw std::invalid_argument("empty ^inf group: " + text);
      // Group content is printed order; application order reverses it.
      tail->assign(group.rbegin(), group.rend());
      continue;
    }
    for (long n = 0; n < close.exponent; ++n)
      printed.insert(printed.end(), group.begin(), group.end());
  }
  if (!top) throw std::invalid_argument("unbalanced '(': " + text);
  return printed;
}

}  // namespace

Word parse_word(const std::string& text) {
  auto tokens = tokenize(text);
  if (tokens.empty()) throw std::invalid_argument("empty word");
  if (tokens.back().kind != Token::label)
    throw std::invalid_argument("word must end with an initial-pair label: " + text);

  Word w;
  w.initial = tokens.back().text;
  resolve_initial(w.initial);  // validate early

  std::size_t i = 0;
  std::vector<Op> printed =
      parse_elements(tokens, i, tokens.size() - 1, true, &w.tail, text);
  w.letters.assign(printed.rbegin(), printed.rend());
  return w;
}

std::string to_string(const Word& w) {
  auto render = [](const std::vector<Op>& application_order) {
    std::string out;
    std::vector<Op> printed(application_order.rbegin(), application_order.rend());
    for (std::size_t i = 0; i < printed.size();) {
      std::size_t j = i;
      while (j < printed.size() && printed[j] == printed[i]) ++j;
      std::size_t run = j - i;
      if (!out.empty()) out += ' ';
      if (run == 1)
        out += op_name(printed[i]);
      else if (printed[i] == Op::BA)
        out += "(BA)^" + std::to_string(run);
      else
        out += op_name(printed[i]) + "^" + std::to_string(run);
      i = j;
    }
    return out;
  };
  std::string out = render(w.letters);
  if (!w.tail.empty()) {
    if (!out.empty()) out += ' ';
    out += "(" + render(w.tail) + ")^inf";
  }
  if (!out.empty()) out += ' ';
  out += w.initial;
  return out;
}

}  // namespace exppairs
