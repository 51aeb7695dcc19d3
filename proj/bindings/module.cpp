#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "exppairs/applications.hpp"

namespace py = pybind11;
using namespace exppairs;

namespace {

py::dict pair_dict(const ExponentPair& p) {
  py::dict d;
  d["k"] = to_string(p.k);
  d["l"] = to_string(p.l);
  d["eps"] = p.eps;
  return d;
}

py::dict result_dict(const SearchResult& r) {
  py::dict d;
  d["feasible"] = r.feasible;
  if (r.feasible) {
    d["value"] = to_string(r.value);
    d["value_float"] = to_double(r.value);
    d["lower_bound"] = to_string(r.lower_bound);
    d["attained"] = r.attained;
    if (r.witness_word) d["word"] = to_string(*r.witness_word);
    if (r.witness_pair) d["pair"] = pair_dict(*r.witness_pair);
  }
  d["calls"] = r.stats.total_calls();
  return d;
}

py::dict row_dict(const ReportRow& row) {
  py::dict d = result_dict(row.result);
  d["label"] = row.label;
  d["display"] = row.value_display;
  if (row.word_value) d["word_value_float"] = to_double(*row.word_value);
  if (!row.note.empty()) d["note"] = row.note;
  return d;
}

SearchConfig make_config(const std::string& tolerance, int max_depth) {
  SearchConfig cfg;
  cfg.tolerance = parse_rational(tolerance);
  cfg.max_depth = max_depth;
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact optimization over van der Corput exponent pairs";

  m.def("catalog", [] {
    py::list out;
    for (const auto& e : exppairs::catalog()) {
      py::dict d = pair_dict(e.pair);
      d["label"] = e.label;
      out.append(d);
    }
    return out;
  });

  m.def(
      "apply_operator",
      [](const std::string& op, const std::string& k, const std::string& l) {
        Op o = op == "A" ? Op::A : op == "B" ? Op::B : Op::BA;
        if (op != "A" && op != "B" && op != "BA")
          throw std::invalid_argument("operator must be A, B or BA");
        return pair_dict(apply_operator(o, ExponentPair(parse_rational(k), parse_rational(l))));
      },
      py::arg("op"), py::arg("k"), py::arg("l"));

  m.def(
      "eval_word",
      [](const std::string& word, const std::string& tolerance) {
        return pair_dict(eval_word(parse_word(word), parse_rational(tolerance)));
      },
      py::arg("word"), py::arg("tolerance") = "1/1000000000");

  m.def("word_to_string", [](const std::string& word) { return to_string(parse_word(word)); });

  m.def(
      "gray_words",
      [](int n) {
        py::list out;
        for (const auto& w : gray_order_words(n)) out.append(to_string(w));
        return out;
      },
      py::arg("n"));

  m.def(
      "generation",
      [](const std::string& initial, int depth) {
        ExponentPair start = resolve_initial(initial);
        py::list out;
        for (const auto& [word, pair] : exppairs::generation(start, depth, initial).entries) {
          py::dict d = pair_dict(pair);
          d["word"] = to_string(word);
          out.append(d);
        }
        return out;
      },
      py::arg("initial"), py::arg("depth"));

  m.def(
      "optimize",
      [](const std::string& config_json) {
        ParsedConfig parsed = parse_config(config_json);
        if (parsed.config.mode == SearchMode::greedy)
          return result_dict(greedy_optimize(parsed.objective, parsed.constraints, parsed.config));
        return result_dict(optimize(parsed.objective, parsed.constraints, parsed.config));
      },
      py::arg("config_json"));

  m.def(
      "xi",
      [](long a, long b, const std::string& tolerance, int max_depth) {
        return row_dict(xi(XiSpec{a, b}, make_config(tolerance, max_depth)));
      },
      py::arg("a"), py::arg("b"), py::arg("tolerance") = "1/1000000000",
      py::arg("max_depth") = 1000);

  m.def(
      "mu",
      [](const std::string& sigma, const std::string& tolerance, int max_depth) {
        return row_dict(mu_sigma(MuSpec{parse_rational(sigma)}, make_config(tolerance, max_depth)));
      },
      py::arg("sigma"), py::arg("tolerance") = "1/1000000000", py::arg("max_depth") = 1000);

  m.def(
      "delta",
      [](long a, long b, const std::string& tolerance, int max_depth) {
        return row_dict(delta_two(DivisorTwoSpec{a, b}, make_config(tolerance, max_depth)));
      },
      py::arg("a"), py::arg("b"), py::arg("tolerance") = "1/1000000000",
      py::arg("max_depth") = 1000);

  m.def(
      "thm4",
      [](int r) {
        Thm4Result res = thm4_alpha(r);
        py::dict d;
        d["alpha"] = to_string(res.alpha);
        d["alpha_float"] = to_double(res.alpha);
        d["word"] = to_string(res.word);
        d["pair"] = pair_dict(res.pair);
        return d;
      },
      py::arg("r"));

  m.def(
      "thm6",
      [](int r) {
        Thm6Result res = thm6_theta(r);
        py::dict d;
        d["theta"] = to_string(res.theta);
        d["theta_float"] = to_double(res.theta);
        d["below_bound"] = res.below_bound;
        return d;
      },
      py::arg("r"));
}
