// Command-line front end.

#include "oncgl2/borel.hpp"
#include "oncgl2/checks.hpp"
#include "oncgl2/comod.hpp"
#include "oncgl2/lambda.hpp"
#include "oncgl2/ncalg.hpp"
#include "oncgl2/parse.hpp"
#include "oncgl2/simples.hpp"
#include "oncgl2/standard.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace oncgl2;
using nlohmann::ordered_json;

namespace {

enum class Format { Json, Tsv, Pretty };

struct Options {
  std::string format = "json";
  bool timing = false;
};

// A table is emitted as TSV or aligned text; everything else goes through JSON.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct Output {
  ordered_json doc;
  Table table;
  std::string pretty;
  int status = 0;
};

Format to_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "tsv") return Format::Tsv;
  return Format::Pretty;
}

void emit(const Output& out, Format fmt) {
  switch (fmt) {
    case Format::Json:
      std::cout << out.doc.dump(2) << "\n";
      break;
    case Format::Tsv: {
      auto line = [](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) std::cout << (i ? "\t" : "") << cells[i];
        std::cout << "\n";
      };
      line(out.table.header);
      for (const auto& r : out.table.rows) line(r);
      break;
    }
    case Format::Pretty:
      std::cout << out.pretty;
      if (!out.pretty.empty() && out.pretty.back() != '\n') std::cout << "\n";
      break;
  }
}

std::string character_key(const Weight& t) { return t.to_string(); }

ordered_json character_json(const Character& c) {
  ordered_json j = ordered_json::object();
  for (auto it = c.rbegin(); it != c.rend(); ++it) j[character_key(it->first)] = it->second;
  return j;
}

ordered_json comodule_json(const Comodule& x) {
  ordered_json j;
  j["dim"] = x.dim();
  j["labels"] = x.labels();
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < x.dim(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t k = 0; k < x.dim(); ++k) row.push_back(x.entry(i, k).to_string());
    rows.push_back(row);
  }
  j["coaction"] = rows;
  return j;
}

ordered_json matrix_json(const Matrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

// ---------------------------------------------------------------- verbs

Output cmd_nf(const std::string& text) {
  Output out;
  NCElement x = parse_expression(text);
  out.doc["input"] = text;
  out.doc["normalForm"] = x.to_string();
  out.doc["terms"] = x.size();
  out.table.header = {"word", "coefficient"};
  for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it)
    out.table.rows.push_back({it->first.to_string(), to_string(it->second)});
  out.pretty = x.to_string(PrintStyle::Pretty);
  return out;
}

Output cmd_basis(std::size_t len) {
  Output out;
  auto words = enumerate_basis(len);
  std::vector<std::string> names;
  for (const auto& w : words) names.push_back(w.to_string());
  out.doc["len"] = len;
  out.doc["count"] = words.size();
  out.doc["words"] = names;
  out.table.header = {"length", "word"};
  for (const auto& w : words) out.table.rows.push_back({std::to_string(w.size()), w.to_string()});
  std::ostringstream p;
  p << words.size() << " normal words of length <= " << len << "\n";
  for (const auto& w : words) p << "  " << w.to_string(" ") << "\n";
  out.pretty = p.str();
  return out;
}

Output cmd_dim_o(std::size_t n) {
  Output out;
  out.table.header = {"n", "dim_O_n", "layer", "layer_predicted"};
  ordered_json rows = ordered_json::array();
  std::size_t total = 0;
  std::ostringstream p;
  p << std::setw(4) << "n" << std::setw(12) << "dim O_n" << std::setw(10) << "layer" << std::setw(12) << "predicted"
    << "\n";
  bool ok = true;
  for (std::size_t k = 0; k <= n; ++k) {
    const std::size_t layer = enumerate_basis_layer(k).size();
    std::size_t predicted = k == 0 ? 1 : 0;
    if (k > 0)
      for (const auto& [g, t] : decompose_layer(k)) predicted += nabla_dimension(t);
    total += layer;
    ok = ok && layer == predicted;
    rows.push_back({{"n", k}, {"dim", total}, {"layer", layer}, {"predicted", predicted}});
    out.table.rows.push_back({std::to_string(k), std::to_string(total), std::to_string(layer), std::to_string(predicted)});
    p << std::setw(4) << k << std::setw(12) << total << std::setw(10) << layer << std::setw(12) << predicted << "\n";
  }
  out.doc["n"] = n;
  out.doc["rows"] = rows;
  out.doc["verified"] = ok;
  out.pretty = p.str();
  out.status = ok ? 0 : 1;
  return out;
}

Output describe_module(const LambdaWord& lambda, const Comodule& x, const char* kind, bool with_coaction,
                       bool verify) {
  Output out;
  const Character c = weight_decomposition(x);
  const ExtremeWeights e = highest_lowest_weight(x);
  out.doc["lambda"] = lambda.to_string();
  out.doc["module"] = kind;
  out.doc["dim"] = x.dim();
  out.doc["dimNabla"] = nabla_dimension(lambda);
  out.doc["dimDelta"] = nabla_dimension(star_inv(lambda));
  out.doc["dimL"] = classify(lambda).dim();
  std::vector<std::string> ms;
  for (const auto& mu : nabla_multiset(lambda)) ms.push_back(mu.to_string());
  out.doc["multiset"] = ms;
  out.doc["char"] = character_json(c);
  out.doc["highest"] = e.highest.to_string();
  out.doc["lowest"] = e.lowest.to_string();
  if (verify) {
    Verdict v = verify_comodule(x);
    out.doc["verified"] = v.ok;
    if (!v.ok) {
      out.doc["error"] = v.message;
      out.status = 1;
    }
  }
  if (with_coaction) out.doc["comodule"] = comodule_json(x);
  out.table.header = {"weight", "multiplicity"};
  for (auto it = c.rbegin(); it != c.rend(); ++it)
    out.table.rows.push_back({it->first.to_string(), std::to_string(it->second)});
  std::ostringstream p;
  p << kind << "(" << lambda.to_string() << "): dim " << x.dim() << "\n  char = " << to_string(c) << "\n";
  out.pretty = p.str();
  return out;
}

Output cmd_simple(const LambdaWord& lambda, bool verify) {
  Output out;
  BlockExpression e = classify(lambda);
  out.doc["lambda"] = lambda.to_string();
  out.doc["expression"] = e.to_string();
  out.doc["dim"] = e.dim();
  out.doc["char"] = character_json(e.character());
  if (verify) {
    Verdict v = crosscheck(lambda);
    out.doc["verified"] = v.ok;
    if (!v.ok) {
      out.doc["error"] = v.message;
      out.status = 1;
    }
  }
  out.table.header = {"lambda", "expression", "dim"};
  out.table.rows.push_back({lambda.to_string(), e.to_string(), std::to_string(e.dim())});
  out.pretty = "L(" + lambda.to_string() + ") = " + e.to_string() + "   dim " + std::to_string(e.dim());
  return out;
}

Output cmd_hom(const LambdaWord& l1, const LambdaWord& l2, const std::string& kind, bool maps) {
  Output out;
  Comodule src = kind == "nabla-nabla" ? build_nabla(l1) : build_delta(l1);
  Comodule dst = build_nabla(l2);
  auto basis = hom_space(src, dst);
  out.doc["source"] = (kind == "nabla-nabla" ? "nabla(" : "Delta(") + l1.to_string() + ")";
  out.doc["target"] = "nabla(" + l2.to_string() + ")";
  out.doc["dim"] = basis.size();
  if (maps) {
    ordered_json ms = ordered_json::array();
    for (const auto& f : basis) ms.push_back(matrix_json(f));
    out.doc["maps"] = ms;
  }
  out.table.header = {"source", "target", "dim"};
  out.table.rows.push_back({out.doc["source"], out.doc["target"], std::to_string(basis.size())});
  out.pretty = "dim Hom(" + out.doc["source"].get<std::string>() + ", " + out.doc["target"].get<std::string>() +
               ") = " + std::to_string(basis.size());
  return out;
}

Output cmd_multiset(const LambdaWord& lambda) {
  Output out;
  auto ms = nabla_multiset(lambda);
  std::vector<std::string> names;
  std::size_t total = 0;
  for (const auto& mu : ms) {
    names.push_back(mu.to_string());
    total += nabla_dimension(mu);
  }
  out.doc["lambda"] = lambda.to_string();
  out.doc["multiset"] = names;
  out.doc["dimM"] = std::size_t{1} << lambda.d_count();
  out.doc["sumDimNabla"] = total;
  out.doc["char"] = character_json(repring_char(ms));
  out.doc["verified"] = total == (std::size_t{1} << lambda.d_count());
  out.status = out.doc["verified"].get<bool>() ? 0 : 1;
  out.table.header = {"member", "dimNabla"};
  for (const auto& mu : ms) out.table.rows.push_back({mu.to_string(), std::to_string(nabla_dimension(mu))});
  out.pretty = "M(" + lambda.to_string() + ") : " + join(names, " : ");
  return out;
}

Output cmd_induce(const Weight& t, std::size_t len, bool predicted) {
  Output out;
  auto res = induced_truncated(t, len);
  std::vector<std::string> basis;
  for (const auto& f : res.basis) basis.push_back(f.to_string());
  out.doc["weight"] = t.to_string();
  out.doc["len"] = len;
  out.doc["dim"] = res.dim;
  out.doc["basis"] = basis;
  if (predicted) {
    const std::size_t p = induced_predicted(t, len);
    out.doc["predictedDim"] = p;
    out.doc["verified"] = p == res.dim;
    if (p != res.dim) out.status = 1;
  }
  out.table.header = {"basis"};
  for (const auto& b : basis) out.table.rows.push_back({b});
  out.pretty = "Ind(" + t.to_string() + ") in O_" + std::to_string(len) + ": dim " + std::to_string(res.dim) + "\n";
  for (const auto& f : res.basis) out.pretty += "  " + f.to_string(PrintStyle::Pretty) + "\n";
  return out;
}

Output cmd_poset_below(const LambdaWord& lambda) {
  Output out;
  auto below = pi_below(lambda);
  auto covers = covers_down(lambda);
  std::vector<std::string> b, c;
  for (const auto& mu : below) b.push_back(mu.to_string());
  for (const auto& mu : covers) c.push_back(mu.to_string());
  out.doc["lambda"] = lambda.to_string();
  out.doc["coversDown"] = c;
  out.doc["below"] = b;
  out.doc["count"] = b.size();
  out.table.header = {"below"};
  for (const auto& s : b) out.table.rows.push_back({s});
  out.pretty = "below " + lambda.to_string() + ": " + (b.empty() ? std::string("(none)") : join(b, ", "));
  return out;
}

Output cmd_check(const std::vector<std::string>& suites, std::optional<std::size_t> len, bool timing) {
  Output out;
  const bool all_suites = std::find(suites.begin(), suites.end(), "all") != suites.end();
  const std::vector<std::string> names = all_suites ? check_suite_names() : suites;
  ordered_json checks = ordered_json::array();
  bool all = true;
  out.table.header = {"check", "bound", "cases", "result"};
  if (timing) out.table.header.push_back("seconds");
  std::ostringstream p;
  for (const auto& name : names) {
    CheckResult r = run_check(name, len);
    all = all && r.pass;
    ordered_json j;
    j["name"] = r.name;
    j["bound"] = r.bound;
    j["cases"] = r.cases;
    j["pass"] = r.pass;
    j["failures"] = r.failures;
    if (timing) j["seconds"] = r.seconds;
    checks.push_back(j);
    std::vector<std::string> row = {r.name, std::to_string(r.bound), std::to_string(r.cases), r.pass ? "PASS" : "FAIL"};
    if (timing) {
      std::ostringstream s;
      s << std::fixed << std::setprecision(3) << r.seconds;
      row.push_back(s.str());
    }
    out.table.rows.push_back(row);
    p << (r.pass ? "PASS " : "FAIL ") << r.name << " (bound " << r.bound << ", " << r.cases << " cases)";
    if (timing) p << " " << std::fixed << std::setprecision(2) << r.seconds << "s";
    p << "\n";
    for (const auto& f : r.failures) p << "    " << f << "\n";
  }
  out.doc["checks"] = checks;
  out.doc["pass"] = all;
  out.pretty = p.str();
  out.status = all ? 0 : 1;
  return out;
}

int usage_error(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* policy = std::getenv("ONCGL2_ARITHMETIC")) {
    if (std::string(policy) != "exact")
      return usage_error(std::string("ONCGL2_ARITHMETIC=") + policy + " is not supported; only 'exact' is");
  }

  CLI::App app{"Exact computations in the universal quantum group O_nc(GL2)", "oncgl2"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"json", "tsv", "pretty"}))
      ->capture_default_str();
  app.add_flag("--timing", opt.timing, "Include run times in check reports");
  app.set_config("--config", "", "key=value file supplying option defaults");

  std::string expr, lambda_text, lambda2_text, weight_text, hom_kind = "delta-nabla";
  std::size_t len = 3, n = 6;
  std::optional<std::size_t> check_len;
  bool coaction = false, no_verify = false, predicted = false, maps = false;

  auto* nf = app.add_subcommand("nf", "Normal form of an expression");
  nf->add_option("expr", expr, "Expression")->required();

  auto* basis = app.add_subcommand("basis", "Normal words up to a length");
  basis->add_option("--len", len, "Maximal length")->capture_default_str();

  auto* dim_o = app.add_subcommand("dim-O", "Dimensions of the length filtration");
  dim_o->add_option("n", n, "Maximal length")->capture_default_str();

  auto* nabla = app.add_subcommand("nabla", "Costandard comodule");
  nabla->add_option("lambda", lambda_text, "Weight word")->required();
  nabla->add_flag("--coaction", coaction, "Include the coaction matrix");
  nabla->add_flag("--no-verify", no_verify, "Skip the comodule axiom check");

  auto* delta = app.add_subcommand("delta", "Standard comodule");
  delta->add_option("lambda", lambda_text, "Weight word")->required();
  delta->add_flag("--coaction", coaction, "Include the coaction matrix");
  delta->add_flag("--no-verify", no_verify, "Skip the comodule axiom check");

  auto* simple = app.add_subcommand("simple", "Block expression of the simple comodule");
  simple->add_option("lambda", lambda_text, "Weight word")->required();
  simple->add_flag("--no-verify", no_verify, "Skip the rank cross-check");

  auto* hom = app.add_subcommand("hom", "Dimension of Hom(Delta(l1), nabla(l2))");
  hom->add_option("lambda1", lambda_text, "Source weight word")->required();
  hom->add_option("lambda2", lambda2_text, "Target weight word")->required();
  hom->add_option("--kind", hom_kind, "Source type")
      ->check(CLI::IsMember({"delta-nabla", "nabla-nabla"}))
      ->capture_default_str();
  hom->add_flag("--maps", maps, "Include a basis of maps");

  auto* multiset = app.add_subcommand("multiset", "Sections of the nabla-filtration of M(lambda)");
  multiset->add_option("lambda", lambda_text, "Weight word or tensor word of V, R, Ri")->required();

  auto* induce = app.add_subcommand("induce", "Truncated induced module");
  induce->add_option("--weight", weight_text, "Weight a^i*d^j")->required();
  induce->add_option("--len", len, "Truncation length")->capture_default_str();
  induce->add_flag("--predicted", predicted, "Also count the predicted basis");

  auto* below = app.add_subcommand("poset-below", "Everything strictly below lambda");
  below->add_option("lambda", lambda_text, "Weight word")->required();

  auto* check = app.add_subcommand("check", "Run verification suites");
  std::vector<std::string> suite;
  std::vector<std::string> suites = check_suite_names();
  suites.push_back("all");
  check->add_option("suite", suite, "Suite names, or all")->required()->check(CLI::IsMember(suites));
  check->add_option("--len", check_len, "Bound for the suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const Format fmt = to_format(opt.format);
  Output out;
  try {
    if (nf->parsed()) out = cmd_nf(expr);
    else if (basis->parsed()) out = cmd_basis(len);
    else if (dim_o->parsed()) out = cmd_dim_o(n);
    else if (nabla->parsed()) {
      LambdaWord l = parse_lambda(lambda_text);
      out = describe_module(l, build_nabla(l), "nabla", coaction, !no_verify);
    } else if (delta->parsed()) {
      LambdaWord l = parse_lambda(lambda_text);
      out = describe_module(l, build_delta(l), "Delta", coaction, !no_verify);
    } else if (simple->parsed()) out = cmd_simple(parse_lambda(lambda_text), !no_verify);
    else if (hom->parsed()) out = cmd_hom(parse_lambda(lambda_text), parse_lambda(lambda2_text), hom_kind, maps);
    else if (multiset->parsed()) {
      const bool tensor_word = lambda_text.find('V') != std::string::npos || lambda_text.find('R') != std::string::npos;
      out = cmd_multiset(tensor_word ? lambda_of_tensor_word(parse_tensor_word(lambda_text)) : parse_lambda(lambda_text));
    } else if (induce->parsed()) out = cmd_induce(parse_weight(weight_text), len, predicted);
    else if (below->parsed()) out = cmd_poset_below(parse_lambda(lambda_text));
    else if (check->parsed()) out = cmd_check(suite, check_len, opt.timing);
  } catch (const ParseError& e) {
    return usage_error(e.what());
  } catch (const std::invalid_argument& e) {
    return usage_error(e.what());
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return 1;
  }
  emit(out, fmt);
  return out.status;
}
