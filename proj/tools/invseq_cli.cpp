#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "invseq/closedform.hpp"
#include "invseq/counting.hpp"
#include "invseq/identities.hpp"
#include "invseq/seqcore.hpp"
#include "invseq/series.hpp"
#include "json.hpp"

namespace {

using namespace invseq;

// "0012" or "0,0,1,2"; comma-separated patterns form one avoidance class.
std::vector<Pattern> parse_class(const std::string& text) {
  // Commas separate patterns when every token has at least two digits;
  // otherwise they separate the letters of a single pattern, so that
  // "021,120" is two patterns but "0,0,1,2" is one.
  std::vector<Pattern> out;
  std::vector<std::string> toks;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      toks.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  toks.push_back(cur);
  bool all_digit_words = true;
  for (const auto& t : toks)
    if (t.size() < 2 || t.find_first_not_of("0123456789") != std::string::npos)
      all_digit_words = false;
  if (all_digit_words && toks.size() > 1) {
    for (const auto& t : toks) out.emplace_back(parse_word(t));
  } else {
    out.emplace_back(parse_word(text));
  }
  return out;
}

std::vector<std::vector<Pattern>> parse_classes(const std::string& text) {
  std::vector<std::vector<Pattern>> out;
  std::stringstream ss(text);
  std::string cls;
  while (std::getline(ss, cls, ';')) out.push_back(parse_class(cls));
  return out;
}

std::string class_label(const std::vector<Pattern>& patterns) {
  std::string s;
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    if (i) s += ",";
    for (int v : patterns[i].letters()) s += std::to_string(v);
  }
  return s;
}

std::pair<int, int> parse_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    int n = std::stoi(text);
    return {n, n};
  }
  return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(BigInt(text));
  return Rational(BigInt(text.substr(0, slash)),
                  BigInt(text.substr(slash + 1)));
}

void write_out(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content << "\n";
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open output file: " + path);
  f << content << "\n";
}

struct CountOptions {
  std::string patterns = "0012";
  std::string range = "1..6";
  std::string method = "all";
  bool last_max = false;
  std::string format = "pretty";
  std::string out;
  int brute_cap = kDefaultBruteCap;
};

bool is_class_0012(const std::vector<Pattern>& cls) {
  return cls.size() == 1 && cls[0].letters() == Word{0, 0, 1, 2};
}

// Closed forms known for specific classes, used by method "formula".
std::optional<BigInt> formula_count(const std::vector<Pattern>& cls, int n) {
  static const std::vector<std::vector<Pattern>> wilf_0012{
      parse_class("0012"), parse_class("021,120"), parse_class("102,110"),
      parse_class("102,120")};
  for (const auto& w : wilf_0012) {
    bool same = w.size() == cls.size();
    for (std::size_t i = 0; same && i < w.size(); ++i)
      same = w[i] == cls[i];
    if (same) return a279561(n);
  }
  if (cls.size() == 1 && cls[0].letters() == Word{0, 1, 1}) return bell(n);
  if (cls.size() == 1 && cls[0].letters() == Word{0, 2, 1}) return schroder(n);
  return std::nullopt;
}

int run_count(const CountOptions& opt) {
  auto cls = parse_class(opt.patterns);
  auto [lo, hi] = parse_range(opt.range);
  if (lo < 1 || hi < lo)
    throw std::invalid_argument("count: bad n range " + opt.range);

  CountReport report;
  report.family = class_label(cls) + (opt.last_max ? " last=n-1" : "");
  report.method = opt.method;
  bool agree = true;
  std::string diag;
  for (int n = lo; n <= hi; ++n) {
    std::map<std::string, BigInt> per_method;
    auto want = [&](const std::string& m) {
      return opt.method == m || opt.method == "all";
    };
    if (opt.last_max) {
      if (!is_class_0012(cls))
        throw std::invalid_argument("--last-max is defined for class 0012 only");
      if (want("brute") && n <= opt.brute_cap)
        per_method["brute"] = count_last_max(n, Method::Brute, opt.brute_cap);
      if (want("dp")) per_method["dp"] = count_last_max(n, Method::Dp);
      if (want("formula")) per_method["formula"] = pow2_last(n);
    } else {
      if (want("brute") && (opt.method == "brute" || n <= opt.brute_cap))
        per_method["brute"] = count_avoiders(n, cls, opt.brute_cap);
      if (want("dp") && is_class_0012(cls))
        per_method["dp"] = count_avoid_0012(n, Method::Dp);
      if (want("formula")) {
        auto v = formula_count(cls, n);
        if (v) per_method["formula"] = *v;
        else if (opt.method == "formula")
          throw std::invalid_argument("no closed form known for class " +
                                      class_label(cls));
      }
    }
    if (per_method.empty())
      throw std::invalid_argument("method '" + opt.method +
                                  "' not applicable to class " +
                                  class_label(cls));
    const BigInt& first = per_method.begin()->second;
    for (const auto& [m, v] : per_method)
      if (v != first) {
        agree = false;
        diag = "disagreement at n=" + std::to_string(n) + ": " +
               per_method.begin()->first + "=" + first.str() + " vs " + m +
               "=" + v.str();
      }
    report.values.emplace_back(n, first);
  }

  if (opt.format == "json") {
    write_out(opt.out, report_to_json(report));
  } else if (opt.format == "csv") {
    std::string s = "n,count";
    for (const auto& [n, v] : report.values)
      s += "\n" + std::to_string(n) + "," + v.str();
    write_out(opt.out, s);
  } else {
    std::string s;
    for (const auto& [n, v] : report.values) {
      if (!s.empty()) s += "\n";
      s += "n=" + std::to_string(n) + " count=" + v.str();
    }
    if (opt.method == "all")
      s += agree ? "\nall methods agree" : "\nMETHOD DISAGREEMENT";
    write_out(opt.out, s);
  }
  if (!agree) {
    std::cerr << "error: " << diag << "\n";
    return 1;
  }
  return 0;
}

int run_table(int n, const std::string& format, const std::string& out) {
  StatTriangle t = stat_triangle(n);
  write_out(out, format == "json" ? triangle_to_json(t) : triangle_to_csv(t));
  return 0;
}

struct SeriesOptions {
  std::string which = "L";
  std::string x = "1";
  std::string y = "1";
  int order = 10;
  std::string source = "both";
  std::string format = "pretty";
  std::string out;
};

int run_series(const SeriesOptions& opt) {
  Rational x = parse_rational(opt.x);
  Rational y = parse_rational(opt.y);
  std::optional<TruncatedSeries> dp, closed;

  if (opt.which == "sqrt") {
    closed = sqrt_one_minus_4q(opt.order);
  } else if (opt.which == "F11") {
    closed = F11_closed(opt.order);
    if (opt.source != "closed")
      dp = assemble_from_dp(GfKind::F, 1, 1, opt.order);
  } else {
    GfKind kind;
    if (opt.which == "L") kind = GfKind::L;
    else if (opt.which == "D") kind = GfKind::D;
    else if (opt.which == "F") kind = GfKind::F;
    else throw std::invalid_argument("unknown series: " + opt.which);
    if (opt.source != "closed") dp = assemble_from_dp(kind, x, y, opt.order);
    if (opt.source != "dp") {
      if (kind == GfKind::L) closed = L_closed(x, opt.order);
      else if (kind == GfKind::D) closed = D_closed(x, opt.order);
      else closed = F_closed(x, y, opt.order);
    }
  }

  auto render = [&](const TruncatedSeries& s) {
    return opt.format == "json" ? s.to_json() : s.pretty();
  };
  std::string text;
  int rc = 0;
  if (dp && closed) {
    TruncatedSeries residual = *dp - *closed;
    text = "dp:       " + render(*dp) + "\nclosed:   " + render(*closed) +
           "\nresidual: " + render(residual);
    if (!residual.is_zero()) rc = 1;
  } else if (dp) {
    text = render(*dp);
  } else {
    text = render(*closed);
  }
  write_out(opt.out, text);
  return rc;
}

int run_verify(const std::string& identity, int samples, int order,
               const std::string& out) {
  std::vector<std::string> names;
  if (identity == "all") {
    names = {"G-gf", "func-G", "D-1", "D-2",
             "F-x1", "F-xy",   "F-1y", "kernel-roots"};
  } else {
    names = {identity};
  }
  if (samples <= 0) samples = order + 3;

  std::string text;
  bool all_pass = true;
  for (const std::string& name : names) {
    if (!text.empty()) text += "\n";
    if (name == "kernel-roots") {
      KernelRootReport r = check_kernel_roots(order);
      all_pass = all_pass && r.all_ok();
      text += std::string("kernel-roots: ") + (r.all_ok() ? "pass" : "FAIL");
      text += " (root prefix:";
      for (std::size_t i = 0; i < r.catalan_prefix.size() && i < 5; ++i)
        text += " " + rational_to_string(r.catalan_prefix[i]);
      text += ")";
      continue;
    }
    auto id = parse_identity(name);
    if (!id) throw std::invalid_argument("unknown identity: " + name);
    IdentityResult r = check_identity_schedule(*id, samples, order);
    all_pass = all_pass && r.pass;
    if (r.pass) {
      text += name + ": pass";
    } else {
      const IdentityFailure& f = *r.failure;
      text += name + ": FAIL at x=" + rational_to_string(f.x) +
              " y=" + rational_to_string(f.y) + ", first nonzero coefficient q^" +
              std::to_string(f.coeff_index) + " = " +
              rational_to_string(f.value);
    }
  }
  write_out(out, text);
  return all_pass ? 0 : 1;
}

int run_wilf(const std::string& classes_text, int max_n, int brute_cap,
             const std::string& format, const std::string& out) {
  auto classes = parse_classes(classes_text);
  if (classes.empty()) throw std::invalid_argument("wilf: no classes given");

  std::vector<std::vector<BigInt>> counts(classes.size());
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (int n = 1; n <= max_n; ++n)
      counts[c].push_back(count_avoiders(n, classes[c], brute_cap));

  bool all_equal = true;
  std::string text;
  if (format == "json") {
    nlohmann::json obj;
    obj["classes"] = nlohmann::json::array();
    for (std::size_t c = 0; c < classes.size(); ++c) {
      nlohmann::json vals = nlohmann::json::array();
      for (const BigInt& v : counts[c]) vals.push_back(v.str());
      obj["classes"].push_back(
          {{"label", class_label(classes[c])}, {"counts", vals}});
    }
    for (std::size_t c = 1; c < classes.size(); ++c)
      if (counts[c] != counts[0]) all_equal = false;
    obj["equivalent"] = all_equal;
    text = obj.dump();
  } else {
    for (std::size_t c = 0; c < classes.size(); ++c) {
      if (c) text += "\n";
      text += class_label(classes[c]) + ":";
      for (const BigInt& v : counts[c]) text += " " + v.str();
    }
    for (int n = 0; n < max_n; ++n) {
      bool eq = true;
      for (std::size_t c = 1; c < classes.size(); ++c)
        eq = eq && counts[c][n] == counts[0][n];
      if (!eq) {
        all_equal = false;
        text += "\nn=" + std::to_string(n + 1) + ": UNEQUAL";
      }
    }
    text += all_equal ? "\nall classes agree" : "\nclasses differ";
  }
  write_out(out, text);
  return all_equal ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pattern-avoiding inversion sequences: counts, statistic "
               "tables, generating-function expansions and identity checks"};
  app.require_subcommand(1);

  CountOptions copt;
  auto* count = app.add_subcommand("count", "Count avoiders of a pattern class");
  count->add_option("--patterns", copt.patterns, "Pattern class, e.g. 0012 or 021,120");
  count->add_option("--n", copt.range, "Length or range, e.g. 4 or 1..8");
  count->add_option("--method", copt.method,
                    "brute|dp|formula|all (all cross-checks and fails on disagreement)");
  count->add_flag("--last-max", copt.last_max, "Count only sequences with last = n-1");
  count->add_option("--format", copt.format, "pretty|csv|json");
  count->add_option("--out", copt.out, "Output file (default stdout)");
  count->add_option("--brute-cap", copt.brute_cap, "Brute-force cap (default 9, max 11)")
      ->check(CLI::Range(1, kMaxBruteCap));

  int table_n = 3;
  std::string table_format = "csv", table_out;
  auto* table = app.add_subcommand("table", "Emit the f_n(k,l) statistic triangle");
  table->add_option("--n", table_n, "Sequence length")->check(CLI::PositiveNumber);
  table->add_option("--format", table_format, "csv|json");
  table->add_option("--out", table_out, "Output file (default stdout)");

  SeriesOptions sopt;
  auto* series = app.add_subcommand("series", "Expand a generating function");
  series->add_option("--which", sopt.which, "L|D|F|F11|sqrt");
  series->add_option("--x", sopt.x, "Rational x, e.g. 2/3");
  series->add_option("--y", sopt.y, "Rational y");
  series->add_option("--order", sopt.order, "Truncation order")
      ->check(CLI::NonNegativeNumber);
  series->add_option("--source", sopt.source, "dp|closed|both");
  series->add_option("--format", sopt.format, "pretty|json");
  series->add_option("--out", sopt.out, "Output file (default stdout)");

  std::string verify_id = "all", verify_out;
  int verify_samples = 0, verify_order = 40;
  auto* verify = app.add_subcommand("verify", "Check generating-function identities");
  verify->add_option("--identity", verify_id,
                     "G-gf|func-G|D-1|D-2|F-x1|F-xy|F-1y|kernel-roots|all");
  verify->add_option("--order", verify_order, "Truncation order")
      ->check(CLI::PositiveNumber);
  verify->add_option("--samples", verify_samples,
                     "Sample values per parameter (default order+3)");
  verify->add_option("--out", verify_out, "Output file (default stdout)");

  std::string wilf_classes = "0012;021,120;102,110;102,120", wilf_format = "pretty",
              wilf_out;
  int wilf_max_n = 8, wilf_cap = kDefaultBruteCap;
  auto* wilf = app.add_subcommand("wilf", "Compare avoidance classes by brute force");
  wilf->add_option("--classes", wilf_classes,
                   "Semicolon-separated classes, commas within a class");
  wilf->add_option("--max-n", wilf_max_n, "Largest length to compare")
      ->check(CLI::Range(1, kMaxBruteCap));
  wilf->add_option("--brute-cap", wilf_cap, "Brute-force cap")
      ->check(CLI::Range(1, kMaxBruteCap));
  wilf->add_option("--format", wilf_format, "pretty|json");
  wilf->add_option("--out", wilf_out, "Output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (count->parsed()) return run_count(copt);
    if (table->parsed()) return run_table(table_n, table_format, table_out);
    if (series->parsed()) return run_series(sopt);
    if (verify->parsed())
      return run_verify(verify_id, verify_samples, verify_order, verify_out);
    if (wilf->parsed())
      return run_wilf(wilf_classes, wilf_max_n, wilf_cap, wilf_format, wilf_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
