// Command-line front end: evaluate the library's functions on grids, run
// verification checks singly or as a suite, scan residuals over (alpha, s)
// grids, and inspect zeros tables. All numeric output uses 17 significant
// digits in scientific notation so identical invocations produce identical
// bytes; emitted reports zero their wall_time_ms field for the same reason.
//
// Exit codes: 0 success / all checks passed, 1 verification or data-content
// failure, 2 usage or input error.

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "xiggc/xiggc.hpp"

namespace {

namespace sf = xiggc::specfun;
namespace nc = xiggc::nucore;
namespace nt = xiggc::numtheory;
namespace hs = xiggc::harness;
namespace zr = xiggc::zeros;
namespace sm = xiggc::sampler;

std::string f17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

std::string json_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

// One report in the documented schema, keys in fixed order, floats as %.16e.
// wall_time_ms is zeroed: output bytes must not depend on machine speed.
std::string report_json(const hs::VerificationReport& r, int indent) {
  std::string pad(indent, ' ');
  std::string in2(indent + 2, ' ');
  std::string in4(indent + 4, ' ');
  std::string out = pad + "{\n";
  out += in2 + "\"identity_id\": " + json_quote(std::string(r.identity_id)) + ",\n";
  out += in2 + "\"inputs\": {";
  for (std::size_t i = 0; i < r.inputs.size(); ++i) {
    if (i) out += ",";
    out += "\n" + in4 + json_quote(std::string(r.inputs[i].first)) + ": " +
           f17(r.inputs[i].second);
  }
  out += r.inputs.empty() ? "},\n" : "\n" + in2 + "},\n";
  out += in2 + "\"lhs\": " + f17(r.lhs) + ",\n";
  out += in2 + "\"rhs\": " + f17(r.rhs) + ",\n";
  out += in2 + "\"abs_residual\": " + f17(r.abs_residual) + ",\n";
  out += in2 + "\"rel_residual\": " + f17(r.rel_residual) + ",\n";
  out += in2 + "\"tolerance\": " + f17(r.tolerance) + ",\n";
  out += in2 + std::string("\"passed\": ") + (r.passed ? "true" : "false") + ",\n";
  out += in2 + "\"evaluations\": " + std::to_string(r.evaluations) + ",\n";
  out += in2 + "\"wall_time_ms\": " + f17(0.0) + "\n";
  out += pad + "}";
  return out;
}

std::string reports_json(const std::vector<hs::VerificationReport>& rs) {
  std::string out = "[\n";
  for (std::size_t i = 0; i < rs.size(); ++i) {
    out += report_json(rs[i], 2);
    if (i + 1 < rs.size()) out += ",";
    out += "\n";
  }
  out += "]\n";
  return out;
}

// comma-separated list of numbers; throws invalid_argument on any malformed,
// empty, or non-finite entry
std::vector<double> parse_list(const std::string& spec, const char* what) {
  std::vector<double> out;
  std::string item;
  std::stringstream ss(spec);
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string(what) + ": malformed number '" + item + "'");
    }
    while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
    if (pos != item.size())
      throw std::invalid_argument(std::string(what) + ": malformed number '" + item + "'");
    if (!std::isfinite(v))
      throw std::invalid_argument(std::string(what) + ": non-finite entry");
    out.push_back(v);
  }
  if (out.empty())
    throw std::invalid_argument(std::string(what) + ": empty grid");
  return out;
}

struct Options {
  double alpha = 2.0;
  std::string s_spec;       // scalar or comma list depending on command
  std::string t_spec;
  std::string sigma_spec;
  std::string z_spec;
  double x = 1.0;
  double a = 1.0;
  double b = 2.0;
  std::string tol_spec;
  std::int64_t prime_cutoff = 100000;
  std::string zeros_path;
  std::int64_t n_zeros = 100;
  std::int64_t n_samples = 100000;
  std::uint64_t seed = 20260819;
  std::string out_path;
  std::string format;       // "", "json", "csv"
  std::string component;
  std::string config_path;
};

// flat key=value config; '#' comments and blank lines allowed; keys mirror
// long flag names; unknown keys are input errors
void apply_config(const std::string& path, Options& o) {
  std::ifstream in(path);
  if (!in.is_open())
    throw std::invalid_argument("cannot open config file: " + path);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line " + std::to_string(line_no) +
                                  ": expected key=value");
    std::string key = line.substr(first, eq - first);
    while (!key.empty() && (key.back() == ' ' || key.back() == '\t')) key.pop_back();
    std::string value = line.substr(eq + 1);
    std::size_t vf = value.find_first_not_of(" \t");
    value = (vf == std::string::npos) ? "" : value.substr(vf);
    while (!value.empty() && (value.back() == ' ' || value.back() == '\t'))
      value.pop_back();
    try {
      if (key == "alpha") o.alpha = std::stod(value);
      else if (key == "s") o.s_spec = value;
      else if (key == "t") o.t_spec = value;
      else if (key == "sigma") o.sigma_spec = value;
      else if (key == "z") o.z_spec = value;
      else if (key == "x") o.x = std::stod(value);
      else if (key == "a") o.a = std::stod(value);
      else if (key == "b") o.b = std::stod(value);
      else if (key == "tol") o.tol_spec = value;
      else if (key == "prime-cutoff") o.prime_cutoff = std::stoll(value);
      else if (key == "zeros") o.zeros_path = value;
      else if (key == "n-zeros") o.n_zeros = std::stoll(value);
      else if (key == "n") o.n_samples = std::stoll(value);
      else if (key == "seed") o.seed = std::stoull(value);
      else if (key == "out") o.out_path = value;
      else if (key == "format") o.format = value;
      else if (key == "component") o.component = value;
      else
        throw std::invalid_argument("config line " + std::to_string(line_no) +
                                    ": unknown key '" + key + "'");
    } catch (const std::invalid_argument&) {
      throw;
    } catch (const std::exception&) {
      throw std::invalid_argument("config line " + std::to_string(line_no) +
                                  ": malformed value for '" + key + "'");
    }
  }
}

std::string resolve_zeros_path(const Options& o) {
  if (!o.zeros_path.empty()) return o.zeros_path;
  if (const char* env = std::getenv("XI_GGC_ZEROS"); env && *env) return env;
#ifdef XIGGC_DEFAULT_ZEROS
  return XIGGC_DEFAULT_ZEROS;
#else
  return "data/zeta_zeros_1000.txt";
#endif
}

// stdout unless --out was given
void emit(const Options& o, const std::string& text) {
  if (o.out_path.empty()) {
    std::fputs(text.c_str(), stdout);
    return;
  }
  std::ofstream out(o.out_path, std::ios::binary);
  if (!out.is_open())
    throw std::invalid_argument("cannot open output file: " + o.out_path);
  out << text;
}

std::string pick_format(const Options& o, const char* fallback) {
  if (o.format.empty()) return fallback;
  if (o.format != "json" && o.format != "csv")
    throw std::invalid_argument("format must be json or csv");
  return o.format;
}

// rows of labeled numeric cells rendered as CSV or a JSON array; string cells
// (component names, integer counts) pass through unquoted in CSV
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;  // cells preformatted
  std::vector<bool> is_string;                 // JSON quoting per column

  std::string render(const std::string& format) const {
    std::string out;
    if (format == "csv") {
      for (std::size_t j = 0; j < header.size(); ++j) {
        if (j) out += ',';
        out += header[j];
      }
      out += '\n';
      for (const auto& row : rows) {
        for (std::size_t j = 0; j < row.size(); ++j) {
          if (j) out += ',';
          out += row[j];
        }
        out += '\n';
      }
      return out;
    }
    out = "[\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      out += "  {";
      for (std::size_t j = 0; j < rows[i].size(); ++j) {
        if (j) out += ", ";
        out += json_quote(header[j]) + ": ";
        out += is_string[j] ? json_quote(rows[i][j]) : rows[i][j];
      }
      out += "}";
      if (i + 1 < rows.size()) out += ",";
      out += "\n";
    }
    out += "]\n";
    return out;
  }
};

int run_eval_xi(const Options& o) {
  std::vector<double> grid = parse_list(o.sigma_spec, "--sigma");
  Table t;
  t.header = {"sigma", "value"};
  t.is_string = {false, false};
  for (double sigma : grid)
    t.rows.push_back({f17(sigma), f17(sf::xi_real(sigma))});
  emit(o, t.render(pick_format(o, "csv")));
  return 0;
}

int run_eval_zeta(const Options& o) {
  std::vector<double> grid = parse_list(o.sigma_spec, "--sigma");
  Table t;
  t.header = {"sigma", "value"};
  t.is_string = {false, false};
  for (double sigma : grid)
    t.rows.push_back({f17(sigma), f17(sf::zeta(sigma))});
  emit(o, t.render(pick_format(o, "csv")));
  return 0;
}

int run_eval_nu(const Options& o) {
  std::vector<double> grid = parse_list(o.t_spec, "--t");
  xiggc::TruncationPolicy policy;
  policy.prime_cutoff = o.prime_cutoff;
  Table tab;
  tab.header = {"component", "alpha", "t", "value", "error_bound"};
  tab.is_string = {true, false, false, false, false};
  std::optional<nc::ZetaAtomCache> cache;
  if (o.component == "zeta" || o.component == "xi")
    cache.emplace(o.alpha, policy);
  for (double t : grid) {
    nc::NuValue v{0.0, 0.0};
    if (o.component == "zero") v = {nc::nu_zero(o.alpha, t), 0.0};
    else if (o.component == "gamma") v = nc::nu_gamma(o.alpha, t, policy);
    else if (o.component == "zeta") v = nc::nu_zeta(t, *cache);
    else if (o.component == "xi") v = nc::nu_xi(t, *cache, policy);
    else throw std::invalid_argument("component must be zero, gamma, zeta, or xi");
    tab.rows.push_back({o.component, f17(o.alpha), f17(t), f17(v.value),
                        f17(v.error_bound)});
  }
  emit(o, tab.render(pick_format(o, "csv")));
  return 0;
}

int run_eval_thorin(const Options& o) {
  std::vector<double> grid = parse_list(o.z_spec, "--z");
  xiggc::TruncationPolicy policy;
  policy.prime_cutoff = o.prime_cutoff;
  Table tab;
  tab.header = {"component", "alpha", "z", "value", "error_bound"};
  tab.is_string = {true, false, false, false, false};
  std::optional<xiggc::AtomicMeasure> atoms;
  if (o.component == "zeta")
    atoms = nt::mu_zeta_atoms(o.alpha, o.prime_cutoff);
  else if (o.component != "gamma")
    throw std::invalid_argument("component must be gamma or zeta");
  for (double z : grid) {
    nc::NuValue v = (o.component == "gamma")
                        ? nc::thorin_kernel(o.alpha, z, nc::GammaMeasure{}, policy)
                        : nc::thorin_kernel(o.alpha, z, *atoms);
    tab.rows.push_back({o.component, f17(o.alpha), f17(z), f17(v.value),
                        f17(v.error_bound)});
  }
  emit(o, tab.render(pick_format(o, "csv")));
  return 0;
}

int run_eval_phi(const Options& o) {
  std::vector<double> grid = parse_list(o.s_spec, "--s");
  zr::ZerosTable table = zr::load_zeros(resolve_zeros_path(o));
  xiggc::DiscreteThorinMeasure measure =
      zr::measure_from_zeros(table, o.n_zeros);
  Table tab;
  tab.header = {"s", "n_zeros", "value"};
  tab.is_string = {false, true, false};
  for (double s : grid)
    tab.rows.push_back({f17(s), std::to_string(o.n_zeros),
                        f17(zr::ggc_exponent(measure, s))});
  emit(o, tab.render(pick_format(o, "csv")));
  return 0;
}

double scalar(const std::string& spec, const char* what) {
  std::vector<double> v = parse_list(spec, what);
  if (v.size() != 1)
    throw std::invalid_argument(std::string(what) + ": expected one value");
  return v.front();
}

double tol_or(const Options& o, double fallback) {
  return o.tol_spec.empty() ? fallback : scalar(o.tol_spec, "--tol");
}

int finish_verify(const Options& o, const std::vector<hs::VerificationReport>& reports,
                  bool single) {
  std::string format = pick_format(o, "json");
  if (format != "json")
    throw std::invalid_argument("verify reports are JSON; use --format json");
  std::string text =
      single ? report_json(reports.front(), 0) + "\n" : reports_json(reports);
  emit(o, text);
  for (const auto& r : reports)
    if (!r.passed) return 1;
  return 0;
}

int run_scan(const std::string& identity, const Options& o) {
  xiggc::TruncationPolicy policy;
  policy.prime_cutoff = o.prime_cutoff;

  // per-identity default grids; flags override
  std::vector<double> alphas, shifts;
  double tol = 0.0;
  if (identity == "theorem1") {
    alphas = {1.5, 2.0, 3.0};
    shifts = {0.1, 0.5, 1.0, 2.0};
    tol = tol_or(o, 1e-6);
  } else if (identity == "euler") {
    alphas = {2.0, 2.5, 3.0};
    shifts = {0.5, 1.0};
    tol = tol_or(o, 1e-4);
  } else if (identity == "gamma") {
    alphas = {1.5, 2.0, 3.0};
    shifts = {0.5, 1.0};
    tol = tol_or(o, 1e-8);
  } else if (identity == "nu0") {
    alphas = {1.5, 2.0, 3.0};
    shifts = {0.5, 2.0};
    tol = tol_or(o, 1e-8);
  } else {
    throw std::invalid_argument(
        "scan supports identities theorem1, euler, gamma, nu0");
  }
  if (!o.sigma_spec.empty()) alphas = parse_list(o.sigma_spec, "--alpha-grid");
  if (!o.s_spec.empty()) shifts = parse_list(o.s_spec, "--s-grid");

  std::string out = "alpha,s,lhs,rhs,rel_residual,passed\n";
  bool all_passed = true;
  for (double alpha : alphas) {
    std::optional<nc::ZetaAtomCache> cache;
    if (identity == "theorem1") cache.emplace(alpha, policy);
    for (double s : shifts) {
      hs::VerificationReport r;
      if (identity == "theorem1")
        r = hs::verify_theorem1(alpha, s, policy, tol, &*cache);
      else if (identity == "euler")
        r = hs::verify_euler_ratio(alpha, s, policy, tol);
      else if (identity == "gamma")
        r = hs::verify_gamma_ratio(alpha, s, policy, tol);
      else
        r = hs::verify_nu0_rep(alpha, s, policy, tol);
      all_passed = all_passed && r.passed;
      out += f17(alpha) + "," + f17(s) + "," + f17(r.lhs) + "," + f17(r.rhs) +
             "," + f17(r.rel_residual) + "," + (r.passed ? "true" : "false") +
             "\n";
    }
  }
  if (!o.format.empty() && o.format != "csv")
    throw std::invalid_argument("scan emits CSV; use --format csv");
  emit(o, out);
  return all_passed ? 0 : 1;
}

int run_zeros(const std::string& action, const std::string& positional,
              const Options& o) {
  Options effective = o;
  if (!positional.empty()) effective.zeros_path = positional;
  std::string path = resolve_zeros_path(effective);

  // content violations exit 1 and name the offending line
  zr::ZerosTable table;
  try {
    table = zr::load_zeros(path);
  } catch (const xiggc::ZerosFormatError& e) {
    std::fprintf(stderr, "%s: %s\n", path.c_str(), e.what());
    return 1;
  }

  if (action == "import") {
    std::string out;
    out.reserve(table.ordinates.size() * 24);
    for (double tau : table.ordinates) {
      out += f17(tau);
      out += '\n';
    }
    emit(o, out);
    return 0;
  }

  xiggc::KahanSum inv_sq;
  for (double tau : table.ordinates) inv_sq.add(1.0 / (tau * tau));

  std::string format = pick_format(o, "csv") == "json" ? "json" : "text";
  std::string out;
  if (format == "json") {
    out += "{\n";
    out += "  \"count\": " + std::to_string(table.count()) + ",\n";
    out += "  \"first\": " + f17(table.ordinates.front()) + ",\n";
    out += "  \"last\": " + f17(table.ordinates.back()) + ",\n";
    if (action == "stats") {
      out += "  \"sum_inverse_square\": " + f17(inv_sq.value()) + ",\n";
      out += "  \"tail_after_last\": " +
             f17(zr::inverse_square_tail(table.ordinates.back())) + ",\n";
    }
    out += "  \"ok\": true\n}\n";
  } else {
    out += "count=" + std::to_string(table.count()) + "\n";
    out += "first=" + f17(table.ordinates.front()) + "\n";
    out += "last=" + f17(table.ordinates.back()) + "\n";
    if (action == "stats") {
      out += "sum_inverse_square=" + f17(inv_sq.value()) + "\n";
      out += "tail_after_last=" +
             f17(zr::inverse_square_tail(table.ordinates.back())) + "\n";
    }
    out += "ok\n";
  }
  emit(o, out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;

  // --config is honored before flag parsing so flags keep precedence
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--config") == 0 && i + 1 < argc) {
      o.config_path = argv[i + 1];
    } else if (std::strncmp(argv[i], "--config=", 9) == 0) {
      o.config_path = argv[i] + 9;
    }
  }
  try {
    if (!o.config_path.empty()) apply_config(o.config_path, o);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }

  CLI::App app{"evaluate and verify the completed-zeta ratio representation"};
  app.require_subcommand(1);
  std::string config_sink;
  app.add_option("--config", config_sink,
                 "flat key=value config file (flags take precedence)");

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--tol", o.tol_spec,
                    "residual tolerance (default depends on the check)");
    cmd->add_option("--prime-cutoff", o.prime_cutoff, "prime-power cutoff");
    cmd->add_option("--out", o.out_path, "write output to this file");
    cmd->add_option("--format", o.format, "output format: json or csv");
    cmd->add_option("--config", config_sink, "flat key=value config file");
  };

  // eval
  auto* eval = app.add_subcommand("eval", "evaluate a function over a grid");
  eval->require_subcommand(1);
  auto* eval_xi = eval->add_subcommand("xi", "completed zeta on the real axis");
  eval_xi->add_option("--sigma", o.sigma_spec, "abscissa or comma list");
  add_common(eval_xi);
  auto* eval_zeta = eval->add_subcommand("zeta", "zeta on the real axis (> 1)");
  eval_zeta->add_option("--sigma", o.sigma_spec, "abscissa or comma list");
  add_common(eval_zeta);
  auto* eval_nu = eval->add_subcommand("nu", "Levy density component");
  eval_nu->add_option("--component", o.component, "zero | gamma | zeta | xi");
  eval_nu->add_option("--alpha", o.alpha, "base point, > 1");
  eval_nu->add_option("--t", o.t_spec, "argument or comma list");
  add_common(eval_nu);
  auto* eval_thorin = eval->add_subcommand("thorin", "Thorin kernel density");
  eval_thorin->add_option("--component", o.component, "gamma | zeta");
  eval_thorin->add_option("--alpha", o.alpha, "base point, > 1");
  eval_thorin->add_option("--z", o.z_spec, "argument or comma list");
  add_common(eval_thorin);
  auto* eval_phi = eval->add_subcommand("phi", "GGC exponent of a truncated zeros measure");
  eval_phi->add_option("--s", o.s_spec, "shift or comma list");
  eval_phi->add_option("--zeros", o.zeros_path, "zeros table path");
  eval_phi->add_option("--n,--n-zeros", o.n_zeros, "number of zeros used");
  add_common(eval_phi);

  // verify
  auto* verify = app.add_subcommand("verify", "run a verification check");
  verify->require_subcommand(1);
  auto* v_theorem1 = verify->add_subcommand("theorem1", "ratio-of-xi exponent identity");
  v_theorem1->add_option("--alpha", o.alpha);
  v_theorem1->add_option("--s", o.s_spec);
  add_common(v_theorem1);
  auto* v_euler = verify->add_subcommand("euler", "log zeta ratio vs prime-power sum");
  v_euler->add_option("--alpha", o.alpha);
  v_euler->add_option("--s", o.s_spec);
  add_common(v_euler);
  auto* v_gamma = verify->add_subcommand("gamma", "Gamma ratio vs exponential integral");
  v_gamma->add_option("--alpha", o.alpha);
  v_gamma->add_option("--s", o.s_spec);
  add_common(v_gamma);
  auto* v_nu0 = verify->add_subcommand("nu0", "pole factor vs its exponent form");
  v_nu0->add_option("--alpha", o.alpha);
  v_nu0->add_option("--s", o.s_spec);
  add_common(v_nu0);
  auto* v_bridge = verify->add_subcommand("bridge", "subordination kernel identity");
  v_bridge->add_option("--s", o.s_spec);
  v_bridge->add_option("--x", o.x);
  add_common(v_bridge);
  auto* v_frullani = verify->add_subcommand("frullani", "log ratio as exponential integral");
  v_frullani->add_option("--a", o.a);
  v_frullani->add_option("--b", o.b);
  add_common(v_frullani);
  auto* v_hadamard = verify->add_subcommand("hadamard", "zero product vs xi ratio");
  v_hadamard->add_option("--s", o.s_spec);
  v_hadamard->add_option("--n-zeros", o.n_zeros);
  v_hadamard->add_option("--zeros", o.zeros_path);
  add_common(v_hadamard);
  auto* v_symmetry = verify->add_subcommand("symmetry", "critical-line conjugate symmetry");
  v_symmetry->add_option("--s", o.s_spec, "comma list of ordinates");
  add_common(v_symmetry);
  auto* v_continuation = verify->add_subcommand("continuation", "averaged continuation formula");
  v_continuation->add_option("--alpha", o.alpha);
  v_continuation->add_option("--s", o.s_spec);
  add_common(v_continuation);
  auto* v_sampling = verify->add_subcommand("sampling", "empirical transform vs product");
  v_sampling->add_option("--s", o.s_spec, "comma list of shifts");
  v_sampling->add_option("--n", o.n_samples, "sample count");
  v_sampling->add_option("--n-zeros", o.n_zeros);
  v_sampling->add_option("--zeros", o.zeros_path);
  v_sampling->add_option("--seed", o.seed);
  add_common(v_sampling);
  auto* v_suite = verify->add_subcommand("suite", "all checks over default grids");
  v_suite->add_option("--zeros", o.zeros_path);
  v_suite->add_option("--seed", o.seed);
  add_common(v_suite);

  // scan
  auto* scan = app.add_subcommand("scan", "residual matrix over an (alpha, s) grid");
  std::string scan_identity;
  scan->add_option("identity", scan_identity, "theorem1 | euler | gamma | nu0");
  scan->add_option("--alpha-grid", o.sigma_spec, "comma list of alpha values");
  scan->add_option("--s-grid", o.s_spec, "comma list of shifts");
  add_common(scan);

  // zeros
  auto* zeros = app.add_subcommand("zeros", "zeros table utilities");
  zeros->require_subcommand(1);
  std::string zeros_positional;
  auto* z_validate = zeros->add_subcommand("validate", "parse and summarize a table");
  z_validate->add_option("path", zeros_positional, "zeros table path");
  z_validate->add_option("--zeros", o.zeros_path);
  add_common(z_validate);
  auto* z_stats = zeros->add_subcommand("stats", "summary plus inverse-square mass");
  z_stats->add_option("path", zeros_positional, "zeros table path");
  z_stats->add_option("--zeros", o.zeros_path);
  add_common(z_stats);
  auto* z_import = zeros->add_subcommand("import", "normalize a table to 17-digit lines");
  z_import->add_option("path", zeros_positional, "zeros table path");
  z_import->add_option("--zeros", o.zeros_path);
  add_common(z_import);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    xiggc::TruncationPolicy policy;
    policy.prime_cutoff = o.prime_cutoff;

    if (eval_xi->parsed()) return run_eval_xi(o);
    if (eval_zeta->parsed()) return run_eval_zeta(o);
    if (eval_nu->parsed()) return run_eval_nu(o);
    if (eval_thorin->parsed()) return run_eval_thorin(o);
    if (eval_phi->parsed()) return run_eval_phi(o);

    if (v_theorem1->parsed())
      return finish_verify(
          o, {hs::verify_theorem1(o.alpha, scalar(o.s_spec, "--s"), policy,
                                  tol_or(o, 1e-6))},
          true);
    if (v_euler->parsed())
      return finish_verify(
          o, {hs::verify_euler_ratio(o.alpha, scalar(o.s_spec, "--s"), policy,
                                     tol_or(o, 1e-4))},
          true);
    if (v_gamma->parsed())
      return finish_verify(
          o, {hs::verify_gamma_ratio(o.alpha, scalar(o.s_spec, "--s"), policy,
                                     tol_or(o, 1e-8))},
          true);
    if (v_nu0->parsed())
      return finish_verify(
          o, {hs::verify_nu0_rep(o.alpha, scalar(o.s_spec, "--s"), policy,
                                 tol_or(o, 1e-8))},
          true);
    if (v_bridge->parsed())
      return finish_verify(
          o, {hs::verify_bridge(scalar(o.s_spec, "--s"), o.x,
                                tol_or(o, 1e-8))},
          true);
    if (v_frullani->parsed())
      return finish_verify(o, {hs::verify_frullani(o.a, o.b, tol_or(o, 1e-8))},
                           true);
    if (v_hadamard->parsed()) {
      zr::ZerosTable table = zr::load_zeros(resolve_zeros_path(o));
      return finish_verify(
          o, {hs::verify_hadamard(scalar(o.s_spec, "--s"), o.n_zeros, table,
                                  tol_or(o, 1e-3))},
          true);
    }
    if (v_symmetry->parsed()) {
      std::vector<double> grid = o.s_spec.empty()
                                     ? std::vector<double>{1.0, 3.0, 7.0, 14.1347}
                                     : parse_list(o.s_spec, "--s");
      return finish_verify(o, {hs::verify_symmetry(grid, tol_or(o, 1e-10))},
                           true);
    }
    if (v_continuation->parsed())
      return finish_verify(
          o, {hs::verify_continuation(o.alpha, scalar(o.s_spec, "--s"), policy,
                                      tol_or(o, 1e-5))},
          true);
    if (v_sampling->parsed()) {
      zr::ZerosTable table = zr::load_zeros(resolve_zeros_path(o));
      std::vector<double> grid = o.s_spec.empty()
                                     ? xiggc::geometric_grid(0.25, 4.0, 20)
                                     : parse_list(o.s_spec, "--s");
      return finish_verify(o,
                           {hs::verify_sampling(table, o.n_zeros, o.n_samples,
                                                grid, o.seed)},
                           true);
    }
    if (v_suite->parsed()) {
      zr::ZerosTable table = zr::load_zeros(resolve_zeros_path(o));
      return finish_verify(o, hs::run_suite(policy, table, o.seed), false);
    }

    if (scan->parsed()) return run_scan(scan_identity, o);

    if (z_validate->parsed()) return run_zeros("validate", zeros_positional, o);
    if (z_stats->parsed()) return run_zeros("stats", zeros_positional, o);
    if (z_import->parsed()) return run_zeros("import", zeros_positional, o);

    std::fprintf(stderr, "error: no command selected\n");
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
