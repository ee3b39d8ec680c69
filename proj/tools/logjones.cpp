// Command-line front end.
//
//   logjones jones --braid "3: 1 -2 1 -2" --m 2
//   logjones loginv --knot 4_1 --N 3
//   logjones volume-scan --N 200 --format csv --out scan.csv

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "logjones/error.hpp"
#include "logjones/habiro/habiro.hpp"
#include "logjones/jones/jones.hpp"
#include "logjones/loginv/loginv.hpp"
#include "logjones/qcalc/qsymbols.hpp"
#include "logjones/qgroup/qgroup.hpp"
#include "logjones/volume/volume.hpp"

namespace {

using namespace logjones;
using json = nlohmann::ordered_json;
using qcalc::ComplexHP;
using qcalc::Real;

constexpr int kExitConfig = 2;
constexpr int kExitFeasibility = 3;
constexpr int kExitDisagreement = 4;
constexpr int kMaxVerifyN = 8;
constexpr int kGuardDigits = 10;

struct JobConfig {
  std::string command;
  std::string knot;
  std::string braid;
  std::optional<int> N, s, m;
  int precision = qcalc::kDefaultPrecisionDigits;
  std::string format = "json";
  std::string out;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class Disagreement : public Error {
 public:
  using Error::Error;
};

// Shortest of fixed or scientific notation, as with %g.
std::string decimal(const Real& x, int digits) { return x == 0 ? std::string("0") : x.str(digits); }

// Components below the comparison tolerance are rounding noise and print as 0.
json complex_json(const ComplexHP& z, const qcalc::RootContext& ctx) {
  const int digits = ctx.precision_digits() - kGuardDigits;
  const Real floor = ctx.tolerance() * (1 + z.abs());
  auto part = [&](const Real& x) { return boost::multiprecision::abs(x) <= floor ? std::string("0") : decimal(x, digits); };
  return json{{"re", part(z.re)}, {"im", part(z.im)}};
}

json vector_json(const std::vector<ComplexHP>& v, const qcalc::RootContext& ctx, bool dummy_zero) {
  json arr = json::array();
  for (std::size_t k = 0; k < v.size(); ++k) arr.push_back(dummy_zero && k == 0 ? json(nullptr) : complex_json(v[k], ctx));
  return arr;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

std::string number(double x) {
  if (std::isinf(x)) return x < 0 ? "-inf" : "inf";
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

int require(const std::optional<int>& v, const char* flag) {
  if (!v) throw ConfigError(std::string("missing required flag ") + flag);
  return *v;
}

std::string knot_label(const JobConfig& cfg) { return cfg.braid.empty() ? cfg.knot : cfg.braid; }

// Catalog knots use their Habiro data; braids need exact traces up to `colors`.
loginv::KnotSource knot_source(const JobConfig& cfg, int colors) {
  if (!cfg.knot.empty()) return loginv::KnotSource::catalog(cfg.knot);
  if (cfg.braid.empty()) throw ConfigError("one of --knot or --braid is required");
  if (colors > loginv::KnotSource::kMaxBraidColor)
    throw FeasibilityError("this job needs V_m of a braid up to m = " + std::to_string(colors) +
                           "; the limit is " + std::to_string(loginv::KnotSource::kMaxBraidColor));
  return loginv::KnotSource::from_braid(jones::parse_braid(cfg.braid), colors);
}

void write_csv_row(std::ostream& os, const std::vector<std::string>& cells) {
  for (std::size_t k = 0; k < cells.size(); ++k) os << (k ? "," : "") << csv_quote(cells[k]);
  os << "\n";
}

void run_jones(const JobConfig& cfg, std::ostream& os) {
  const loginv::KnotSource src = !cfg.knot.empty() ? loginv::KnotSource::catalog(cfg.knot) : [&] {
    if (cfg.braid.empty()) throw ConfigError("one of --knot or --braid is required");
    const jones::BraidWord b = jones::parse_braid(cfg.braid);
    return loginv::KnotSource::from_braid(b, 0);
  }();
  int lo = 1, hi = cfg.N.value_or(3);
  if (cfg.m) lo = hi = *cfg.m;
  if (lo < 1 || hi < 1) throw ConfigError("colors must be >= 1");

  if (cfg.format == "csv") {
    write_csv_row(os, {"m", "polynomial"});
    for (int m = lo; m <= hi; ++m) write_csv_row(os, {std::to_string(m), src.V(m).to_string()});
    return;
  }
  json values = json::array();
  for (int m = lo; m <= hi; ++m) {
    const qcalc::LaurentPoly& v = src.V(m);
    values.push_back({{"m", m}, {"polynomial", v.to_string()}, {"palindromic", v.is_palindromic()}});
  }
  os << json{{"command", "jones"}, {"knot", knot_label(cfg)}, {"framing", 0}, {"variable", "q"}, {"values", values}}.dump(2)
     << "\n";
}

void run_habiro(const JobConfig& cfg, std::ostream& os) {
  const int terms = cfg.m.value_or(6);
  if (terms < 1) throw ConfigError("--m must be >= 1");
  habiro::HabiroCoeffs h;
  std::vector<qcalc::LaurentPoly> values;
  if (!cfg.knot.empty() && cfg.braid.empty()) {
    h = habiro::catalog_coeffs(cfg.knot, terms - 1);
  } else {
    const loginv::KnotSource src = knot_source(cfg, terms);
    for (int m = 1; m <= terms; ++m) values.push_back(src.V(m));
    h = habiro::extract_coeffs(values, src.name());
  }
  bool exact = true;
  for (std::size_t k = 0; k < values.size(); ++k)
    exact = exact && habiro::reconstruct_Vm(h, static_cast<int>(k) + 1) == values[k];

  if (cfg.format == "csv") {
    write_csv_row(os, {"i", "a_i"});
    for (int i = 0; i <= h.i_max(); ++i) write_csv_row(os, {std::to_string(i), h.coeffs[i].to_string()});
    return;
  }
  json coeffs = json::array();
  for (int i = 0; i <= h.i_max(); ++i) coeffs.push_back({{"i", i}, {"a", h.coeffs[i].to_string()}});
  json out{{"command", "habiro"}, {"knot", knot_label(cfg)}, {"source", h.catalog ? "catalog" : "extracted"},
           {"coefficients", coeffs}};
  if (!values.empty()) out["reconstruction_exact"] = exact;
  os << out.dump(2) << "\n";
}

void run_loginv(const JobConfig& cfg, std::ostream& os) {
  const int N = require(cfg.N, "--N");
  if (N < 2) throw ConfigError("--N must be >= 2");
  const loginv::KnotSource src = knot_source(cfg, 2 * N);
  const qcalc::RootContext ctx(N, cfg.precision);

  const loginv::CenterCoeffs cc = loginv::center_coeffs(src, ctx, loginv::Route::HABIRO);
  json routes = json::object();
  Real worst(0);
  for (loginv::Route r : {loginv::Route::QDERIV, loginv::Route::HABIRO, loginv::Route::MDERIV}) {
    std::vector<ComplexHP> g(static_cast<std::size_t>(N + 1));
    for (int s = 1; s < N; ++s) {
      if (cfg.s && s != *cfg.s) continue;
      g[s] = loginv::gamma_s(src, s, r, ctx);
      worst = std::max(worst, Real((g[s] - cc.gamma[s]).abs() / (1 + cc.gamma[s].abs())));
    }
    json arr = json::array();
    for (int s = 1; s < N; ++s)
      if (!cfg.s || s == *cfg.s) arr.push_back({{"s", s}, {"gamma", complex_json(g[s], ctx)}});
    routes[loginv::route_name(r)] = arr;
  }
  const bool agree = worst <= ctx.tolerance();

  if (cfg.format == "csv") {
    write_csv_row(os, {"quantity", "s", "re", "im"});
    auto rows = [&](const char* name, const std::vector<ComplexHP>& v, int from, int to) {
      for (int s = from; s <= to; ++s) {
        if (cfg.s && s != *cfg.s) continue;
        const json z = complex_json(v[s], ctx);
        write_csv_row(os, {name, std::to_string(s), z["re"], z["im"]});
      }
    };
    rows("idem", cc.idem, 0, N);
    rows("rad_plus", cc.rad_plus, 1, N - 1);
    rows("rad_minus", cc.rad_minus, 1, N - 1);
    rows("alpha", cc.alpha, 1, N - 1);
    rows("beta", cc.beta, 1, N - 1);
    rows("gamma", cc.gamma, 0, N);
  } else {
    json out{{"command", "loginv"},
             {"knot", knot_label(cfg)},
             {"N", N},
             {"precision", ctx.precision_digits()},
             {"framing", cc.framing},
             {"idem", vector_json(cc.idem, ctx, false)},
             {"rad_plus", vector_json(cc.rad_plus, ctx, true)},
             {"rad_minus", vector_json(cc.rad_minus, ctx, true)},
             {"alpha", vector_json(cc.alpha, ctx, true)},
             {"beta", vector_json(cc.beta, ctx, true)},
             {"gamma", vector_json(cc.gamma, ctx, false)},
             {"routes", routes},
             {"max_route_delta", decimal(worst, 6)},
             {"routes_agree", agree}};
    os << out.dump(2) << "\n";
  }
  if (!agree) throw Disagreement("gamma routes disagree by " + decimal(worst, 6));
}

void run_qgroup_verify(const JobConfig& cfg, std::ostream& os) {
  const int N = require(cfg.N, "--N");
  if (N < 2) throw ConfigError("--N must be >= 2");
  if (N > kMaxVerifyN) throw FeasibilityError("qgroup-verify is limited to N <= " + std::to_string(kMaxVerifyN));
  const qcalc::RootContext ctx(N, cfg.precision);
  std::vector<qgroup::CheckResult> checks = qgroup::structure_checks(ctx);
  for (auto& c : qgroup::center_action_check(ctx)) checks.push_back(std::move(c));

  if (cfg.format == "csv") {
    write_csv_row(os, {"check", "parameters", "residual", "pass"});
    for (const auto& c : checks) write_csv_row(os, {c.check, c.parameters, decimal(c.residual, 6), c.pass ? "true" : "false"});
    return;
  }
  json rows = json::array();
  bool all = true;
  for (const auto& c : checks) {
    rows.push_back({{"check", c.check}, {"parameters", c.parameters}, {"residual", decimal(c.residual, 6)}, {"pass", c.pass}});
    all = all && c.pass;
  }
  os << json{{"command", "qgroup-verify"}, {"N", N}, {"precision", ctx.precision_digits()}, {"all_pass", all}, {"checks", rows}}
            .dump(2)
     << "\n";
}

void run_volume_scan(const JobConfig& cfg, std::ostream& os) {
  const int N = require(cfg.N, "--N");
  if (N < 2) throw ConfigError("--N must be >= 2");
  const volume::ScanResult scan = volume::asymptotic_scan(N);
  if (cfg.format == "csv") {
    write_csv_row(os, {"N", "s", "alpha", "log_gamma_scaled", "vol_reference", "region_label"});
    for (const auto& r : scan.rows)
      write_csv_row(os, {std::to_string(N), std::to_string(r.s), number(r.alpha), number(r.log_gamma_scaled),
                         number(r.vol_reference), r.region});
    return;
  }
  auto finite = [](double x) { return std::isinf(x) ? json(nullptr) : json(x); };
  json rows = json::array();
  for (const auto& r : scan.rows)
    rows.push_back({{"s", r.s},
                    {"alpha", r.alpha},
                    {"log_gamma_scaled", finite(r.log_gamma_scaled)},
                    {"log_gamma_scaled_mirror", finite(r.log_gamma_scaled_mirror)},
                    {"gamma_zero", r.gamma_zero},
                    {"vol_reference", r.vol_reference},
                    {"region_label", r.region}});
  os << json{{"command", "volume-scan"}, {"N", N}, {"working_digits", scan.digits}, {"rows", rows}}.dump(2) << "\n";
}

void run(const JobConfig& cfg, std::ostream& os) {
  if (!cfg.knot.empty() && !cfg.braid.empty()) throw ConfigError("--knot and --braid are mutually exclusive");
  if (cfg.command == "jones") return run_jones(cfg, os);
  if (cfg.command == "habiro") return run_habiro(cfg, os);
  if (cfg.command == "loginv") return run_loginv(cfg, os);
  if (cfg.command == "qgroup-verify") return run_qgroup_verify(cfg, os);
  if (cfg.command == "volume-scan") return run_volume_scan(cfg, os);
  throw ConfigError("unknown command " + cfg.command);
}

int precision_from_env() {
  const char* env = std::getenv("LOGJONES_PRECISION");
  if (!env || !*env) return qcalc::kDefaultPrecisionDigits;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0') throw ConfigError(std::string("LOGJONES_PRECISION is not an integer: ") + env);
  return static_cast<int>(v);
}

}  // namespace

int main(int argc, char** argv) {
  JobConfig cfg;
  try {
    cfg.precision = precision_from_env();
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }

  CLI::App app{"Logarithmic knot invariants at roots of unity"};
  app.require_subcommand(1);
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"jones", "colored Jones polynomials V_m at framing 0"},
      {"habiro", "Habiro coefficients a_i from the catalog or from braid traces"},
      {"loginv", "center coefficients with all gamma routes"},
      {"qgroup-verify", "representation checks at the root of unity"},
      {"volume-scan", "(2pi/N) log|gamma_s| of the figure-eight knot for all s"}};
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--knot", cfg.knot, "catalog knot: unknot, 3_1, 4_1");
    sub->add_option("--braid", cfg.braid, "braid word, e.g. \"3: 1 -2 1 -2\"");
    sub->add_option("--N", cfg.N, "order of the root of unity");
    sub->add_option("--s", cfg.s, "restrict to one index s");
    sub->add_option("--m", cfg.m, "color (jones) or number of terms (habiro)");
    sub->add_option("--precision", cfg.precision, "working digits (default 60 or LOGJONES_PRECISION)");
    sub->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", cfg.out, "output file (default stdout)");
    sub->callback([&cfg, name = name] { cfg.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  std::ostringstream buffer;
  int status = 0;
  try {
    if (cfg.precision < qcalc::kMinPrecisionDigits)
      throw ConfigError("precision must be >= " + std::to_string(qcalc::kMinPrecisionDigits));
    run(cfg, buffer);
  } catch (const Disagreement& e) {
    std::cerr << "route disagreement: " << e.what() << "\n";
    status = kExitDisagreement;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const NotAKnot& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const FeasibilityError& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kExitFeasibility;
  } catch (const RouteUnavailable& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kExitFeasibility;
  }

  if (cfg.out.empty() || cfg.out == "-") {
    std::cout << buffer.str();
  } else {
    std::ofstream file(cfg.out, std::ios::binary);
    if (!(file << buffer.str())) {
      std::cerr << "error: cannot write " << cfg.out << "\n";
      return kExitConfig;
    }
  }
  return status;
}
