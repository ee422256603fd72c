#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "bohrlab/eilenberg.hpp"
#include "bohrlab/errors.hpp"
#include "bohrlab/harmonic.hpp"
#include "bohrlab/majorant.hpp"
#include "bohrlab/radius.hpp"
#include "bohrlab/series.hpp"
#include "bohrlab/verifier.hpp"

namespace bohrlab::cli {

using Json = nlohmann::ordered_json;

namespace {

/// Raised for invalid flag combinations; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void write_json(std::string& out, const Json& j) {
  switch (j.type()) {
    case Json::value_t::object: {
      out += '{';
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ',';
        first = false;
        out += Json(key).dump();
        out += ':';
        write_json(out, value);
      }
      out += '}';
      break;
    }
    case Json::value_t::array: {
      out += '[';
      bool first = true;
      for (const auto& value : j) {
        if (!first) out += ',';
        first = false;
        write_json(out, value);
      }
      out += ']';
      break;
    }
    case Json::value_t::number_float: {
      const double x = j.get<double>();
      out += std::isfinite(x) ? format_real(x) : "null";
      break;
    }
    default:
      out += j.dump();
  }
}

Json coeffs_json(const CoefficientSeries& c) {
  Json arr = Json::array();
  for (const auto& a : c.coeffs()) arr.push_back(Json::array({a.real(), a.imag()}));
  return arr;
}

Json complex_list(const std::vector<Complex>& v) {
  Json arr = Json::array();
  for (const auto& a : v) arr.push_back(Json::array({a.real(), a.imag()}));
  return arr;
}

Json report_json(const VerificationReport& rep) {
  Json params = Json::object();
  for (const auto& [k, v] : rep.params) params[k] = v;
  Json j = {{"claim_id", rep.claim_id},
            {"trials", rep.trials},
            {"failures", rep.failures},
            {"worst_margin", rep.worst_margin},
            {"seed", rep.seed},
            {"params", params}};
  if (rep.replay) {
    j["replay"] = {{"trial", rep.replay->trial},
                   {"trial_seed", rep.replay->trial_seed},
                   {"params", complex_list(rep.replay->params)},
                   {"dilatation_params", complex_list(rep.replay->dilatation_params)}};
  }
  return j;
}

int integral(double x, const char* flag) {
  if (x != std::floor(x) || std::abs(x) > 1e6) {
    throw UsageError(std::string(flag) + " must be an integer");
  }
  return static_cast<int>(x);
}

// Value of an optional flag that a command needs.
double need(const CLI::Option* opt, double value) {
  if (opt->count() == 0) throw UsageError(opt->get_name() + " is required here");
  return value;
}

struct Flags {
  double p = 1.0;
  double r = 0.5;
  double big_r = 1.0;
  double a = 0.0;
  double m = 0.0;
  std::size_t trials = 1000;
  std::size_t depth = kDefaultDepth;
  std::size_t order = kDefaultOrder;
  std::uint64_t seed = 0;
};

// --- radius ---------------------------------------------------------------

int cmd_radius(const std::string& kind, const CLI::Option* p_opt, const CLI::Option* m_opt,
               const Flags& f, std::ostream& out) {
  Json params = Json::object();
  RadiusCertificate cert;
  if (kind == "rp") {
    params["p"] = need(p_opt, f.p);
    cert = powered_radius_rp(f.p);
  } else if (kind == "mp_lower") {
    params["p"] = need(p_opt, f.p);
    cert = {lower_bound_mp(f.p), RadiusMethod::closed_form, 0.0};
  } else if (kind == "psymmetric") {
    const int p = integral(need(p_opt, f.p), "--p");
    const int m = integral(need(m_opt, f.m), "--m");
    params["p"] = p;
    params["m"] = m;
    cert = psymmetric_radius(p, m);
  } else if (kind == "harmonic_p1") {
    cert = harmonic_radius_p1();
  } else if (kind == "be") {
    cert = be_radius();
  } else if (kind == "be_harmonic") {
    params["p"] = need(p_opt, f.p);
    cert = be_harmonic_radius(f.p);
  } else {
    throw UsageError("unknown radius kind '" + kind + "'");
  }
  out << format_json({{"kind", kind},
                      {"params", params},
                      {"radius", cert.radius},
                      {"method", std::string(to_string(cert.method))},
                      {"residual", cert.residual}})
      << '\n';
  return kSuccess;
}

// --- envelope -------------------------------------------------------------

int cmd_envelope(double p, double r_start, double r_end, std::size_t steps, bool doubled,
                 std::ostream& out) {
  if (!(r_start >= 0.0 && r_start <= r_end && r_end < 1.0)) {
    throw UsageError("need 0 <= r-start <= r-end < 1");
  }
  if (steps < 1) throw UsageError("--steps must be at least 1");
  if (!(p > 0.0 && p <= 2.0)) throw UsageError("--p must lie in (0,2]");

  out << "r,value,argmax,exact\n";
  for (std::size_t i = 0; i < steps; ++i) {
    const double r = steps == 1 ? r_start
                                : r_start + (r_end - r_start) * static_cast<double>(i) /
                                                static_cast<double>(steps - 1);
    const auto env = maximize_envelope(p, r, doubled);
    double value = 0.0;
    bool exact = true;
    if (doubled) {
      const auto hb = harmonic_bound(p, r);
      value = hb.value;
      exact = hb.valid;
    } else {
      const auto t = mp_theorem1(p, r);
      value = t.value;
      exact = t.exact;
    }
    out << format_real(r) << ',' << format_real(value) << ',' << format_real(env.argmax) << ','
        << (exact ? 1 : 0) << '\n';
  }
  return kSuccess;
}

// --- verify ---------------------------------------------------------------

int cmd_verify(const std::string& claim, const CLI::Option* p_opt, const CLI::Option* r_opt,
               const Flags& f, std::ostream& out, std::ostream& err) {
  std::vector<VerificationReport> reports;
  if (claim == "theorem1") {
    reports.push_back(
        verify_theorem1(need(p_opt, f.p), need(r_opt, f.r), f.trials, f.order, f.seed, f.depth));
  } else if (claim == "lemma21") {
    reports.push_back(verify_lemma_quadratic(f.trials, f.big_r, f.seed, f.order, f.depth));
  } else if (claim == "theorem2") {
    reports.push_back(
        verify_theorem2(need(p_opt, f.p), need(r_opt, f.r), f.trials, f.seed, f.order, f.depth));
  } else if (claim == "be") {
    const double p = p_opt->count() ? f.p : 1.0;
    auto both = verify_be(need(r_opt, f.r), p, f.trials, f.seed, f.order, f.depth);
    reports.push_back(std::move(both.analytic));
    reports.push_back(std::move(both.harmonic));
  } else if (claim == "theoremB") {
    reports.push_back(verify_theoremB_ratio(need(p_opt, f.p), f.seed));
  } else {
    throw UsageError("unknown claim '" + claim +
                     "' (expected theorem1, lemma21, theorem2, be or theoremB)");
  }

  int code = kSuccess;
  for (const auto& rep : reports) {
    out << format_json(report_json(rep)) << '\n';
    if (!rep.passed()) {
      code = kVerificationFailure;
      err << rep.claim_id << ": " << rep.failures << " failure(s)";
      if (rep.replay) {
        err << "; replay trial " << rep.replay->trial << " with trial seed "
            << rep.replay->trial_seed;
      }
      err << '\n';
    }
  }
  return code;
}

// --- extremal -------------------------------------------------------------

int cmd_extremal(const std::string& family, const CLI::Option* a_opt, const CLI::Option* p_opt,
                 const CLI::Option* m_opt, const CLI::Option* r_opt, const Flags& f,
                 std::size_t order, std::ostream& out) {
  Json params = Json::object();
  CoefficientSeries series;
  double power = 1.0;
  double r = f.r;
  double envelope = 1.0;
  Json extra = Json::object();

  if (family == "mobius") {
    power = p_opt->count() ? f.p : 1.0;
    r = need(r_opt, f.r);
    const double a = a_opt->count() ? f.a : std::min(maximize_envelope(power, r).argmax, 1.0 - 1e-5);
    series = mobius_automorphism_coeffs(a, order);
    envelope = mp_theorem1(power, r).value;
    params = {{"a", a}, {"p", power}, {"r", r}};
  } else if (family == "be") {
    if (p_opt->count() && f.p != 1.0) throw UsageError("the be family is extremal for p = 1 only");
    const double a = a_opt->count() ? f.a : std::sqrt(0.5);
    r = r_opt->count() ? f.r : std::sqrt(0.5);
    series = be_extremal_coeffs(a, order);
    envelope = be_bound(r);
    params = {{"a", a}, {"p", 1.0}, {"r", r}};
  } else if (family == "psymmetric") {
    const int p = integral(need(p_opt, f.p), "--p");
    const int m = integral(need(m_opt, f.m), "--m");
    const double radius = psymmetric_radius(p, m).radius;
    const double a = a_opt->count() ? f.a : psymmetric_extremal_a(p, m);
    if (a >= 1.0) throw UsageError("extremal parameter a = 1 is degenerate for this (p, m)");
    r = r_opt->count() ? f.r : radius;
    series = psymmetric_extremal_coeffs(p, m, a, order);
    params = {{"a", a}, {"p", p}, {"m", m}, {"r", r}};
    extra["radius"] = radius;
  } else {
    throw UsageError("unknown family '" + family + "' (expected mobius, psymmetric or be)");
  }
  params["order"] = order;

  const auto sum = powered_sum(series, power, r);
  Json j = {{"family", family},
            {"params", params},
            {"coeffs", coeffs_json(series)},
            {"powered_sum_lower", sum.lower},
            {"powered_sum_upper", sum.upper},
            {"envelope_value", envelope},
            {"gap", envelope - sum.upper}};
  for (const auto& [k, v] : extra.items()) j[k] = v;
  out << format_json(j) << '\n';
  return kSuccess;
}

// --- table ----------------------------------------------------------------

int cmd_table(std::ostream& out) {
  out << "quantity,value\n";
  auto row = [&](const std::string& name, double value) {
    out << name << ',' << format_real(value) << '\n';
  };
  for (const double p : {1.0, 1.2, 1.5, 1.8, 2.0}) {
    row("r_p[p=" + format_real(p) + "]", powered_radius_rp(p).radius);
  }
  for (const double p : {1.2, 1.5, 1.8}) row("m_p[p=" + format_real(p) + "]", lower_bound_mp(p));
  for (const double p : {1.2, 1.5, 1.8}) {
    row("theorem1_threshold[p=" + format_real(p) + "]", theorem1_threshold(p));
  }
  row("M_1[r=0.5]", maximize_envelope(1.0, 0.5).value);
  row("bombieri[r=0.5]", bombieri_closed_form(0.5));
  row("bombieri_argmax[r=0.5]", bombieri_argmax(0.5));
  row("paulsen_M[r=0.5]", paulsen_majorant(0.5).big_m);
  row("paulsen_m[r=0.5]", paulsen_majorant(0.5).small_m);
  for (const auto& [p, m] : {std::pair{1, 0}, {1, 1}, {2, 0}, {2, 1}, {2, 2}, {3, 1}}) {
    const std::string tag = "[p=" + std::to_string(p) + ",m=" + std::to_string(m) + "]";
    row("r_pm" + tag, psymmetric_radius(p, m).radius);
    row("extremal_a" + tag, psymmetric_extremal_a(p, m));
  }
  for (const int d : {1, 2, 3}) {
    row("blaschke_radius[d=" + std::to_string(d) + ",p=1.5]", blaschke_sharpness_radius(d, 1.5));
  }
  row("harmonic_threshold[p=1]", harmonic_threshold(1.0));
  row("harmonic_radius[p=1]", harmonic_radius_p1().radius);
  row("harmonic_closed_form[r=0.5]", harmonic_closed_form_p1(0.5));
  row("be_radius", be_radius().radius);
  row("be_harmonic_radius[p=1]", be_harmonic_radius(1.0).radius);
  row("be_harmonic_radius[p=2]", be_harmonic_radius(2.0).radius);
  return kSuccess;
}

}  // namespace

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_json(const Json& j) {
  std::string out;
  write_json(out, j);
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Powered Bohr inequality toolkit"};
  app.require_subcommand(1);

  Flags f;

  auto* radius = app.add_subcommand("radius", "Bohr-type radius as JSON");
  std::string kind;
  radius->add_option("--kind", kind, "rp, mp_lower, psymmetric, harmonic_p1, be, be_harmonic")
      ->required();
  auto* radius_p = radius->add_option("--p", f.p, "exponent, or symmetry period for psymmetric");
  auto* radius_m = radius->add_option("--m", f.m, "offset m for psymmetric");

  auto* envelope = app.add_subcommand("envelope", "envelope table as CSV");
  double env_p = 1.0;
  double r_start = 0.0;
  double r_end = 0.0;
  std::size_t steps = 1;
  bool doubled = false;
  envelope->add_option("--p", env_p, "exponent")->required();
  envelope->add_option("--r-start", r_start)->required();
  envelope->add_option("--r-end", r_end)->required();
  envelope->add_option("--steps", steps, "number of grid points")->required();
  envelope->add_flag("--doubled", doubled, "harmonic (doubled) envelope");

  auto* verify = app.add_subcommand("verify", "Monte-Carlo check of a claim, JSON report");
  std::string claim;
  verify->add_option("claim", claim, "theorem1, lemma21, theorem2, be, theoremB")->required();
  auto* verify_p = verify->add_option("--p", f.p);
  auto* verify_r = verify->add_option("--r", f.r);
  verify->add_option("--R", f.big_r, "weight of the quadratic inequality")->capture_default_str();
  verify->add_option("--trials", f.trials)->capture_default_str();
  verify->add_option("--depth", f.depth, "Schur depth of samples")->capture_default_str();
  verify->add_option("--order", f.order, "truncation order")->capture_default_str();
  verify->add_option("--seed", f.seed)->required();

  auto* extremal = app.add_subcommand("extremal", "coefficients and attainment gap of an extremal");
  std::string family;
  std::size_t ext_order = kWitnessOrder;
  extremal->add_option("family", family, "mobius, psymmetric, be")->required();
  auto* ext_a = extremal->add_option("--a", f.a);
  auto* ext_p = extremal->add_option("--p", f.p, "exponent (mobius) or symmetry period (psymmetric)");
  auto* ext_m = extremal->add_option("--m", f.m);
  auto* ext_r = extremal->add_option("--r", f.r);
  extremal->add_option("--order", ext_order)->capture_default_str();

  auto* table = app.add_subcommand("table", "named constants as CSV");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (radius->parsed()) return cmd_radius(kind, radius_p, radius_m, f, out);
    if (envelope->parsed()) return cmd_envelope(env_p, r_start, r_end, steps, doubled, out);
    if (verify->parsed()) return cmd_verify(claim, verify_p, verify_r, f, out, err);
    if (extremal->parsed()) return cmd_extremal(family, ext_a, ext_p, ext_m, ext_r, f, ext_order, out);
    if (table->parsed()) return cmd_table(out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailure;
  }
  return kUsageError;
}

}  // namespace bohrlab::cli
