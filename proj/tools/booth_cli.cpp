// Command-line front end: closed-form radii, membership geometry, and
// oracle-backed verification for the Booth oval region.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "booth/classes.hpp"
#include "booth/disc.hpp"
#include "booth/format.hpp"
#include "booth/oracles.hpp"
#include "booth/region.hpp"

namespace {

using namespace booth;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

// Ordered, compact JSON writer. Field order is fixed by call order and
// numbers go through fmt_sig, so identical inputs give identical bytes.
class Doc {
 public:
  explicit Doc(const std::string& command) {
    str("schema_version", "1");
    str("command", command);
  }

  Doc& str(const std::string& key, std::string_view value) {
    sep_key(key);
    buf_ += '"';
    buf_ += value;
    buf_ += '"';
    return *this;
  }
  Doc& num(const std::string& key, double value) {
    sep_key(key);
    buf_ += fmt_sig(value);
    return *this;
  }
  Doc& integer(const std::string& key, long value) {
    sep_key(key);
    buf_ += std::to_string(value);
    return *this;
  }
  Doc& boolean(const std::string& key, bool value) {
    sep_key(key);
    buf_ += value ? "true" : "false";
    return *this;
  }
  Doc& raw(const std::string& key, const std::string& json) {
    sep_key(key);
    buf_ += json;
    return *this;
  }
  std::string close() const { return buf_ + "}"; }

 private:
  void sep_key(const std::string& key) {
    buf_ += first_ ? "" : ",";
    first_ = false;
    buf_ += '"' + key + "\":";
  }
  std::string buf_ = "{";
  bool first_ = true;
};

struct ClassSpec {
  std::string name;
  std::optional<double> beta;
  std::optional<double> A;
  std::optional<double> B;
};

void require_param(bool present, const char* param, const std::string& cls,
                   bool wanted) {
  if (wanted && !present) {
    throw domain_error(param, "class '" + cls + "' requires --" + param);
  }
  if (!wanted && present) {
    throw domain_error(param,
                       "--" + std::string(param) + " does not apply to class '" +
                           cls + "'");
  }
}

FunctionClass build_class(const ClassSpec& spec) {
  const std::string& n = spec.name;
  const bool has_beta = spec.beta.has_value();
  const bool has_A = spec.A.has_value();
  const bool has_B = spec.B.has_value();
  if (n == "janowski") {
    require_param(has_A, "A", n, true);
    require_param(has_B, "B", n, true);
    require_param(has_beta, "beta", n, false);
    return FunctionClass::janowski(*spec.A, *spec.B);
  }
  require_param(has_A, "A", n, false);
  require_param(has_B, "B", n, false);
  if (n == "starlike" || n == "convex") {
    require_param(has_beta, "beta", n, false);
    return n == "starlike" ? FunctionClass::starlike()
                           : FunctionClass::convex();
  }
  require_param(has_beta, "beta", n, true);
  if (n == "starlike-order") return FunctionClass::starlike_order(*spec.beta);
  if (n == "m-class") return FunctionClass::m_class(*spec.beta);
  if (n == "parvatham") return FunctionClass::parvatham(*spec.beta);
  if (n == "fournier") return FunctionClass::fournier(*spec.beta);
  throw domain_error("class", "unknown class '" + n + "'");
}

Doc& echo_class(Doc& doc, const FunctionClass& cls, const ClassSpec& spec) {
  doc.str("class", cls.name());
  if (spec.beta) doc.num("beta", *spec.beta);
  if (spec.A) doc.num("A", *spec.A);
  if (spec.B) doc.num("B", *spec.B);
  return doc;
}

void check_format(const std::string& format, bool csv_allowed) {
  if (format == "text" || format == "json") return;
  if (format == "csv" && csv_allowed) return;
  throw domain_error("format", "format '" + format +
                                   "' is not supported by this subcommand");
}

void emit(const std::string& s) { std::fputs(s.c_str(), stdout); }

int cmd_radius(double alpha, const ClassSpec& spec, const std::string& format) {
  check_format(format, false);
  const RegionParam param(alpha);
  const FunctionClass cls = build_class(spec);
  const RadiusResult res = bs_radius(cls, param);
  if (format == "json") {
    Doc doc("radius");
    echo_class(doc, cls, spec).num("alpha", alpha);
    doc.num("radius", res.value)
        .str("branch", branch_name(res.branch))
        .boolean("clamped", res.clamped)
        .str("status", "ok");
    emit(doc.close() + "\n");
  } else {
    emit("radius = " + fmt_fixed(res.value) +
         "  branch = " + std::string(branch_name(res.branch)) +
         "  clamped = " + (res.clamped ? "true" : "false") + "\n");
  }
  return kExitOk;
}

int cmd_inscribed(double alpha, double center, const std::string& format) {
  check_format(format, false);
  const RegionParam param(alpha);
  const CenterParam c(param, center);
  const double r = inscribed_radius(param, c);
  const double R = circumscribed_radius(param, c);
  if (format == "json") {
    Doc doc("inscribed");
    doc.num("alpha", alpha)
        .num("center", center)
        .num("r_a", r)
        .num("R_a", R)
        .str("status", "ok");
    emit(doc.close() + "\n");
  } else {
    emit("r_a = " + fmt_fixed(r) + "  R_a = " + fmt_fixed(R) + "\n");
  }
  return kExitOk;
}

int cmd_inclusion(double alpha, double A, double B, const std::string& format) {
  check_format(format, false);
  const RegionParam param(alpha);
  const InclusionVerdict v = inclusion_holds(param, A, B);
  const char* via = v.via
                        ? (*v.via == InclusionCondition::i ? "i" : "ii")
                        : nullptr;
  if (format == "json") {
    Doc doc("inclusion");
    doc.num("alpha", alpha).num("A", A).num("B", B).boolean("holds", v.holds);
    if (via) doc.str("via_condition", via);
    doc.str("status", "ok");
    emit(doc.close() + "\n");
  } else {
    emit(v.holds ? "holds = true  via = " + std::string(via) + "\n"
                 : std::string("holds = false\n"));
  }
  return kExitOk;
}

std::string report_json(const ContainmentReport& rep) {
  std::string s = "{\"closed_form\":" + fmt_sig(rep.closed_form) +
                  ",\"oracle\":" + fmt_sig(rep.oracle) +
                  ",\"abs_gap\":" + fmt_sig(rep.abs_gap);
  if (rep.touch_parameter) s += ",\"touch_x\":" + fmt_sig(*rep.touch_parameter);
  s += std::string(",\"verdict\":\"") +
       (rep.verdict == Verdict::pass ? "pass" : "fail") + "\"}";
  return s;
}

std::string report_text(const char* label, const ContainmentReport& rep) {
  return std::string(label) + ": closed_form = " + fmt_fixed(rep.closed_form) +
         "  oracle = " + fmt_fixed(rep.oracle) +
         "  abs_gap = " + fmt_sig(rep.abs_gap) + "  verdict = " +
         (rep.verdict == Verdict::pass ? "pass" : "fail") + "\n";
}

int cmd_verify_lemma(double alpha, double center, double tolerance,
                     const std::string& format) {
  const RegionParam param(alpha);
  const CenterParam c(param, center);
  const ContainmentReport ins = verify_inscribed(param, c, tolerance);
  const ContainmentReport circ = verify_circumscribed(param, c, tolerance);
  const bool ok =
      ins.verdict == Verdict::pass && circ.verdict == Verdict::pass;
  if (format == "json") {
    Doc doc("verify");
    doc.str("subject", "lemma")
        .num("alpha", alpha)
        .num("center", center)
        .num("tolerance", tolerance)
        .raw("inscribed", report_json(ins))
        .raw("circumscribed", report_json(circ))
        .str("status", ok ? "ok" : "fail");
    emit(doc.close() + "\n");
  } else {
    emit(report_text("inscribed", ins) + report_text("circumscribed", circ) +
         "status = " + (ok ? "ok" : "fail") + "\n");
  }
  return ok ? kExitOk : kExitFail;
}

std::string witness_json(const SharpnessWitness& w) {
  return "{\"x0\":" + fmt_sig(w.x0) + ",\"t_star\":" + fmt_sig(w.t_star) +
         ",\"margin\":" + fmt_sig(w.margin) +
         ",\"sweep_x\":" + fmt_sig(w.sweep_x) +
         ",\"sweep_abs_margin\":" + fmt_sig(w.sweep_abs_margin) +
         ",\"witnessed\":" + (w.witnessed ? "true" : "false") + "}";
}

int cmd_verify_class(double alpha, const ClassSpec& spec, double tolerance,
                     int samples, const std::string& format) {
  const RegionParam param(alpha);
  const FunctionClass cls = build_class(spec);
  const RadiusResult res = bs_radius(cls, param);
  const ContainmentReport rep = verify_bs_radius(cls, param, tolerance);
  const bool ok = rep.verdict == Verdict::pass;

  std::optional<SharpnessWitness> witness;
  std::optional<SubordinationResult> subord;
  if (res.clamped) {
    subord = subordination_check(cls, param, 0.999, samples);
  } else {
    witness = sharpness_witness(cls, param, res.value);
  }

  if (format == "json") {
    Doc doc("verify");
    doc.str("subject", "bs_radius");
    echo_class(doc, cls, spec).num("alpha", alpha);
    doc.num("tolerance", tolerance)
        .num("closed_form", rep.closed_form)
        .num("oracle", rep.oracle)
        .num("abs_gap", rep.abs_gap)
        .str("branch", branch_name(res.branch))
        .boolean("clamped", res.clamped);
    if (witness) doc.raw("sharpness", witness_json(*witness));
    if (subord) {
      doc.raw("subordination",
              "{\"r\":" + fmt_sig(0.999) +
                  ",\"inside\":" + (subord->inside ? "true" : "false") +
                  ",\"worst_margin\":" + fmt_sig(subord->worst_margin) + "}");
    }
    doc.str("status", ok ? "ok" : "fail");
    emit(doc.close() + "\n");
  } else {
    emit("closed_form = " + fmt_fixed(rep.closed_form) +
         "  oracle = " + fmt_fixed(rep.oracle) +
         "  abs_gap = " + fmt_sig(rep.abs_gap) +
         "  tolerance = " + fmt_sig(rep.tolerance) +
         "  status = " + (ok ? "ok" : "fail") + "\n");
  }
  return ok ? kExitOk : kExitFail;
}

int cmd_sharpness(double alpha, const ClassSpec& spec,
                  std::optional<double> radius_override, int samples,
                  const std::string& format) {
  check_format(format, false);
  const RegionParam param(alpha);
  const FunctionClass cls = build_class(spec);
  double r;
  if (radius_override) {
    r = *radius_override;
  } else {
    const RadiusResult res = bs_radius(cls, param);
    if (res.clamped) {
      throw domain_error("radius-override",
                         "the closed-form radius is clamped at 1; pass "
                         "--radius-override r < 1 to probe tangency");
    }
    r = res.value;
  }
  const SharpnessWitness w = sharpness_witness(cls, param, r, samples);
  if (format == "json") {
    Doc doc("sharpness");
    echo_class(doc, cls, spec).num("alpha", alpha);
    doc.num("radius", r)
        .num("x0", w.x0)
        .num("t_star", w.t_star)
        .num("margin", w.margin)
        .num("sweep_x", w.sweep_x)
        .num("sweep_abs_margin", w.sweep_abs_margin)
        .boolean("witnessed", w.witnessed)
        .str("status", w.witnessed ? "ok" : "fail");
    emit(doc.close() + "\n");
  } else {
    emit("x0 = " + fmt_fixed(w.x0) + "  t_star = " + fmt_fixed(w.t_star) +
         "  margin = " + fmt_sig(w.margin) +
         "  sweep_x = " + fmt_fixed(w.sweep_x) +
         "  witnessed = " + (w.witnessed ? "true" : "false") + "\n");
  }
  return w.witnessed ? kExitOk : kExitFail;
}

int cmd_boundary(double alpha, int samples, const std::string& format) {
  const RegionParam param(alpha);
  const auto pts = boundary_polyline(param, samples);
  const double two_pi = 2.0 * 3.14159265358979323846;
  if (format == "json") {
    std::string arr = "[";
    for (int k = 0; k < samples; ++k) {
      if (k) arr += ",";
      arr += "{\"t\":" + fmt_sig(two_pi * k / samples) +
             ",\"u\":" + fmt_sig(pts[k].real()) +
             ",\"v\":" + fmt_sig(pts[k].imag()) + "}";
    }
    arr += "]";
    Doc doc("boundary");
    doc.num("alpha", alpha)
        .integer("samples", samples)
        .raw("points", arr)
        .str("status", "ok");
    emit(doc.close() + "\n");
  } else {
    std::string out = "t,u,v\n";
    for (int k = 0; k < samples; ++k) {
      out += fmt_sig(two_pi * k / samples) + "," + fmt_sig(pts[k].real()) +
             "," + fmt_sig(pts[k].imag()) + "\n";
    }
    emit(out);
  }
  return kExitOk;
}

void emit_error(const std::string& command, const std::string& format,
                const std::string& parameter, const std::string& message) {
  if (format == "json") {
    Doc doc(command);
    doc.str("status", "error").str("parameter", parameter).str("message",
                                                               message);
    emit(doc.close() + "\n");
  } else {
    std::fputs(("error: parameter " + parameter + ": " + message + "\n").c_str(),
               stderr);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Booth oval radii: closed forms with geometric verification"};
  app.require_subcommand(1);

  double alpha = 0.0;
  double center = 1.0;
  double A = 0.0, B = 0.0;
  double tolerance = -1.0;
  std::optional<double> radius_override;
  int samples = 0;
  std::string format = "text";
  ClassSpec spec;

  auto add_common = [&](CLI::App* sub, bool with_class) {
    sub->add_option("--alpha", alpha, "region parameter in [0, 1)")
        ->required();
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->default_str("text");
    if (with_class) {
      sub->add_option("--class", spec.name, "function class")
          ->check(CLI::IsMember({"starlike-order", "starlike", "convex",
                                 "m-class", "janowski", "parvatham",
                                 "fournier"}));
      sub->add_option("--beta", [&spec](const CLI::results_t& r) {
        spec.beta = std::stod(r[0]);
        return true;
      }, "order/shape parameter of the class");
      sub->add_option("--A", [&spec](const CLI::results_t& r) {
        spec.A = std::stod(r[0]);
        return true;
      }, "Janowski numerator coefficient");
      sub->add_option("--B", [&spec](const CLI::results_t& r) {
        spec.B = std::stod(r[0]);
        return true;
      }, "Janowski denominator coefficient");
    }
  };

  CLI::App* radius = app.add_subcommand("radius", "closed-form class radius");
  add_common(radius, true);
  radius->get_option("--class")->required();

  CLI::App* inscribed = app.add_subcommand(
      "inscribed", "largest/smallest centered disc radii");
  add_common(inscribed, false);
  inscribed->add_option("--center", center, "real disc center a")->required();

  CLI::App* inclusion =
      app.add_subcommand("inclusion", "sufficient whole-class inclusion test");
  add_common(inclusion, false);
  inclusion->add_option("--A", A, "Janowski numerator coefficient")
      ->required();
  inclusion->add_option("--B", B, "Janowski denominator coefficient")
      ->required();

  CLI::App* verify =
      app.add_subcommand("verify", "closed form vs brute-force oracle");
  add_common(verify, true);
  bool has_center = false;
  verify->add_option("--center", [&](const CLI::results_t& r) {
    center = std::stod(r[0]);
    has_center = true;
    return true;
  }, "real disc center a (verifies the disc radii instead of a class)");
  verify->add_option("--tolerance", tolerance, "pass/fail gap tolerance");
  verify->add_option("--samples", samples, "subordination sample count");

  CLI::App* sharpness =
      app.add_subcommand("sharpness", "boundary tangency witness");
  add_common(sharpness, true);
  sharpness->get_option("--class")->required();
  sharpness->add_option("--radius-override", [&](const CLI::results_t& r) {
    radius_override = std::stod(r[0]);
    return true;
  }, "probe tangency at this radius instead of the closed form");
  sharpness->add_option("--samples", samples, "sweep sample count");

  CLI::App* boundary =
      app.add_subcommand("boundary", "sample the region boundary");
  add_common(boundary, false);
  boundary->add_option("--samples", samples, "number of samples (>= 8)")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (radius->parsed()) return cmd_radius(alpha, spec, format);
    if (inscribed->parsed()) return cmd_inscribed(alpha, center, format);
    if (inclusion->parsed()) return cmd_inclusion(alpha, A, B, format);
    if (verify->parsed()) {
      check_format(format, false);
      const bool has_class = !spec.name.empty();
      if (has_center == has_class) {
        throw booth::domain_error(
            "subject", "verify needs exactly one of --center or --class");
      }
      if (has_center) {
        return cmd_verify_lemma(alpha, center,
                                tolerance > 0 ? tolerance : 1e-8, format);
      }
      return cmd_verify_class(alpha, spec, tolerance > 0 ? tolerance : 1e-6,
                              samples > 0 ? samples : 4096, format);
    }
    if (sharpness->parsed()) {
      return cmd_sharpness(alpha, spec, radius_override,
                           samples > 0 ? samples : 8192, format);
    }
    if (boundary->parsed()) {
      check_format(format, true);
      return cmd_boundary(alpha, samples, format);
    }
  } catch (const booth::domain_error& e) {
    emit_error(command, format, e.parameter(), e.what());
    return kExitInput;
  } catch (const std::exception& e) {
    emit_error(command, format, "internal", e.what());
    return kExitFail;
  }
  return kExitInput;
}
