// Acceptance gate: one line per criterion, exit status = number of failures.
// Usage: acceptance <path-to-cli-binary>

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "booth/classes.hpp"
#include "booth/disc.hpp"
#include "booth/oracles.hpp"
#include "booth/region.hpp"

using namespace booth;

namespace {

std::string g_cli;

struct RunResult {
  std::string out;
  int code = -1;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = g_cli + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {};
  std::string out;
  char buf[4096];
  size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  return {out, WIFEXITED(status) ? WEXITSTATUS(status) : -1};
}

bool check(bool ok, bool* all) {
  *all = *all && ok;
  return ok;
}

// 1. Discs centered at the anchor: radii 1/(1+alpha) and 1/(1-alpha).
bool centered_anchor_radii() {
  bool ok = true;
  for (int i = 0; i <= 9; ++i) {
    const double alpha = 0.1 * i;
    const RegionParam p(alpha);
    const CenterParam c(p, 1.0);
    check(std::abs(inscribed_radius(p, c) - 1.0 / (1 + alpha)) <= 1e-12, &ok);
    check(std::abs(circumscribed_radius(p, c) - 1.0 / (1 - alpha)) <= 1e-12,
          &ok);
  }
  return ok;
}

// 2. Off-center radii against the brute-force profile oracles, all three
//    case branches exercised, plus seam continuity at both case boundaries.
bool off_center_radii_vs_oracle() {
  bool ok = true;
  for (int i = 1; i <= 9; ++i) {
    const double alpha = 0.1 * i;
    const RegionParam p(alpha);
    const CaseThresholds t = case_thresholds(p);
    const double lo = (1 - 2 * alpha) / (2 - 2 * alpha);
    const double hi = (3 - 2 * alpha) / (2 - 2 * alpha);

    std::vector<double> centers;
    for (int k = 1; k <= 26; ++k) centers.push_back(lo + (hi - lo) * k / 27.0);
    // The outer branches can occupy slivers of the admissible interval, so
    // force representatives into each.
    centers.push_back(lo + (t.alpha1 - lo) / 3);
    centers.push_back(lo + 2 * (t.alpha1 - lo) / 3);
    centers.push_back(t.alpha1_tilde + (hi - t.alpha1_tilde) / 3);
    centers.push_back(t.alpha1_tilde + 2 * (hi - t.alpha1_tilde) / 3);

    for (double a : centers) {
      const CenterParam c(p, a);
      check(std::abs(oracle_inscribed(p, c) - inscribed_radius(p, c)) <= 1e-8,
            &ok);
      check(std::abs(oracle_circumscribed(p, c) - circumscribed_radius(p, c)) <=
                1e-8,
            &ok);
    }

    const CenterParam seam_lo(p, t.alpha1), seam_hi(p, t.alpha1_tilde);
    check(std::abs(std::sqrt(s_value(p, seam_lo)) -
                   (t.alpha1 - 1 + 1.0 / (1 - alpha))) <= 1e-9,
          &ok);
    check(std::abs(std::sqrt(s_value(p, seam_hi)) -
                   (1 - t.alpha1_tilde + 1.0 / (1 - alpha))) <= 1e-9,
          &ok);
  }
  return ok;
}

// 3. Starlike-order radii against the containment bisection oracle, and
//    agreement of the two formula branches at the dispatch seam.
bool starlike_order_vs_oracle() {
  bool ok = true;
  for (double alpha : {0.0, 0.1, 0.3, 0.5, 0.7, 0.9}) {
    const RegionParam p(alpha);
    for (int i = 0; i <= 9; ++i) {
      const FunctionClass cls = FunctionClass::starlike_order(0.1 * i);
      check(std::abs(bs_radius(cls, p).value - oracle_bs_radius(cls, p)) <=
                1e-6,
            &ok);
    }
  }
  for (double alpha : {0.2, 0.5, 0.8}) {
    const RegionParam p(alpha);
    const double beta0 = (9 * alpha - 1) / (8 * alpha);
    const double sqrt_side =
        2 * std::sqrt(alpha) /
        ((1 + alpha) * std::sqrt(1 + 16 * alpha * (1 - beta0) * (1 - beta0)));
    const double rational_side = 1 / (1 + 2 * (1 - alpha) * (1 - beta0));
    check(std::abs(sqrt_side - rational_side) <= 1e-12, &ok);
    if (alpha == 0.5) {
      check(std::abs(rational_side - 0.888888888888889) <= 1e-12, &ok);
      check(std::abs(bs_radius(FunctionClass::starlike_order(beta0), p).value -
                     rational_side) <= 1e-12,
            &ok);
    }
  }
  return ok;
}

// 4. Starlike at the branch-collapse parameter, and convex as order 1/2.
bool starlike_and_convex_identities() {
  bool ok = true;
  const double alpha = 1.0 / 9.0;
  const double sqrt_side =
      2 * std::sqrt(alpha) / ((1 + alpha) * std::sqrt(1 + 16 * alpha));
  const double rational_side = 1 / (3 - 2 * alpha);
  check(std::abs(sqrt_side - 0.36) <= 1e-12, &ok);
  check(std::abs(rational_side - 0.36) <= 1e-12, &ok);
  check(std::abs(bs_radius(FunctionClass::starlike(), RegionParam(alpha)).value -
                 0.36) <= 1e-12,
        &ok);
  for (double a : {0.0, 0.2, 0.4, 0.6, 0.8}) {
    const RegionParam p(a);
    check(bs_radius(FunctionClass::convex(), p).value ==
              bs_radius(FunctionClass::starlike_order(0.5), p).value,
          &ok);
  }
  return ok;
}

// 5. The m-class family against the oracle, with a subordination sandwich
//    bracketing every computed radius.
bool m_class_vs_oracle() {
  bool ok = true;
  for (int i = 1; i <= 9; ++i) {
    const RegionParam p(0.1 * i);
    for (int j = 0; j <= 5; ++j) {
      const FunctionClass cls = FunctionClass::m_class(1.05 + 0.05 * j);
      const double r = bs_radius(cls, p).value;
      check(std::abs(r - oracle_bs_radius(cls, p)) <= 1e-6, &ok);
      check(subordination_check(cls, p, 0.999 * r, 4096).inside, &ok);
      check(!subordination_check(cls, p, std::min(1.001 * r, 0.99999), 4096)
                 .inside,
            &ok);
    }
  }
  return ok;
}

// 6. Janowski radii: unclamped values against the oracle; clamped cases
//    must keep the whole disc subordinate.
bool janowski_vs_oracle() {
  bool ok = true;
  for (double alpha : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    const RegionParam p(alpha);
    for (double A : {-0.5, 0.0, 0.25, 0.5, 0.75, 1.0}) {
      for (double B : {-0.75, -0.5, -0.25, 0.0, 0.25, 0.5}) {
        if (!(B < A)) continue;
        const FunctionClass cls = FunctionClass::janowski(A, B);
        const RadiusResult r = bs_radius(cls, p);
        if (r.clamped) {
          check(subordination_check(cls, p, 0.999, 4096).inside, &ok);
        } else {
          check(std::abs(r.value - oracle_bs_radius(cls, p)) <= 1e-6, &ok);
        }
      }
    }
  }
  return ok;
}

// 7. The sufficient inclusion test never overclaims: whenever it holds, the
//    computed radius is 1 and the extremal image stays inside at r = 0.999.
bool inclusion_coherence() {
  bool ok = true;
  for (double alpha : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    const RegionParam p(alpha);
    for (int ia = 0; ia < 20; ++ia) {
      const double A = -0.95 + 1.95 * ia / 19.0;
      for (int ib = 0; ib < 20; ++ib) {
        const double B = -0.95 + 1.9 * ib / 19.0;
        if (!(B < A)) continue;
        if (!inclusion_holds(p, A, B).holds) continue;
        const FunctionClass cls = FunctionClass::janowski(A, B);
        check(bs_radius(cls, p).value == 1.0, &ok);
        check(subordination_check(cls, p, 0.999, 2048).inside, &ok);
      }
    }
  }
  return ok;
}

// 8. The Fournier parameter beta = alpha/(1+alpha) fills the whole disc.
bool fournier_whole_disc() {
  bool ok = true;
  for (int i = 1; i <= 9; ++i) {
    const double alpha = 0.1 * i;
    const RadiusResult r = bs_radius(
        FunctionClass::fournier(alpha / (1 + alpha)), RegionParam(alpha));
    check(r.value == 1.0, &ok);
    check(r.clamped, &ok);
  }
  return ok;
}

// 9. Tangency evidence at the starlike radius: the analytic touch abscissa,
//    the sweep minimum, and a near-zero boundary margin all line up.
bool sharpness_evidence() {
  bool ok = true;
  const RegionParam p(0.5);
  const double r = bs_radius(FunctionClass::starlike(), p).value;
  const SharpnessWitness w = sharpness_witness(FunctionClass::starlike(), p, r);
  check(w.witnessed, &ok);
  check(std::abs(w.x0 - 0.3535533905932738) <= 1e-12, &ok);
  check(std::abs(w.margin) <= 1e-7, &ok);
  check(std::abs(w.sweep_x - w.x0) <= 1e-4, &ok);
  return ok;
}

// 10. CLI contract: pinned byte-stable outputs, deterministic reruns, and
//     the documented exit codes.
bool cli_contract() {
  bool ok = true;

  const std::string radius_cmd = "radius --class starlike --alpha 0.5 --format json";
  const std::string radius_golden =
      "{\"schema_version\":\"1\",\"command\":\"radius\",\"class\":\"starlike\","
      "\"alpha\":0.5,\"radius\":0.314269680527,\"branch\":\"rho0\","
      "\"clamped\":false,\"status\":\"ok\"}\n";
  const std::string inscribed_cmd = "inscribed --alpha 0.5 --center 1 --format text";
  const std::string inscribed_golden = "r_a = 0.666666666667  R_a = 2.000000000000\n";
  const std::string inclusion_cmd = "inclusion --alpha 0.5 --A 0.1 --B -0.1 --format json";
  const std::string inclusion_golden =
      "{\"schema_version\":\"1\",\"command\":\"inclusion\",\"alpha\":0.5,"
      "\"A\":0.1,\"B\":-0.1,\"holds\":true,\"via_condition\":\"i\","
      "\"status\":\"ok\"}\n";

  const std::pair<std::string, std::string> pinned[] = {
      {radius_cmd, radius_golden},
      {inscribed_cmd, inscribed_golden},
      {inclusion_cmd, inclusion_golden}};
  for (const auto& [cmd, golden] : pinned) {
    const RunResult a = run_cli(cmd);
    const RunResult b = run_cli(cmd);
    check(a.code == 0, &ok);
    check(a.out == golden, &ok);
    check(b.out == a.out, &ok);
  }

  const RunResult bad = run_cli("radius --class janowski --A 1.5 --B -0.5 --alpha 0.5");
  check(bad.code == 2, &ok);
  check(bad.out.find("A") != std::string::npos, &ok);

  const RunResult strict =
      run_cli("verify --class starlike --alpha 0.5 --tolerance 1e-16");
  check(strict.code == 1, &ok);

  return ok;
}

struct Criterion {
  const char* label;
  bool (*fn)();
};

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: acceptance <cli-binary>\n");
    return 64;
  }
  g_cli = argv[1];

  const Criterion criteria[] = {
      {"centered disc radii match the closed forms", centered_anchor_radii},
      {"off-center radii certified by the profile oracles",
       off_center_radii_vs_oracle},
      {"starlike-order radii certified by the containment oracle",
       starlike_order_vs_oracle},
      {"starlike branch collapse and the convex identity",
       starlike_and_convex_identities},
      {"m-class radii certified and bracketed by subordination",
       m_class_vs_oracle},
      {"janowski radii certified or verified as whole-disc",
       janowski_vs_oracle},
      {"inclusion test coherent with radii and subordination",
       inclusion_coherence},
      {"fournier whole-disc parameter clamps exactly", fournier_whole_disc},
      {"tangency witness at the starlike radius", sharpness_evidence},
      {"command-line contract: bytes, determinism, exit codes", cli_contract},
  };

  int failures = 0;
  int index = 0;
  for (const Criterion& c : criteria) {
    ++index;
    bool ok = false;
    try {
      ok = c.fn();
    } catch (const std::exception& e) {
      std::printf("[FAIL] %2d %s (exception: %s)\n", index, c.label, e.what());
      ++failures;
      continue;
    }
    std::printf("[%s] %2d %s\n", ok ? "PASS" : "FAIL", index, c.label);
    failures += ok ? 0 : 1;
  }
  return failures;
}
