// One PASS/FAIL line per acceptance criterion. Exit status 1 if any line fails.

#include "qctw/suites.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace qctw;

namespace {

constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(const CheckReport& r, int n) {
    if (r.status == CheckStatus::fail) {
      ok = false;
      detail += " [" + r.name + " n=" + std::to_string(n) + ": " + r.counterexample.value_or("failed") + "]";
    }
  }
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail += " [" + what + "]";
    }
  }
};

struct Criterion {
  const char* id;
  const char* what;
  double budget_s;  ///< 0: no runtime bound
  std::function<Outcome()> run;
};

Outcome ac1() {
  Outcome o;
  for (int n = 1; n <= 3; ++n) o.require(checks::phi_minus1_closed_form(n, 1000, kSeed), n);
  return o;
}

Outcome ac2() {
  Outcome o;
  for (int n = 1; n <= 3; ++n) {
    o.require(checks::homomorphism(n, 500, kSeed), n);
    o.require(checks::filtration(n, 500, kSeed), n);
  }
  return o;
}

Outcome ac3() {
  Outcome o;
  for (int n = 1; n <= 3; ++n) {
    o.require(checks::grading_structure(n), n);
    o.require(checks::grading_laws(n, 200, kSeed), n);
  }
  return o;
}

Outcome ac4() {
  Outcome o;
  for (int n = 1; n <= 3; ++n) o.require(checks::reeb_tuples(n, 100, kSeed), n);
  return o;
}

Outcome ac5() {
  Outcome o;
  for (int n = 1; n <= 3; ++n) o.require(checks::stabilizer(n, 500, kSeed), n);
  return o;
}

Outcome ac6() {
  Outcome o;
  for (int n = 1; n <= 3; ++n) o.require(checks::ad_conjugation(n, 100, kSeed), n);
  return o;
}

Outcome ac7() {
  Outcome o;
  for (int n = 1; n <= 3; ++n) o.require(checks::flat_definitions(n), n);
  const CheckReport d = checks::duchemin(1);
  o.require(d, 1);
  o.require(d.status == CheckStatus::pass, "duchemin n=1 not run");
  return o;
}

Outcome ac8() {
  Outcome o;
  ModelConfig cfg;
  cfg.fd_step = 1e-5;
  cfg.eig_floor = 1e-8;
  cfg.residual_tol = 1e-6;
  const std::pair<int, std::size_t> runs[] = {{1, 100}, {2, 25}};
  for (const auto& [n, count] : runs) {
    const auto samples = sample_model(n, count, kSeed, cfg);
    const LeviSignature sig = levi_signature(samples);
    o.require(checks::levi(n, samples, cfg), n);
    o.require(sig.positive == 4 * n + 2 && sig.negative == 2, "signature n=" + std::to_string(n));
    o.require(checks::integrability(n, samples, cfg), n);
    o.require(checks::perturbation_probe(n, count, kSeed, cfg, 0.1, 1e-3), n);
    char buf[128];
    std::snprintf(buf, sizeof buf, " n=%d: (%d,%d) min|eig|=%.3g residual=%.2g;", n, sig.positive, sig.negative,
                  sig.min_abs_eig, integrability_residual(samples));
    o.detail += buf;
  }
  return o;
}

Outcome ac9() {
  Outcome o;
  SuiteConfig cfg;
  cfg.n = 2;
  cfg.seed = kSeed;
  cfg.trials = 25;
  const std::string a = to_json(run_all_suites(cfg));
  const std::string b = to_json(run_all_suites(cfg));
  o.require(a == b, "reports differ");
  o.detail += " " + std::to_string(a.size()) + " bytes";
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"AC1", "closed-form phi_-1 = proj o phi, 1000/grade, n=1..3, exact", 30, ac1},
      {"AC2", "homomorphism and filtration, 500 trials, n=1..3, exact", 0, ac2},
      {"AC3", "grading laws and component dimensions, n=1..3, exact", 0, ac3},
      {"AC4", "Reeb value tuples and j0 action, 100 trials, exact", 0, ac4},
      {"AC5", "stabilizer of C d0 is R+ U(1) Sp(n), 500 trials, exact", 0, ac5},
      {"AC6", "Ad(g_I^-1) sends the rotated Reeb directions to -j, -k, 100 trials, exact", 0, ac6},
      {"AC7", "flat model identities n=1..3 and Duchemin n=1, exact", 60, ac7},
      {"AC8", "Levi signature (4n+2,2) min|eig|>1e-8 h=1e-5, residual<1e-6, probe(eps=0.1)>1e-3", 300, ac8},
      {"AC9", "byte-identical JSON for identical configs", 0, ac9},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o = c.run();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_s > 0 && secs >= c.budget_s) o.require(false, "over " + std::to_string(int(c.budget_s)) + " s");
    if (!o.ok) ++failures;
    std::printf("%s %s  %s  (%.2f s)%s\n", c.id, o.ok ? "PASS" : "FAIL", c.what, secs, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", int(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
