#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <thread>

#include <unistd.h>

#include "fibercone/depth.hpp"
#include "fibercone/sweep.hpp"

using namespace fibercone;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

// Ideals from criteria 1-5 with the degree through which J is known.
struct Known {
  std::string label;
  MonomialIdeal ideal;
  std::vector<JGenerator> gens;
  int degree;
};
std::vector<Known> known;

std::vector<JGenerator> gens(std::initializer_list<const char*> texts) {
  std::vector<JGenerator> out;
  for (const char* t : texts) out.push_back(parse_generator(t, 4));
  return out;
}

std::string join(const std::vector<std::int64_t>& v) {
  std::string out;
  for (auto x : v) out += (out.empty() ? "" : ",") + std::to_string(x);
  return "(" + out + ")";
}

std::string triple(std::int64_t a, std::int64_t b, std::int64_t c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

Outcome criterion1() {
  Outcome o;
  struct Case {
    std::int64_t a, b, c;
    int degree;
    std::vector<JGenerator> want;
  };
  std::vector<Case> cases = {
      {2, 3, 4, 4, gens({"z2*z3", "z2^2", "z3^2"})},
      {2, 9, 10, 8, gens({"z2*z3", "z2^5", "z3^5", "z1*z3^4", "z2^4*z4"})},
      {3, 8, 10, 6, gens({"z2*z3", "z2^3", "z3^3", "z1*z3^2 - z2^2*z4"})},
      {2, 29, 30, 20,
       gens({"z2*z3", "z2^15", "z3^15", "z1^9*z3^10 - z2^10*z4^9", "z1*z3^14", "z2^14*z4", "z1^3*z3^13",
             "z2^13*z4^3", "z1^5*z3^12", "z2^12*z4^5", "z1^7*z3^11", "z2^11*z4^7"})},
  };
  double worst = 0;
  for (const auto& c : cases) {
    auto t0 = Clock::now();
    KernelReport rep = compute_j(symmetric_ideal(c.a, c.b, c.c), c.degree);
    double t = seconds_since(t0);
    worst = std::max(worst, t);
    if (!same_generator_set(rep.generators(), c.want)) o.fail(triple(c.a, c.b, c.c) + " generators differ");
    if (t >= 10) o.fail(triple(c.a, c.b, c.c) + " took too long");
    known.push_back({"example " + triple(c.a, c.b, c.c), rep.ideal, rep.generators(), c.degree});
  }
  if (o.pass) o.detail = "4 exact generator sets (3, 5, 4, 12), slowest " + std::to_string(worst) + " s";
  return o;
}

Outcome criterion2() {
  Outcome o;
  MonomialIdeal intro = parse_ideal("25,0;20,5;19,19;5,20;0,25");
  TruncationEvidence ev;
  KernelReport rep = compute_stable_kernel(intro, 40, &ev);
  Ring ring = Ring::fiber(5);
  Polynomial witness;
  bool zero = is_depth_zero(to_polynomials(rep.generators(), ring), ring, &witness);
  if (rep.stability_window < kMinStabilityWindow) o.fail("stability window " + std::to_string(rep.stability_window));
  if (!ev.sufficient) o.fail("truncation evidence insufficient: " + ev.detail);
  if (!zero) o.fail("socle test found no witness");
  if (o.pass)
    o.detail = "D = " + std::to_string(rep.degree_bound) + ", window " + std::to_string(rep.stability_window) +
               ", mu(J) = " + std::to_string(rep.mu()) + ", socle witness " + format_polynomial(witness, ring);
  known.push_back({"five-generator ideal", intro, rep.generators(), rep.degree_bound});
  return o;
}

std::vector<Classification> symmetric_grid;

Outcome criterion3() {
  Outcome o;
  std::size_t count = 0, cm = 0;
  for (std::int64_t c = 3; c <= 15; ++c)
    for (std::int64_t b = 2; b < c; ++b)
      for (std::int64_t a = 1; a < b; ++a) {
        if (std::gcd(std::gcd(a, b), c) != 1 || a + b == c) continue;
        ++count;
        Classification cl = certify(classify_symmetric(a, b, c));
        if (!cl.certification.certified()) {
          o.fail(triple(a, b, c) + " " + certification_label(cl.certification));
          continue;
        }
        DepthCertificate d = depth(cl);
        const bool case_i = cl.case_tag == "i";
        const bool three = cl.predicted.size() == 3;
        if (d.depth != 1 && d.depth != 2) o.fail(triple(a, b, c) + " depth " + std::to_string(d.depth));
        if ((d.depth == 2) != case_i || case_i != three) o.fail(triple(a, b, c) + " depth/case/mu disagree");
        cm += d.depth == 2;
        known.push_back({"symmetric " + triple(a, b, c), cl.ideal, cl.predicted, cl.certification.degree});
        symmetric_grid.push_back(std::move(cl));
      }
  if (o.pass)
    o.detail = std::to_string(count) + " ideals certified, " + std::to_string(cm) + " Cohen-Macaulay (case i, mu(J) = 3)";
  return o;
}

Outcome criterion4() {
  Outcome o;
  std::size_t count = 0;
  for (int n = 2; n <= 3; ++n) {
    std::vector<std::int64_t> a(std::size_t(n), 2), b(std::size_t(n), 1);
    while (true) {
      ++count;
      std::int64_t den = 1;
      for (auto x : a) den = std::lcm(den, x);
      std::int64_t num = 0;
      for (std::size_t i = 0; i < a.size(); ++i) num += b[i] * (den / a[i]);
      HalfspaceClass want = num > den ? HalfspaceClass::HPlus : num < den ? HalfspaceClass::HMinus : HalfspaceClass::OnH;
      Classification cl = certify(classify_hypersurface(a, b));
      std::string label = "a = " + join(a) + ", b = " + join(b);
      if (cl.halfspace != want) o.fail(label + " wrong half space");
      if (!cl.certification.certified()) o.fail(label + " " + certification_label(cl.certification));
      if (cl.predicted.size() != 1) o.fail(label + " mu(J) != 1");
      if (cl.certification.certified())
        known.push_back({"hypersurface " + label, cl.ideal, cl.predicted, cl.certification.degree});
      // Next (a, b) with 2 <= a_i <= 6 and 0 < b_i < a_i.
      std::size_t i = 0;
      for (; i < a.size(); ++i) {
        if (++b[i] < a[i]) break;
        b[i] = 1;
        if (++a[i] <= 6) break;
        a[i] = 2;
      }
      if (i == a.size()) break;
    }
  }
  if (o.pass) o.detail = std::to_string(count) + " ideals certified, mu(J) = 1, half spaces exact";
  return o;
}

Outcome criterion5() {
  Outcome o;
  std::size_t count = 0, binomial = 0;
  for (std::int64_t a = 2; a <= 5; ++a)
    for (std::int64_t b = a; b <= 5; ++b)
      for (std::int64_t c = 1; c < a; ++c)
        for (std::int64_t d = b + 1; d < 2 * b; ++d) {
          if (std::gcd(a, c) != 1 || std::gcd(b, d) != 1) continue;
          ++count;
          std::string label = "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "," +
                              std::to_string(d) + ")";
          Classification cl = certify(classify_ci(a, b, c, d));
          if (!cl.certification.certified()) {
            o.fail(label + " " + certification_label(cl.certification));
            continue;
          }
          if (cl.predicted.size() != 2) o.fail(label + " mu(J) != 2");
          DepthCertificate dc = depth(cl);
          if (dc.depth != 2) o.fail(label + " depth " + std::to_string(dc.depth));
          if (b * c + a * d == 2 * a * b) {
            ++binomial;
            const auto& u = cl.ideal.gens();
            auto i = cl.param("i"), j = cl.param("j");
            if (!i || !j || *i + *j > a) {
              o.fail(label + " missing exponents i, j");
            } else if (u[2].pow(a) != u[0].pow(*i) * u[1].pow(*j) * u[3].pow(a - *i - *j)) {
              o.fail(label + " binomial identity fails");
            }
          }
          known.push_back({"ci " + label, cl.ideal, cl.predicted, cl.certification.degree});
        }
  if (o.pass)
    o.detail = std::to_string(count) + " ideals certified, mu(J) = 2, depth 2; " + std::to_string(binomial) +
               " balanced identities exact";
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::size_t checks = 0;
  for (const auto& k : known) {
    Ring ring = Ring::fiber(k.ideal.size());
    auto ini = k.gens.empty() ? std::vector<ZMonomial>{} : initial_ideal(buchberger(k.gens, ring));
    auto mu = mu_power_sequence(k.ideal, k.degree);
    for (int d = 1; d <= k.degree; ++d) {
      ++checks;
      if (standard_monomial_count(ini, k.ideal.size(), d) != mu[std::size_t(d - 1)]) {
        o.fail(k.label + " degree " + std::to_string(d));
        break;
      }
    }
  }
  if (o.pass) o.detail = std::to_string(known.size()) + " ideals, " + std::to_string(checks) + " degrees, zero exceptions";
  return o;
}

Outcome criterion7() {
  Outcome o;
  Ring base = Ring::fiber(4);
  Ring lex = base.with_order(parse_order("lex:z1>z2>z3>z4", base));
  auto j = compute_j(symmetric_ideal(3, 8, 10), 6).generators();
  std::vector<ZMonomial> want{{0, 1, 1, 0}, {0, 3, 0, 0}, {0, 0, 3, 0}, {1, 0, 2, 0}};
  std::sort(want.begin(), want.end(), std::greater<>());
  if (initial_ideal(buchberger(j, lex)) != want) o.fail("(3,8,10) initial ideal differs");
  if (!is_groebner_basis(to_polynomials(j, lex), lex)) o.fail("(3,8,10) generators are not a basis");

  Ring rev = base.with_order(parse_order("lex:z3>z2>z1>z4", base));
  std::vector<Polynomial> ci{parse_polynomial("z2^2 - z1*z4", rev), parse_polynomial("z3^3 - z1*z4^2", rev)};
  GroebnerBasis gb = buchberger(ci, rev);
  bool own = gb.elements.size() == 2 && std::all_of(ci.begin(), ci.end(), [&](const Polynomial& p) {
               return std::find(gb.elements.begin(), gb.elements.end(), p.monic(rev)) != gb.elements.end();
             });
  std::vector<ZMonomial> want_ci{{0, 0, 3, 0}, {0, 2, 0, 0}};
  std::sort(want_ci.begin(), want_ci.end(), std::greater<>());
  if (!own) o.fail("(3,3,2,4) generators are not their own reduced basis");
  if (initial_ideal(gb) != want_ci) o.fail("(3,3,2,4) initial ideal differs");
  if (o.pass) o.detail = "ini = (z2*z3, z2^3, z3^3, z1*z3^2); reduced basis with ini = (z2^2, z3^3)";
  return o;
}

Outcome criterion8() {
  Outcome o;
  for (const auto& cl : symmetric_grid) {
    auto mu = mu_power_sequence(cl.ideal, 6);
    if (!std::is_sorted(mu.begin(), mu.end())) o.fail(format_ideal(cl.ideal) + " decreases");
  }
  if (o.pass) o.detail = std::to_string(symmetric_grid.size()) + " ideals nondecreasing through k = 6";
  return o;
}

Outcome criterion9() {
  Outcome o;
  std::mt19937_64 rng(20240521);
  std::uniform_int_distribution<int> mu_dist(2, 5), exp_dist(0, 12);
  std::size_t degrees = 0;
  for (int trial = 0; trial < 200; ++trial) {
    int mu = mu_dist(rng);
    std::set<int> xs, ys;
    while (int(xs.size()) < mu) xs.insert(exp_dist(rng));
    while (int(ys.size()) < mu) ys.insert(exp_dist(rng));
    std::vector<int> xv(xs.rbegin(), xs.rend()), yv(ys.begin(), ys.end());
    std::vector<ExponentVector> g;
    for (int i = 0; i < mu; ++i) g.push_back({xv[std::size_t(i)], yv[std::size_t(i)]});
    MonomialIdeal ideal{g};
    KernelReport rep = compute_j(ideal, 8);
    std::vector<JGenerator> below;
    for (int k = 2; k <= 8; ++k) {
      ++degrees;
      auto it = rep.generators_by_degree.find(k);
      std::vector<JGenerator> at = it == rep.generators_by_degree.end() ? std::vector<JGenerator>{} : it->second;
      if (!rank_cross_check(ideal, k, below, at)) o.fail(format_ideal(ideal) + " degree " + std::to_string(k));
      below.insert(below.end(), at.begin(), at.end());
    }
  }
  if (o.pass) o.detail = "200 random ideals, " + std::to_string(degrees) + " degrees, zero disagreements";
  return o;
}

void criterion10(const fs::path& store) {
  auto t0 = Clock::now();
  SweepSpec spec;
  spec.family = SweepFamily::General4Gen;
  spec.ranges["a"] = {3, 10};
  spec.ranges["b"] = {3, 10};
  int jobs = int(std::max(1u, std::thread::hardware_concurrency()));
  SweepSummary summary = run_sweep(spec, store, jobs);
  ConjectureReport rep = report_conjecture(store);
  auto hits = rep.counterexamples();
  std::printf("criterion 10: %s - general4 grid, %zu records, %zu depth-0 with mu(I) = 4, %zu inconclusive, %zu errors; "
              "%zu Cohen-Macaulay records with mu(J) > 3 (%.1f s)\n",
              hits.empty() ? "REPORTED (no counterexample)" : "REPORTED (COUNTEREXAMPLE FOUND)", rep.records,
              hits.size(), rep.inconclusive.size(), rep.errors.size(), rep.cm_violations.size(), seconds_since(t0));
  for (const auto& r : hits) std::printf("  depth 0: %s  J gens %zu\n", r.ideal.c_str(), r.mu_j.value_or(0));
  for (std::size_t i = 0; i < std::min<std::size_t>(rep.cm_violations.size(), 3); ++i)
    std::printf("  Cohen-Macaulay with mu(J) = %zu: %s\n", rep.cm_violations[i].mu_j.value_or(0),
                rep.cm_violations[i].ideal.c_str());
  (void)summary;
}

}  // namespace

int main(int argc, char** argv) {
  fs::path store = argc > 1 ? fs::path(argv[1])
                            : fs::temp_directory_path() / ("fibercone-acceptance-" + std::to_string(::getpid()) + ".jsonl");
  const bool keep = argc > 1;

  std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"worked example kernels", criterion1},       {"five-generator ideal has depth zero", criterion2},
      {"symmetric grid c <= 15", criterion3},       {"hypersurface grid", criterion4},
      {"complete intersection grid", criterion5},   {"Hilbert functions", criterion6},
      {"Groebner claims", criterion7},              {"mu(I^k) monotone", criterion8},
      {"rank cross-check on random ideals", criterion9},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failed += !o.pass;
    std::printf("criterion %zu: %s - %s: %s (%.1f s)\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first,
                o.detail.c_str(), seconds_since(t0));
    std::fflush(stdout);
  }
  try {
    criterion10(store);
  } catch (const std::exception& e) {
    std::printf("criterion 10: REPORTED (sweep failed: %s)\n", e.what());
  }
  if (!keep) fs::remove(store);
  std::printf("%d of 9 asserted criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
