#include "fibercone/worked_examples.hpp"

#include <chrono>
#include <filesystem>
#include <functional>
#include <optional>

#include <unistd.h>

#include "fibercone/depth.hpp"
#include "fibercone/serialize.hpp"
#include "fibercone/sweep.hpp"

namespace fibercone {

namespace {

using Check = std::function<std::optional<std::string>()>;

std::vector<JGenerator> gens(std::initializer_list<const char*> texts, std::size_t nvars = 4) {
  std::vector<JGenerator> out;
  for (const char* t : texts) out.push_back(parse_generator(t, nvars));
  return out;
}

std::string list(const std::vector<JGenerator>& g) {
  std::string out;
  for (const auto& x : g) out += (out.empty() ? "" : ", ") + x.to_string();
  return "{" + out + "}";
}

std::optional<std::string> expect_kernel(const MonomialIdeal& ideal, int degree, std::vector<JGenerator> want) {
  KernelReport rep = compute_j(ideal, degree);
  if (same_generator_set(rep.generators(), want)) return std::nullopt;
  return "got " + list(rep.generators());
}

std::optional<std::string> expect_params(const Classification& cl, const std::string& tag,
                                         std::vector<std::pair<std::string, std::int64_t>> want,
                                         std::vector<JGenerator> generators) {
  if (cl.case_tag != tag) return "case " + cl.case_tag.value_or("-");
  for (const auto& [k, v] : want)
    if (cl.param(k) != v) return "param " + k + " = " + std::to_string(cl.param(k).value_or(-1));
  if (!same_generator_set(cl.predicted, generators)) return "predicted " + list(cl.predicted);
  return std::nullopt;
}

std::optional<std::string> expect(bool ok, const std::string& detail) {
  if (ok) return std::nullopt;
  return detail;
}

std::vector<ZMonomial> zs(std::initializer_list<const char*> texts) {
  std::vector<ZMonomial> out;
  for (const char* t : texts) out.push_back(parse_generator(t, 4).lead());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::optional<std::string> expect_depth(const Classification& cl, int want) {
  Classification c = certify(cl);
  DepthCertificate cert = depth(c);
  return expect(cert.depth == want, "depth " + std::to_string(cert.depth));
}

}  // namespace

std::vector<ExampleResult> run_worked_examples() {
  const MonomialIdeal i234 = symmetric_ideal(2, 3, 4);
  const MonomialIdeal i2910 = symmetric_ideal(2, 9, 10);
  const MonomialIdeal i3810 = symmetric_ideal(3, 8, 10);
  const MonomialIdeal i22930 = symmetric_ideal(2, 29, 30);
  const MonomialIdeal intro = parse_ideal("25,0; 20,5; 19,19; 5,20; 0,25");
  const auto j234 = gens({"z2*z3", "z2^2", "z3^2"});
  const auto j2910 = gens({"z2*z3", "z2^5", "z3^5", "z1*z3^4", "z2^4*z4"});
  const auto j3810 = gens({"z2*z3", "z2^3", "z3^3", "z1*z3^2 - z2^2*z4"});
  const auto j22930 = gens({"z2*z3", "z2^15", "z3^15", "z1^9*z3^10 - z2^10*z4^9", "z1*z3^14", "z2^14*z4", "z1^3*z3^13",
                            "z2^13*z4^3", "z1^5*z3^12", "z2^12*z4^5", "z1^7*z3^11", "z2^11*z4^7"});
  const auto j3324 = gens({"z2^2 - z1*z4", "z3^3 - z1*z4^2"});

  std::vector<std::pair<std::string, Check>> checks = {
      {"strict membership x^5y^5 in m I^2 for (2,3,4)",
       [&] { return expect(member_strict(ExponentVector{5, 5}, power(i234, 2)), "not strict"); }},
      {"u2 u3 = x y u1 u4 for (2,3,4)",
       [&] { return expect(i234[1] * i234[2] == ExponentVector{1, 1} * i234[0] * i234[3], "identity fails"); }},
      {"z2*z3 is zero class for (2,3,4)",
       [&] { return expect(!image_of_z_monomial(i234, ZMonomial{0, 1, 1, 0}), "nonzero image"); }},
      {"z2^5 is zero class for (2,9,10)",
       [&] { return expect(!image_of_z_monomial(i2910, ZMonomial{0, 5, 0, 0}), "nonzero image"); }},
      {"kernel of (2,3,4) to degree 4", [&] { return expect_kernel(i234, 4, j234); }},
      {"kernel of (2,9,10) to degree 8", [&] { return expect_kernel(i2910, 8, j2910); }},
      {"kernel of (3,8,10) to degree 6", [&] { return expect_kernel(i3810, 6, j3810); }},
      {"kernel of (2,29,30) to degree 20", [&] { return expect_kernel(i22930, 20, j22930); }},
      {"rank check of (2,3,4) in degree 2",
       [&] {
         auto at2 = compute_j(i234, 2).generators();
         return expect(at2.size() == 3 && rank_cross_check(i234, 2, {}, at2), "rank check failed");
       }},
      {"classify (2,3,4): case i, r = 2",
       [&] { return expect_params(classify_symmetric(2, 3, 4), "i", {{"r", 2}}, j234); }},
      {"classify (2,9,10): case ii, r = 5",
       [&] { return expect_params(classify_symmetric(2, 9, 10), "ii", {{"r", 5}}, j2910); }},
      {"classify (3,8,10): case iii, l = 1, m = 2",
       [&] { return expect_params(classify_symmetric(3, 8, 10), "iii", {{"r", 3}, {"l", 1}, {"m", 2}}, j3810); }},
      {"classify (2,29,30): case iv, l = 9, m = 10",
       [&] { return expect_params(classify_symmetric(2, 29, 30), "iv", {{"r", 15}, {"l", 9}, {"m", 10}}, j22930); }},
      {"classify (1,2,4): down case i, poset minimum (1,1)",
       [&] {
         return expect_params(classify_symmetric(1, 2, 4), "i", {{"i", 1}, {"j", 1}},
                              gens({"z1*z4", "z1*z3", "z2*z4"}));
       }},
      {"certify (2,3,4) up to degree 5",
       [&] {
         auto c = certify(classify_symmetric(2, 3, 4));
         return expect(certification_label(c.certification) == "CertifiedUpTo(5)", certification_label(c.certification));
       }},
      {"certify (3,8,10) up to degree 6",
       [&] {
         auto c = certify(classify_symmetric(3, 8, 10));
         return expect(certification_label(c.certification) == "CertifiedUpTo(6)", certification_label(c.certification));
       }},
      {"certify (2,9,10) and (2,29,30)",
       [&] {
         bool ok = certify(classify_symmetric(2, 9, 10)).certification.certified() &&
                   certify(classify_symmetric(2, 29, 30)).certification.certified();
         return expect(ok, "not certified");
       }},
      {"ci (3,3,2,5): first branch, r = 2",
       [&] {
         auto c = certify(classify_ci(3, 3, 2, 5));
         return expect(c.family == Family::CIType1 && c.param("r") == 2 && c.certification.certified() &&
                           same_generator_set(c.predicted, gens({"z2^2 - z1*z4", "z3^2"})),
                       to_json(c).dump());
       }},
      {"ci (3,4,1,5): second branch, (i, j) = (0, 1)",
       [&] {
         auto c = certify(classify_ci(3, 4, 1, 5));
         return expect(c.family == Family::CIType2 && c.param("r") == 2 && c.param("l") == 1 &&
                           c.certification.certified() &&
                           same_generator_set(c.predicted, gens({"z2^2 - z1*z4", "z2*z4"})),
                       to_json(c).dump());
       }},
      {"ci (3,3,2,4): balanced branch and u3^3 = u1 u4^2",
       [&] {
         auto c = certify(classify_ci(3, 3, 2, 4));
         const auto& u = c.ideal.gens();
         return expect(c.family == Family::CIType3 && c.certification.certified() &&
                           same_generator_set(c.predicted, j3324) && u[2].pow(3) == u[0] * u[3].pow(2),
                       to_json(c).dump());
       }},
      {"hypersurface a = (2,2), b = (1,1): on the hyperplane",
       [&] {
         auto c = certify(classify_hypersurface({2, 2}, {1, 1}));
         return expect(c.halfspace == HalfspaceClass::OnH && c.certification.certified() &&
                           same_generator_set(c.predicted, gens({"z3^2 - z1*z2"}, 3)),
                       to_json(c).dump());
       }},
      {"hypersurface a = (2,3), b = (1,2): upper half space, z3^2",
       [&] {
         auto c = certify(classify_hypersurface({2, 3}, {1, 2}));
         return expect(c.halfspace == HalfspaceClass::HPlus && c.certification.certified() &&
                           same_generator_set(c.predicted, gens({"z3^2"}, 3)),
                       to_json(c).dump());
       }},
      {"hypersurface a = (3,3), b = (1,1): lower half space, z1*z2",
       [&] {
         auto c = certify(classify_hypersurface({3, 3}, {1, 1}));
         return expect(c.halfspace == HalfspaceClass::HMinus && c.certification.certified() &&
                           same_generator_set(c.predicted, gens({"z1*z2"}, 3)),
                       to_json(c).dump());
       }},
      {"(3,8,10) generators are a lex Groebner basis with the expected initial ideal",
       [&] {
         Ring base = Ring::fiber(4);
         Ring ring = base.with_order(parse_order("lex:z1>z2>z3>z4", base));
         auto polys = to_polynomials(j3810, ring);
         GroebnerBasis gb = buchberger(polys, ring);
         return expect(is_groebner_basis(polys, ring) && gb.elements.size() == 4 &&
                           initial_ideal(gb) == zs({"z2*z3", "z2^3", "z3^3", "z1*z3^2"}),
                       "initial ideal differs");
       }},
      {"(3,3,2,4) generators are their own reduced basis under lex z3 > z2 > z1 > z4",
       [&] {
         Ring base = Ring::fiber(4);
         Ring ring = base.with_order(parse_order("lex:z3>z2>z1>z4", base));
         std::vector<Polynomial> polys;
         for (const auto& g : j3324) polys.push_back(Polynomial::from_generator(g, ring).monic(ring));
         GroebnerBasis gb = buchberger(polys, ring);
         bool same = gb.elements.size() == 2 && std::all_of(polys.begin(), polys.end(), [&](const Polynomial& p) {
                       return std::find(gb.elements.begin(), gb.elements.end(), p) != gb.elements.end();
                     });
         return expect(same && initial_ideal(gb) == zs({"z2^2", "z3^3"}), "basis differs");
       }},
      {"J of (2,9,10) splits as (z2, z3^5, z1*z3^4) cap (z3, z2^5, z2^4*z4)",
       [&] {
         Ring ring = Ring::fiber(4);
         auto a = to_polynomials(gens({"z2", "z3^5", "z1*z3^4"}), ring);
         auto b = to_polynomials(gens({"z3", "z2^5", "z2^4*z4"}), ring);
         return expect(intersect(a, b, ring) == buchberger(j2910, ring), "intersection differs");
       }},
      {"dimension of F(I) for (2,3,4) is 2",
       [&] {
         Ring ring = Ring::fiber(4);
         int d = dimension(to_polynomials(j234, ring), ring);
         return expect(d == 2, "dimension " + std::to_string(d));
       }},
      {"(2,3,4) is not depth zero",
       [&] {
         Ring ring = Ring::fiber(4);
         return expect(!is_depth_zero(to_polynomials(j234, ring), ring), "socle found");
       }},
      {"five-generator ideal (25,0; 20,5; 19,19; 5,20; 0,25) has depth zero",
       [&] {
         TruncationEvidence ev;
         KernelReport rep = compute_stable_kernel(intro, 30, &ev);
         if (!ev.sufficient) return std::optional<std::string>(ev.detail);
         Ring ring = Ring::fiber(5);
         return expect(is_depth_zero(to_polynomials(rep.generators(), ring), ring) && depth(rep).depth == 0,
                       "no socle element");
       }},
      {"depth of (2,3,4) is 2", [&] { return expect_depth(classify_symmetric(2, 3, 4), 2); }},
      {"depth of (2,9,10) is 1", [&] { return expect_depth(classify_symmetric(2, 9, 10), 1); }},
      {"depth of ci (3,3,2,4) is 2", [&] { return expect_depth(classify_ci(3, 3, 2, 4), 2); }},
      {"(2,3,4) is Cohen-Macaulay with mu(J) = 3",
       [&] {
         DepthCertificate cert = depth(certify(classify_symmetric(2, 3, 4)));
         assert_symmetric_cm_criterion(cert, 3);
         return expect(is_cohen_macaulay(cert), "not CM");
       }},
      {"(3,8,10) is not Cohen-Macaulay, mu(J) = 4",
       [&] {
         DepthCertificate cert = depth(certify(classify_symmetric(3, 8, 10)));
         assert_symmetric_cm_criterion(cert, 4);
         return expect(!is_cohen_macaulay(cert), "CM");
       }},
      {"store seeded with the five-generator ideal reports it with mu(I) = 5",
       [&] {
         namespace fs = std::filesystem;
         fs::path store = fs::temp_directory_path() / ("fibercone-seeded-" + std::to_string(::getpid()) + ".jsonl");
         fs::remove(store);
         SweepSpec spec;
         spec.family = SweepFamily::Explicit;
         append_record(store, record_for_ideal(intro, "explicit:" + format_ideal(intro), spec));
         ConjectureReport rep = report_conjecture(store);
         Json j = rep.to_json();
         fs::remove(store);
         bool ok = rep.depth_zero.size() == 1 && rep.counterexamples().empty() &&
                   j.at("depth_zero").at(0).at("annotation") == "mu(I) = 5";
         return expect(ok, j.dump());
       }},
      {"mu(I^k) nondecreasing for (2,3,4), k <= 6",
       [&] { return expect(mu_monotonicity_check(i234, 6), "decreasing"); }},
  };

  std::vector<ExampleResult> out;
  for (auto& [name, check] : checks) {
    ExampleResult r;
    r.name = name;
    auto t0 = std::chrono::steady_clock::now();
    try {
      auto failure = check();
      r.passed = !failure;
      if (failure) r.detail = *failure;
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace fibercone
