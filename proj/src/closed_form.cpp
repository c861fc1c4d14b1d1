#include "fibercone/closed_form.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "fibercone/depth.hpp"

namespace fibercone {

const char* to_string(HalfspaceClass h) {
  switch (h) {
    case HalfspaceClass::OnH: return "OnH";
    case HalfspaceClass::HPlus: return "HPlus";
    case HalfspaceClass::HMinus: return "HMinus";
  }
  return "?";
}

const char* to_string(Family f) {
  switch (f) {
    case Family::Hypersurface: return "Hypersurface";
    case Family::SymmetricUp: return "SymmetricUp";
    case Family::SymmetricDown: return "SymmetricDown";
    case Family::SymmetricBalanced: return "SymmetricBalanced";
    case Family::CIType1: return "CIType1";
    case Family::CIType2: return "CIType2";
    case Family::CIType3: return "CIType3";
  }
  return "?";
}

std::optional<std::int64_t> Classification::param(const std::string& name) const {
  for (const auto& [k, v] : params)
    if (k == name) return v;
  return std::nullopt;
}

int Classification::max_predicted_degree() const {
  int d = 0;
  for (const auto& g : predicted) d = std::max(d, g.degree());
  return d;
}

namespace {

using i64 = std::int64_t;

i64 ceil_div(i64 p, i64 q) { return p >= 0 ? (p + q - 1) / q : -((-p) / q); }
i64 floor_div(i64 p, i64 q) { return p >= 0 ? p / q : -((-p + q - 1) / q); }

ZMonomial z(std::initializer_list<int> e) { return ZMonomial(std::vector<int>(e)); }

ZMonomial z4(i64 e1, i64 e2, i64 e3, i64 e4) {
  return ZMonomial(std::vector<int>{int(e1), int(e2), int(e3), int(e4)});
}

// z1^i z3^j  <->  z2^j z4^i
ZMonomial mirror(const ZMonomial& m) { return z4(m[3], m[2], m[1], m[0]); }

void assert_identity(bool ok, const std::string& what) {
  if (!ok) fail(ErrorCode::Mismatch, "identity check failed: " + what);
}

// Poset-minimal elements of a set of monomials z1^i z3^j given per j as the
// smallest admissible i (or none).
std::vector<ZMonomial> staircase(const std::vector<std::optional<i64>>& min_i_by_j) {
  std::vector<ZMonomial> out;
  std::optional<i64> best;
  for (std::size_t j = 0; j < min_i_by_j.size(); ++j) {
    const auto& i = min_i_by_j[j];
    if (!i) continue;
    if (best && *best <= *i) continue;
    best = i;
    out.push_back(z4(*i, 0, i64(j), 0));
  }
  return out;
}

bool divisible_by_any(const ZMonomial& m, const std::vector<ZMonomial>& gens) {
  return std::any_of(gens.begin(), gens.end(), [&](const ZMonomial& g) { return g.divides(m); });
}

struct SymmetricContext {
  i64 a, b, c;
  PowerTable powers;

  // z1^i z3^j maps to x^{ci+aj} y^{bj}.
  bool z1z3_in_j(i64 i, i64 j) {
    ExponentVector w{checked_add(checked_mul(c, i), checked_mul(a, j)), checked_mul(b, j)};
    return powers.member_strict_power(w, int(i + j));
  }

  std::optional<i64> smallest_i(i64 j, i64 i_max) {
    for (i64 i = 1; i <= i_max; ++i)
      if (z1z3_in_j(i, j)) return i;
    return std::nullopt;
  }
};

void add_with_mirrors(std::vector<JGenerator>& out, const std::vector<ZMonomial>& monos) {
  for (const auto& m : monos) {
    out.push_back(JGenerator::monomial(m));
    out.push_back(JGenerator::monomial(mirror(m)));
  }
}

}  // namespace

HalfspaceClass halfspace_class(const std::vector<i64>& a, const std::vector<i64>& b) {
  require(a.size() == b.size() && a.size() >= 2, "need n >= 2 exponent pairs");
  // Compare sum b_i/a_i with 1 using an exact common denominator.
  i64 den = 1;
  for (i64 ai : a) {
    require(ai > 0, "a_i must be positive");
    den = checked_mul(den / std::gcd(den, ai), ai);
  }
  i64 num = 0;
  for (std::size_t i = 0; i < a.size(); ++i) num = checked_add(num, checked_mul(b[i], den / a[i]));
  if (num == den) return HalfspaceClass::OnH;
  return num > den ? HalfspaceClass::HPlus : HalfspaceClass::HMinus;
}

MonomialIdeal hypersurface_ideal(const std::vector<i64>& a, const std::vector<i64>& b) {
  require(a.size() == b.size() && a.size() >= 2, "need n >= 2 exponent pairs");
  const std::size_t n = a.size();
  std::vector<ExponentVector> gens;
  for (std::size_t i = 0; i < n; ++i) {
    require(b[i] > 0 && b[i] < a[i], "need 0 < b_i < a_i for every i");
    std::vector<i64> e(n, 0);
    e[i] = a[i];
    gens.emplace_back(std::move(e));
  }
  gens.emplace_back(b);
  return MonomialIdeal(std::move(gens));
}

MonomialIdeal symmetric_ideal(i64 a, i64 b, i64 c) {
  require(0 < a && a < b && b < c, "symmetric ideals need 0 < a < b < c");
  require(std::gcd(std::gcd(a, b), c) == 1, "symmetric ideals need gcd(a, b, c) = 1");
  return MonomialIdeal({{c, 0}, {b, a}, {a, b}, {0, c}});
}

MonomialIdeal ci_ideal(i64 a, i64 b, i64 c, i64 d) {
  require(c >= 1 && a > c && b >= a, "need b >= a > c >= 1");
  require(std::gcd(a, c) == 1, "need gcd(a, c) = 1");
  require(std::gcd(b, d) == 1, "need gcd(b, d) = 1");
  require(b < d && d < 2 * b, "need b < d < 2b for four minimal generators");
  return MonomialIdeal({{2 * a, 0}, {a, b}, {c, d}, {0, 2 * b}});
}

Classification classify_hypersurface(const std::vector<i64>& a, const std::vector<i64>& b) {
  Classification cl(hypersurface_ideal(a, b));
  cl.family = Family::Hypersurface;
  const std::size_t n = a.size();
  const HalfspaceClass h = halfspace_class(a, b);
  cl.halfspace = h;
  cl.predicted_depth = int(n);
  cl.predicted_cm = true;

  auto top = [&](i64 r) { return ZMonomial::variable(n + 1, n, int(r)); };
  if (h == HalfspaceClass::OnH) {
    i64 r = 1;
    for (std::size_t i = 0; i < n; ++i) {
      i64 q = a[i] / std::gcd(a[i], b[i]);
      r = checked_mul(r / std::gcd(r, q), q);
    }
    std::vector<int> e(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) e[i] = int(b[i] * r / a[i]);
    cl.params.emplace_back("r", r);
    cl.predicted.push_back(JGenerator::binomial(top(r), ZMonomial(std::move(e))));
  } else if (h == HalfspaceClass::HPlus) {
    i64 r = 1;
    for (;; ++r) {
      i64 s = 0;
      for (std::size_t i = 0; i < n; ++i) s += floor_div(b[i] * r, a[i]);
      if (s >= r) break;
    }
    cl.params.emplace_back("r", r);
    cl.predicted.push_back(JGenerator::monomial(top(r)));
  } else {
    // Minimal t with sum ceil(b_i t / a_i) <= t. At the minimum the sum is
    // exactly t, so the componentwise-least solution is the only one.
    i64 t = 1;
    for (;; ++t) {
      i64 s = 0;
      for (std::size_t i = 0; i < n; ++i) s += ceil_div(b[i] * t, a[i]);
      if (s <= t) {
        if (s < t) cl.notes.push_back("minimal-degree solution is not unique");
        break;
      }
    }
    std::vector<int> e(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) e[i] = int(ceil_div(b[i] * t, a[i]));
    cl.params.emplace_back("t", t);
    cl.predicted.push_back(JGenerator::monomial(ZMonomial(std::move(e))));
  }
  return cl;
}

Classification classify_symmetric(i64 a, i64 b, i64 c) {
  Classification cl(symmetric_ideal(a, b, c));
  const auto& u = cl.ideal.gens();
  const i64 g = std::gcd(c, b - a);
  const i64 ell = (b - a) / g, m = c / g;
  SymmetricContext ctx{a, b, c, PowerTable(cl.ideal)};

  if (a + b == c) {
    cl.family = Family::SymmetricBalanced;
    // No closed form: the prediction is the oracle's answer.
    TruncationEvidence ev;
    KernelReport rep = compute_stable_kernel(cl.ideal, 4 * int(c) + 8, &ev);
    if (!ev.sufficient) cl.notes.push_back("oracle truncation not trusted: " + ev.detail);
    cl.predicted = rep.generators();
    const bool cm = cl.predicted.size() <= 3;
    cl.predicted_cm = cm;
    cl.predicted_depth = cm ? 2 : 1;
    cl.params.emplace_back("stability_window", rep.stability_window);
    cl.notes.push_back("generators taken from the oracle; no closed form for a + b = c");
    return cl;
  }

  const ZMonomial bin_lead = z4(ell, 0, m, 0);
  const ZMonomial bin_trail = mirror(bin_lead);
  std::vector<ZMonomial> base;
  std::vector<ZMonomial> found;
  // Extra monomials implied by the binomial together with base generators.
  ZMonomial bin_shadow;

  if (a + b > c) {
    cl.family = Family::SymmetricUp;
    ExponentVector diag{a + b - c, a + b - c};
    assert_identity(u[1] * u[2] == diag * u[0] * u[3], "u2 u3 = x^{a+b-c} y^{a+b-c} u1 u4");

    i64 r = 0;
    for (i64 k = 1; k <= 4 * c + 8; ++k)
      if (ctx.powers.member_strict_power(u[1].pow(k), int(k))) {
        r = k;
        break;
      }
    if (r == 0) fail(ErrorCode::Mismatch, "no pure power of z2 found in J");
    cl.params.emplace_back("r", r);
    base = {z({0, 1, 1, 0}), z4(0, r, 0, 0), z4(0, 0, r, 0)};

    std::vector<std::optional<i64>> min_i(static_cast<std::size_t>(r));
    for (i64 j = 1; j < r; ++j) min_i[size_t(j)] = ctx.smallest_i(j, ceil_div(b * j, a) + 1);
    found = staircase(min_i);
    bin_shadow = z4(ell, 0, m + 1, 0);
  } else {
    cl.family = Family::SymmetricDown;
    // Least (i, j), j > 0, with (b-a) j / (c-b) <= i <= (b-a) j / a. The lower
    // bound is monotone in j, so the first feasible j gives the unique minimum.
    i64 i0 = 0, j0 = 0;
    for (i64 j = 1;; ++j) {
      i64 lo = ceil_div((b - a) * j, c - b);
      if (lo * a <= (b - a) * j) {
        i0 = lo;
        j0 = j;
        break;
      }
    }
    cl.params.emplace_back("i", i0);
    cl.params.emplace_back("j", j0);
    const ZMonomial corner = z4(i0, 0, j0, 0);
    base = {z({1, 0, 0, 1}), corner, mirror(corner)};

    const i64 i_max = std::max(i0, ceil_div(b * j0, a) + 1);
    const i64 j_max = std::max(j0, i0 + ceil_div(c * i0, b - a) + 1);
    std::vector<std::optional<i64>> min_i(static_cast<std::size_t>(j_max + 1));
    for (i64 j = 1; j <= j_max; ++j) min_i[size_t(j)] = ctx.smallest_i(j, i_max);
    found = staircase(min_i);
    bool corner_found = std::any_of(found.begin(), found.end(), [&](const ZMonomial& f) { return f == corner; });
    if (!corner_found) cl.notes.push_back("poset minimum " + corner.to_string() + " is not a minimal monomial of J");
    bin_shadow = z4(ell + 1, 0, m, 0);
  }

  std::vector<ZMonomial> extra;
  for (const auto& f : found)
    if (!divisible_by_any(f, base)) extra.push_back(f);

  std::vector<ZMonomial> monos = base;
  for (const auto& f : extra) monos.push_back(f), monos.push_back(mirror(f));
  const bool binomial = !divisible_by_any(bin_lead, monos) && !divisible_by_any(bin_trail, monos);
  if (binomial) {
    std::erase_if(extra, [&](const ZMonomial& f) { return bin_shadow.divides(f); });
    cl.params.emplace_back("l", ell);
    cl.params.emplace_back("m", m);
  }

  const char* tag = extra.empty() ? (binomial ? "iii" : "i") : (binomial ? "iv" : "ii");
  cl.case_tag = tag;
  if (cl.family == Family::SymmetricUp && binomial && extra.empty())
    assert_identity(cl.param("r") == m + 1, "r = m + 1 in case (iii)");

  for (const auto& mono : base) cl.predicted.push_back(JGenerator::monomial(mono));
  add_with_mirrors(cl.predicted, extra);
  if (binomial) cl.predicted.push_back(JGenerator::binomial(bin_lead, bin_trail));
  std::sort(cl.predicted.begin(), cl.predicted.end());
  cl.predicted.erase(std::unique(cl.predicted.begin(), cl.predicted.end()), cl.predicted.end());

  const bool cm = cl.case_tag == "i";
  cl.predicted_cm = cm;
  cl.predicted_depth = cm ? 2 : 1;
  return cl;
}

Classification classify_ci(i64 a, i64 b, i64 c, i64 d) {
  Classification cl(ci_ideal(a, b, c, d));
  const auto& u = cl.ideal.gens();
  cl.predicted_cm = true;
  cl.predicted_depth = 2;
  assert_identity(u[1] * u[1] == u[0] * u[3], "u2^2 = u1 u4");
  cl.predicted.push_back(JGenerator::binomial(z({0, 2, 0, 0}), z({1, 0, 0, 1})));

  const i64 sign = b * c + a * d - 2 * a * b;
  if (sign > 0) {
    cl.family = Family::CIType1;
    PowerTable powers(cl.ideal);
    i64 r = 0;
    for (i64 k = 1; k <= 8 * b + 8; ++k)
      if (powers.member_strict_power(u[2].pow(k), int(k))) {
        r = k;
        break;
      }
    if (r == 0) fail(ErrorCode::Mismatch, "no pure power of z3 found in J");
    cl.params.emplace_back("r", r);
    // Smallest s admitting positive i, j with 2a i + a j <= c s and
    // (2b - d) s <= 2b i + b j.
    i64 r_ineq = 0;
    for (i64 s = 1; s <= 8 * b + 8 && r_ineq == 0; ++s)
      for (i64 i = 1; i < s && r_ineq == 0; ++i)
        for (i64 j = 1; i + j <= s; ++j)
          if (2 * a * i + a * j <= c * s && (2 * b - d) * s <= 2 * b * i + b * j) {
            r_ineq = s;
            break;
          }
    if (r_ineq != r) {
      cl.params.emplace_back("r_ineq", r_ineq);
      cl.notes.push_back("positive-witness inequality gives a different r");
    }
    cl.predicted.push_back(JGenerator::monomial(z4(0, 0, r, 0)));
  } else if (sign < 0) {
    cl.family = Family::CIType2;
    // Smallest r with an integer l in [c r / a, (2 - d / b) r]; take the least l.
    i64 r = 1, ell = 0;
    for (;; ++r) {
      ell = ceil_div(c * r, a);
      if (b * ell <= (2 * b - d) * r) break;
    }
    const i64 i = ell / 2, j = ell % 2;
    cl.params.emplace_back("r", r);
    cl.params.emplace_back("l", ell);
    cl.params.emplace_back("i", i);
    cl.params.emplace_back("j", j);
    cl.predicted.push_back(JGenerator::monomial(z4(i, j, 0, r - i - j)));
  } else {
    cl.family = Family::CIType3;
    const i64 i = c / 2, j = c % 2;
    cl.params.emplace_back("i", i);
    cl.params.emplace_back("j", j);
    assert_identity(u[2].pow(a) == u[0].pow(i) * u[1].pow(j) * u[3].pow(a - i - j), "u3^a = u1^i u2^j u4^(a-i-j)");
    cl.predicted.push_back(JGenerator::binomial(z4(0, 0, a, 0), z4(i, j, 0, a - i - j)));
  }
  std::sort(cl.predicted.begin(), cl.predicted.end());
  return cl;
}

bool same_generator_set(std::vector<JGenerator> a, std::vector<JGenerator> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

Classification certify(Classification cl, int slack) {
  require(slack >= 0, "slack must be nonnegative");
  Certification& cert = cl.certification;
  cert = Certification{};
  if (cl.family == Family::SymmetricBalanced) {
    cert.detail = "no closed form to certify";
    return cl;
  }
  for (const auto& g : cl.predicted)
    if (!is_kernel_element(cl.ideal, g)) {
      cert.status = CertificationStatus::Mismatch;
      cert.detail = "predicted generator " + g.to_string() + " is not in J";
      cert.missing.push_back(g);
      return cl;
    }
  const int bound = std::max(2, cl.max_predicted_degree() + slack);
  KernelReport rep = compute_j(cl.ideal, bound);
  std::vector<JGenerator> found = rep.generators();
  std::set<JGenerator> want(cl.predicted.begin(), cl.predicted.end());
  std::set<JGenerator> got(found.begin(), found.end());
  for (const auto& g : want)
    if (!got.count(g)) cert.missing.push_back(g);
  for (const auto& g : got)
    if (!want.count(g)) cert.unexpected.push_back(g);
  cert.degree = bound;
  if (cert.missing.empty() && cert.unexpected.empty()) {
    cert.status = CertificationStatus::CertifiedUpTo;
  } else {
    cert.status = CertificationStatus::Mismatch;
    cert.detail = "oracle disagrees up to degree " + std::to_string(bound);
  }
  return cl;
}

Classification certify(Classification cl, const MonomialIdeal& ideal, int slack) {
  require(cl.ideal == ideal, "classification was produced for a different ideal");
  return certify(std::move(cl), slack);
}

}  // namespace fibercone
