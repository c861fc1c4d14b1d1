#include "fibercone/depth.hpp"

#include <algorithm>
#include <random>

#include "fibercone/modular.hpp"

namespace fibercone {

int dimension(std::span<const ZMonomial> monomial_gens, std::size_t nvars) {
  require(nvars < 31, "too many variables");
  int best = 0;
  for (std::uint32_t set = 0; set < (1u << nvars); ++set) {
    int size = __builtin_popcount(set);
    if (size <= best) continue;
    bool independent = std::none_of(monomial_gens.begin(), monomial_gens.end(), [&](const ZMonomial& g) {
      for (std::size_t v = 0; v < nvars; ++v)
        if (g[v] > 0 && !(set >> v & 1)) return false;
      return true;
    });
    if (independent) best = size;
  }
  return best;
}

int dimension(std::span<const Polynomial> gens, const Ring& ring) {
  GroebnerBasis gb = buchberger(gens, ring);
  std::vector<ZMonomial> ini = initial_ideal(gb);
  return dimension(ini, ring.nvars());
}

namespace {

Polynomial variable(std::size_t v) {
  PolyMonomial m;
  m.exps[v] = 1;
  m.degree = 1;
  return Polynomial::monomial(m);
}

Polynomial linear_form(const Ring& ring, const std::vector<std::uint32_t>& coeffs) {
  std::vector<Term> terms;
  for (std::size_t v = 0; v < coeffs.size(); ++v) {
    PolyMonomial m;
    m.exps[v] = 1;
    m.degree = 1;
    terms.push_back({m, coeffs[v]});
  }
  return Polynomial::from_terms(std::move(terms), ring);
}

bool same_ideal(const GroebnerBasis& a, const GroebnerBasis& b) {
  if (a.elements.size() != b.elements.size()) return false;
  return std::all_of(b.elements.begin(), b.elements.end(), [&](const Polynomial& p) { return contains(a, p); });
}

GroebnerBasis socle_ideal(const GroebnerBasis& gb) {
  const Ring& ring = gb.ring;
  std::optional<GroebnerBasis> acc;
  for (std::size_t v = 0; v < ring.nvars(); ++v) {
    GroebnerBasis q = colon(gb.elements, variable(v), ring);
    if (q.is_unit_ideal()) continue;
    acc = acc ? intersect(acc->elements, q.elements, ring) : q;
  }
  // Every colon is the unit ideal only when J contains all variables.
  if (!acc) return buchberger(std::vector<Polynomial>{Polynomial::monomial(PolyMonomial{})}, ring);
  return *acc;
}

bool depth_zero_gb(const GroebnerBasis& gb, Polynomial* witness) {
  GroebnerBasis soc = socle_ideal(gb);
  for (const auto& p : soc.elements)
    if (!contains(gb, p)) {
      if (witness) *witness = p;
      return true;
    }
  return false;
}

}  // namespace

bool is_depth_zero(std::span<const Polynomial> gens, const Ring& ring, Polynomial* witness) {
  return depth_zero_gb(buchberger(gens, ring), witness);
}

bool is_nonzerodivisor(const GroebnerBasis& gb, const Polynomial& f) {
  return same_ideal(gb, colon(gb.elements, f, gb.ring));
}

DepthCertificate depth(std::span<const Polynomial> gens, const Ring& ring, int trials, std::uint64_t seed) {
  require(trials >= 1, "trials must be positive");
  for (const auto& g : gens) require(g.is_homogeneous(), "depth needs homogeneous generators");
  DepthCertificate cert;
  cert.trials = trials;
  cert.prime = ring.prime;
  cert.seed = seed;
  cert.variables = ring.names;

  std::vector<Polynomial> stage(gens.begin(), gens.end());
  GroebnerBasis gb = buchberger(stage, ring);
  cert.dimension = dimension(initial_ideal(gb), ring.nvars());
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> any(0, ring.prime - 1), nonzero(1, ring.prime - 1);

  while (true) {
    Polynomial witness;
    if (depth_zero_gb(gb, &witness)) {
      cert.socle_witness = witness;
      break;
    }
    bool found = false;
    for (int t = 0; t < trials && !found; ++t) {
      // Full support first, then unrestricted forms.
      const bool full = t < (trials + 1) / 2;
      std::vector<std::uint32_t> coeffs(ring.nvars());
      for (auto& c : coeffs) c = full ? nonzero(rng) : any(rng);
      Polynomial f = linear_form(ring, coeffs);
      if (f.is_zero() || !is_nonzerodivisor(gb, f)) continue;
      cert.regular_sequence.push_back(coeffs);
      stage.push_back(f);
      gb = buchberger(stage, ring);
      found = true;
    }
    if (!found) fail(ErrorCode::Inconclusive, "inconclusive: enlarge prime or trials");
  }
  cert.depth = int(cert.regular_sequence.size());
  if (cert.depth > cert.dimension) fail(ErrorCode::Mismatch, "depth exceeds dimension");
  return cert;
}

std::vector<Polynomial> to_polynomials(std::span<const JGenerator> gens, const Ring& ring) {
  std::vector<Polynomial> out;
  for (const auto& g : gens) out.push_back(Polynomial::from_generator(g, ring));
  return out;
}

TruncationEvidence truncation_evidence(const KernelReport& report) {
  TruncationEvidence ev;
  ev.window = report.stability_window;
  const std::size_t m = report.ideal.size();
  const std::size_t n = report.ideal.nvars();
  const int top = std::max(2 * report.degree_bound, report.degree_bound + 8);
  std::vector<JGenerator> gens = report.generators();
  std::vector<ZMonomial> ini;
  if (!gens.empty()) {
    Ring ring = Ring::fiber(m);
    ini = initial_ideal(buchberger(to_polynomials(gens, ring), ring));
  }
  PowerTable powers(report.ideal);
  ev.checked_through = 0;
  for (int k = 1; k <= top; ++k) {
    if (standard_monomial_count(ini, m, k) != powers.power(k).size()) {
      ev.first_defect = k;
      break;
    }
    ev.checked_through = k;
  }
  bool m_primary = true;
  for (std::size_t v = 0; v < n && m_primary; ++v)
    m_primary = std::any_of(report.ideal.gens().begin(), report.ideal.gens().end(), [&](const ExponentVector& g) {
      return g[v] > 0 && g.degree() == g[v];
    });
  if (m_primary) ev.dimension_ok = dimension(ini, m) == int(n);

  ev.sufficient = ev.window >= kMinStabilityWindow && !ev.first_defect && ev.dimension_ok;
  if (ev.window < kMinStabilityWindow)
    ev.detail = "stability window " + std::to_string(ev.window) + " is below " + std::to_string(kMinStabilityWindow);
  else if (ev.first_defect)
    ev.detail = "Hilbert function of the truncation exceeds mu(I^k) at k = " + std::to_string(*ev.first_defect);
  else if (!ev.dimension_ok)
    ev.detail = "truncation has the wrong dimension";
  else
    ev.detail = "Hilbert functions agree through degree " + std::to_string(ev.checked_through);
  return ev;
}

KernelReport compute_stable_kernel(const MonomialIdeal& ideal, int max_degree, TruncationEvidence* evidence) {
  require(max_degree >= 2, "degree bound must be at least 2");
  KernelBuilder builder(ideal);
  builder.advance_to(2);
  while (true) {
    KernelReport rep = builder.report();
    int next = builder.degree() + 1;
    if (rep.stability_window >= kMinStabilityWindow) {
      TruncationEvidence ev = truncation_evidence(rep);
      if (ev.sufficient || builder.degree() >= max_degree) {
        if (evidence) *evidence = ev;
        return rep;
      }
      if (ev.first_defect) next = std::max(next, *ev.first_defect);
    } else if (builder.degree() >= max_degree) {
      if (evidence) *evidence = truncation_evidence(rep);
      return rep;
    }
    builder.advance_to(std::min(next, max_degree));
  }
}

DepthCertificate depth(const KernelReport& report, std::uint32_t prime, int trials, std::uint64_t seed) {
  TruncationEvidence ev = truncation_evidence(report);
  if (!ev.sufficient) fail(ErrorCode::Inconclusive, "truncated kernel is not trusted: " + ev.detail);
  std::vector<JGenerator> gens = report.generators();
  Ring ring = Ring::fiber(report.ideal.size(), prime);
  if (gens.empty()) {
    // J = 0: T itself, depth = number of variables.
    DepthCertificate cert;
    cert.depth = cert.dimension = int(ring.nvars());
    cert.trials = trials;
    cert.prime = prime;
    cert.seed = seed;
    cert.variables = ring.names;
    for (std::size_t v = 0; v < ring.nvars(); ++v) {
      std::vector<std::uint32_t> e(ring.nvars(), 0);
      e[v] = 1;
      cert.regular_sequence.push_back(e);
    }
    return cert;
  }
  return depth(to_polynomials(gens, ring), ring, trials, seed);
}

DepthCertificate depth(const Classification& cl, std::uint32_t prime, int trials, std::uint64_t seed) {
  if (!cl.certification.certified())
    fail(ErrorCode::Inconclusive, "classification is not certified; certify before running diagnostics");
  Ring ring = Ring::fiber(cl.ideal.size(), prime);
  return depth(to_polynomials(cl.predicted, ring), ring, trials, seed);
}

bool verify_certificate(std::span<const Polynomial> gens, const DepthCertificate& cert) {
  Ring ring(cert.variables, cert.prime, MonomialOrder::grevlex(cert.variables.size()));
  std::vector<Polynomial> stage;
  for (const auto& g : gens) stage.push_back(g.reordered(ring));
  for (const auto& coeffs : cert.regular_sequence) {
    GroebnerBasis gb = buchberger(stage, ring);
    Polynomial f = linear_form(ring, coeffs);
    if (!is_nonzerodivisor(gb, f)) return false;
    stage.push_back(f);
  }
  GroebnerBasis gb = buchberger(stage, ring);
  if (cert.socle_witness) {
    const Polynomial& w = *cert.socle_witness;
    if (contains(gb, w)) return false;
    for (std::size_t v = 0; v < ring.nvars(); ++v)
      if (!contains(gb, multiply(w, variable(v), ring))) return false;
    return true;
  }
  // No witness recorded: the chain must have exhausted every variable.
  return gb.is_unit_ideal() || int(cert.regular_sequence.size()) == int(ring.nvars());
}

bool is_cohen_macaulay(const DepthCertificate& cert) { return cert.cohen_macaulay(); }

void assert_symmetric_cm_criterion(const DepthCertificate& cert, std::size_t mu_j) {
  const bool cm = cert.cohen_macaulay();
  if (cm != (mu_j <= 3) || (mu_j <= 3) != (mu_j == 3))
    fail(ErrorCode::Mismatch, "Cohen-Macaulay test disagrees with mu(J) = " + std::to_string(mu_j));
}

bool mu_monotonicity_check(const MonomialIdeal& ideal, int max_power) {
  require(max_power >= 2, "need at least two powers");
  std::vector<std::size_t> mu = mu_power_sequence(ideal, max_power);
  return std::is_sorted(mu.begin(), mu.end());
}

}  // namespace fibercone
