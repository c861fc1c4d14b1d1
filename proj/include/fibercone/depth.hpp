#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fibercone/closed_form.hpp"
#include "fibercone/groebner.hpp"

namespace fibercone {

inline constexpr int kDefaultTrials = 64;
inline constexpr std::uint64_t kDefaultSeed = 1;
inline constexpr int kMinStabilityWindow = 4;

struct DepthCertificate {
  int depth = 0;
  int dimension = 0;
  // Coefficient vectors of the verified nonzerodivisors, in order.
  std::vector<std::vector<std::uint32_t>> regular_sequence;
  // Element of (J' : m) outside J' at the terminal stage.
  std::optional<Polynomial> socle_witness;
  int trials = kDefaultTrials;
  std::uint32_t prime = kDefaultPrime;
  std::uint64_t seed = kDefaultSeed;
  std::vector<std::string> variables;

  bool cohen_macaulay() const noexcept { return depth == dimension; }
};

/// Evidence that a truncated kernel report is the whole of J. The truncated
/// ideal J' is contained in J, so equal Hilbert functions through degree K
/// mean J' and J agree through degree K.
struct TruncationEvidence {
  int window = 0;
  int checked_through = 0;          // Hilbert functions agree up to here
  std::optional<int> first_defect;  // lowest degree where they differ
  bool dimension_ok = true;
  bool sufficient = false;
  std::string detail;
};

/// Compares standard monomial counts of the truncated J with mu(I^k) for
/// every k up to max(2D, D + 8), and for m-primary I checks dim T/J' = n.
TruncationEvidence truncation_evidence(const KernelReport& report);

/// Extends the oracle until the report has kMinStabilityWindow trailing
/// empty degrees and sufficient truncation evidence, or max_degree is hit.
KernelReport compute_stable_kernel(const MonomialIdeal& ideal, int max_degree, TruncationEvidence* evidence = nullptr);

/// Krull dimension of T / (monomial ideal): the largest set of variables
/// containing the support of no generator.
int dimension(std::span<const ZMonomial> monomial_gens, std::size_t nvars);
int dimension(std::span<const Polynomial> gens, const Ring& ring);

/// (J : m) != J, with m the ideal of all variables. The optional output is
/// an element of (J : m) not in J.
bool is_depth_zero(std::span<const Polynomial> gens, const Ring& ring, Polynomial* witness = nullptr);

/// (J : f) == J.
bool is_nonzerodivisor(const GroebnerBasis& gb, const Polynomial& f);

/// Depth of T/J by a chain of verified random linear nonzerodivisors ending
/// in a socle test. Throws Inconclusive when a stage is neither depth zero
/// nor admits a nonzerodivisor within `trials` attempts.
DepthCertificate depth(std::span<const Polynomial> gens, const Ring& ring, int trials = kDefaultTrials,
                       std::uint64_t seed = kDefaultSeed);

/// Gated entry points: the truncated generator set must be stable for
/// kMinStabilityWindow degrees with sufficient truncation evidence, or come
/// from a certified classification.
DepthCertificate depth(const KernelReport& report, std::uint32_t prime = kDefaultPrime, int trials = kDefaultTrials,
                       std::uint64_t seed = kDefaultSeed);
DepthCertificate depth(const Classification& cl, std::uint32_t prime = kDefaultPrime, int trials = kDefaultTrials,
                       std::uint64_t seed = kDefaultSeed);

/// Re-runs every colon test recorded in the certificate.
bool verify_certificate(std::span<const Polynomial> gens, const DepthCertificate& cert);

std::vector<Polynomial> to_polynomials(std::span<const JGenerator> gens, const Ring& ring);

bool is_cohen_macaulay(const DepthCertificate& cert);
/// For symmetric-family ideals: Cohen-Macaulay iff mu(J) <= 3 iff mu(J) = 3.
/// Throws Mismatch when the three disagree.
void assert_symmetric_cm_criterion(const DepthCertificate& cert, std::size_t mu_j);

/// mu(I^k) nondecreasing for k = 1..max_power.
bool mu_monotonicity_check(const MonomialIdeal& ideal, int max_power);

}  // namespace fibercone
