#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fibercone/fiber.hpp"

namespace fibercone {

enum class HalfspaceClass { OnH, HPlus, HMinus };

enum class Family {
  Hypersurface,
  SymmetricUp,
  SymmetricDown,
  SymmetricBalanced,
  CIType1,
  CIType2,
  CIType3,
};

const char* to_string(HalfspaceClass h);
const char* to_string(Family f);

enum class CertificationStatus { Pending, CertifiedUpTo, Mismatch };

struct Certification {
  CertificationStatus status = CertificationStatus::Pending;
  int degree = 0;
  std::string detail;
  std::vector<JGenerator> missing;     // predicted, not found by the oracle
  std::vector<JGenerator> unexpected;  // found by the oracle, not predicted

  bool certified() const noexcept { return status == CertificationStatus::CertifiedUpTo; }
};

struct Classification {
  explicit Classification(MonomialIdeal ideal_in) : ideal(std::move(ideal_in)) {}

  Family family = Family::Hypersurface;
  MonomialIdeal ideal;
  std::optional<std::string> case_tag;  // "i" .. "iv"
  std::optional<HalfspaceClass> halfspace;
  std::vector<std::pair<std::string, std::int64_t>> params;
  std::vector<JGenerator> predicted;
  int predicted_depth = 0;
  std::optional<bool> predicted_cm;
  Certification certification;
  std::vector<std::string> notes;

  std::optional<std::int64_t> param(const std::string& name) const;
  int max_predicted_degree() const;
};

/// Exact comparison of sum b_i / a_i with 1.
HalfspaceClass halfspace_class(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b);

MonomialIdeal hypersurface_ideal(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b);
MonomialIdeal symmetric_ideal(std::int64_t a, std::int64_t b, std::int64_t c);
MonomialIdeal ci_ideal(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

/// (x_1^{a_1}, ..., x_n^{a_n}, x^b) with 0 < b_i < a_i.
Classification classify_hypersurface(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b);
/// (x^c, x^b y^a, x^a y^b, y^c) with 0 < a < b < c and gcd(a, b, c) = 1.
Classification classify_symmetric(std::int64_t a, std::int64_t b, std::int64_t c);
/// (x^{2a}, x^a y^b, x^c y^d, y^{2b}) with gcd(a, c) = gcd(b, d) = 1,
/// b >= a > c >= 1 and b < d < 2b.
Classification classify_ci(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

inline constexpr int kDefaultSlack = 3;

/// Checks every prediction is a kernel element, then compares with the
/// oracle up to max predicted degree + slack.
Classification certify(Classification cl, int slack = kDefaultSlack);
Classification certify(Classification cl, const MonomialIdeal& ideal, int slack = kDefaultSlack);

/// Whether two generator lists agree as sets of canonical forms.
bool same_generator_set(std::vector<JGenerator> a, std::vector<JGenerator> b);

}  // namespace fibercone
