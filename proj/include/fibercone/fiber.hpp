#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fibercone/monomial.hpp"

namespace fibercone {

/// Monomial in the fiber variables z_1..z_m. Lexicographic comparison of the
/// exponent list is the lex order with z_1 > z_2 > ... > z_m.
class ZMonomial {
 public:
  ZMonomial() = default;
  explicit ZMonomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit ZMonomial(std::vector<int> exps);
  ZMonomial(std::initializer_list<int> exps) : ZMonomial(std::vector<int>(exps)) {}

  static ZMonomial variable(std::size_t nvars, std::size_t index, int exponent = 1);

  std::size_t size() const noexcept { return exps_.size(); }
  int operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<int>& values() const noexcept { return exps_; }

  int degree() const noexcept;
  bool divides(const ZMonomial& other) const;
  ZMonomial operator*(const ZMonomial& other) const;
  /// Exact quotient; requires divisor | *this.
  ZMonomial operator/(const ZMonomial& divisor) const;
  ZMonomial gcd(const ZMonomial& other) const;
  ZMonomial lcm(const ZMonomial& other) const;
  ZMonomial permuted(std::span<const std::size_t> perm) const;

  std::string to_string() const;

  auto operator<=>(const ZMonomial&) const = default;
  bool operator==(const ZMonomial&) const = default;

 private:
  std::vector<int> exps_;
};

struct ZMonomialHash {
  std::size_t operator()(const ZMonomial& z) const noexcept;
};

/// Generator of J: a monomial, or a homogeneous binomial lead - trail.
/// Binomials are kept canonical: coprime sides, lead lex-larger.
class JGenerator {
 public:
  static JGenerator monomial(ZMonomial m);
  static JGenerator binomial(ZMonomial a, ZMonomial b);

  bool is_monomial() const noexcept { return !trail_.has_value(); }
  bool is_binomial() const noexcept { return trail_.has_value(); }
  const ZMonomial& lead() const noexcept { return lead_; }
  const ZMonomial& trail() const { return *trail_; }
  int degree() const noexcept { return lead_.degree(); }
  std::size_t nvars() const noexcept { return lead_.size(); }

  JGenerator permuted(std::span<const std::size_t> perm) const;
  std::string to_string() const;

  auto operator<=>(const JGenerator&) const = default;
  bool operator==(const JGenerator&) const = default;

 private:
  JGenerator(ZMonomial lead, std::optional<ZMonomial> trail) : lead_(std::move(lead)), trail_(std::move(trail)) {}
  ZMonomial lead_;
  std::optional<ZMonomial> trail_;
};

/// Parses "z2*z3" or "z1*z3^2 - z2^2*z4" over z_1..z_nvars.
JGenerator parse_generator(std::string_view text, std::size_t nvars);

/// All monomials of degree d in m variables, lex-descending (z_1^d first).
std::vector<ZMonomial> monomials_of_degree(std::size_t nvars, int degree);

/// Position of z inside monomials_of_degree(z.size(), z.degree()).
std::size_t graded_rank(const ZMonomial& z);

/// u^z = prod u_i^{z_i}, or nullopt when it lies in m I^{deg z} (the zero
/// class of the fiber cone).
std::optional<ExponentVector> image_of_z_monomial(const MonomialIdeal& ideal, const ZMonomial& z);
ExponentVector evaluate(const MonomialIdeal& ideal, const ZMonomial& z);

/// Whether g maps to zero in the fiber cone.
bool is_kernel_element(const MonomialIdeal& ideal, const JGenerator& g);

struct KernelReport {
  MonomialIdeal ideal;
  int degree_bound = 0;
  std::map<int, std::vector<JGenerator>> generators_by_degree;
  std::vector<std::size_t> mu_powers;
  int stability_window = 0;

  std::size_t mu() const;
  std::vector<JGenerator> generators() const;
};

/// Incremental degree-by-degree kernel computation. Degree k needs every
/// generator of degree < k, so degrees are processed in order.
class KernelBuilder {
 public:
  explicit KernelBuilder(MonomialIdeal ideal);

  int degree() const noexcept { return degree_; }
  /// Computes the new minimal generators in the next degree.
  const std::vector<JGenerator>& advance();
  void advance_to(int degree);
  KernelReport report() const;

 private:
  MonomialIdeal ideal_;
  PowerTable powers_;
  int degree_ = 1;
  std::map<int, std::vector<JGenerator>> found_;
  std::vector<std::size_t> mu_powers_;
};

/// Minimal generators of J in degrees 2..max_degree.
KernelReport compute_j(const MonomialIdeal& ideal, int max_degree);

/// Extends the degree bound until the report has `window` trailing empty
/// degrees, giving up at max_degree (the returned report then has a smaller
/// stability window).
KernelReport compute_j_until_stable(const MonomialIdeal& ideal, int min_degree, int window, int max_degree);

struct RankCheck {
  std::size_t kernel_dimension = 0;
  std::size_t shifted_dimension = 0;
  std::size_t found = 0;
  // Rank of the shifted relations together with the new generators.
  std::size_t combined_dimension = 0;
  bool agrees() const {
    return kernel_dimension == shifted_dimension + found && combined_dimension == kernel_dimension;
  }
};

inline constexpr std::uint32_t kDefaultPrime = 32003;

/// Independent check of one degree by sparse row reduction mod p:
/// |found_at_k| must equal dim ker(phi_k) - dim (T_1 J_{<k})_k.
RankCheck kernel_rank_dimensions(const MonomialIdeal& ideal, int k, std::span<const JGenerator> found_below,
                                 std::span<const JGenerator> found_at_k, std::uint32_t prime = kDefaultPrime);
bool rank_cross_check(const MonomialIdeal& ideal, int k, std::span<const JGenerator> found_below,
                      std::span<const JGenerator> found_at_k, std::uint32_t prime = kDefaultPrime);

}  // namespace fibercone
