#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fibercone/error.hpp"

namespace fibercone {

using Exponent = std::int64_t;

Exponent checked_add(Exponent a, Exponent b);
Exponent checked_mul(Exponent a, Exponent b);

/// Exponent vector of a monomial. The length is fixed at construction.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t nvars) : exps_(nvars, 0) {}
  explicit ExponentVector(std::vector<Exponent> exps);
  ExponentVector(std::initializer_list<Exponent> exps) : ExponentVector(std::vector<Exponent>(exps)) {}

  std::size_t size() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exponent> view() const noexcept { return exps_; }
  const std::vector<Exponent>& values() const noexcept { return exps_; }

  Exponent degree() const;
  bool divides(const ExponentVector& other) const;

  ExponentVector operator*(const ExponentVector& other) const;
  ExponentVector pow(Exponent k) const;

  auto operator<=>(const ExponentVector&) const = default;
  bool operator==(const ExponentVector&) const = default;

 private:
  std::vector<Exponent> exps_;
};

struct ExponentVectorHash {
  std::size_t operator()(const ExponentVector& v) const noexcept;
};

/// Monomial ideal given by a minimal (antichain) generating set. Generator
/// order is preserved: generator i corresponds to fiber variable z_{i+1}.
class MonomialIdeal {
 public:
  /// Throws unless gens is a nonempty antichain of equal-length vectors.
  explicit MonomialIdeal(std::vector<ExponentVector> gens);

  std::size_t nvars() const noexcept { return gens_.front().size(); }
  std::size_t size() const noexcept { return gens_.size(); }
  const std::vector<ExponentVector>& gens() const noexcept { return gens_; }
  const ExponentVector& operator[](std::size_t i) const { return gens_[i]; }

  bool contains(const ExponentVector& m) const;
  bool operator==(const MonomialIdeal& other) const;

 private:
  struct Trusted {};
  MonomialIdeal(std::vector<ExponentVector> gens, Trusted) : gens_(std::move(gens)) {}
  friend MonomialIdeal minimalize(std::span<const ExponentVector> candidates);

  std::vector<ExponentVector> gens_;
};

/// Componentwise-minimal elements, sorted descending lexicographically.
MonomialIdeal minimalize(std::span<const ExponentVector> candidates);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal power(const MonomialIdeal& ideal, int k);

/// m lies in the maximal ideal times I, i.e. a generator divides m properly.
bool member_strict(const ExponentVector& m, const MonomialIdeal& ideal);

std::vector<std::size_t> mu_power_sequence(const MonomialIdeal& ideal, int max_power);

/// Lazily extended table of I, I^2, ... (incremental products).
class PowerTable {
 public:
  explicit PowerTable(MonomialIdeal ideal);

  const MonomialIdeal& base() const noexcept { return powers_.front(); }
  const MonomialIdeal& power(int k);
  bool member_strict_power(const ExponentVector& m, int k);

 private:
  std::vector<MonomialIdeal> powers_;
};

/// Parses "25,0; 20,5; 19,19". Non-antichain input is rejected unless
/// `minimalize_input` is set.
MonomialIdeal parse_ideal(std::string_view text, bool minimalize_input = false);
std::string format_ideal(const MonomialIdeal& ideal);
std::string format_monomial(const ExponentVector& m, std::string_view var_prefix = "x");

}  // namespace fibercone
