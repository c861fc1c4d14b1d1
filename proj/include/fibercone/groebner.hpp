#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fibercone/fiber.hpp"

namespace fibercone {

inline constexpr std::size_t kMaxPolyVars = 8;

/// Dense packed exponent vector for the polynomial engine.
struct PolyMonomial {
  std::array<std::uint16_t, kMaxPolyVars> exps{};
  std::uint16_t degree = 0;

  bool divides(const PolyMonomial& other) const {
    for (std::size_t i = 0; i < kMaxPolyVars; ++i)
      if (exps[i] > other.exps[i]) return false;
    return true;
  }
  bool coprime(const PolyMonomial& other) const {
    for (std::size_t i = 0; i < kMaxPolyVars; ++i)
      if (exps[i] && other.exps[i]) return false;
    return true;
  }
  PolyMonomial operator*(const PolyMonomial& other) const;
  PolyMonomial operator/(const PolyMonomial& divisor) const;
  PolyMonomial lcm(const PolyMonomial& other) const;
  bool operator==(const PolyMonomial&) const = default;
};

enum class OrderKind { Lex, GrevLex, Elim };

/// Monomial order on variables 0..n-1. `priority` lists variables from
/// largest to smallest. An elimination order compares the exponents of the
/// front block (degree, then lex by priority) before applying the inner
/// order to the remaining variables.
class MonomialOrder {
 public:
  static MonomialOrder lex(std::vector<std::size_t> priority);
  static MonomialOrder grevlex(std::vector<std::size_t> priority);
  static MonomialOrder elimination(std::vector<std::size_t> front, const MonomialOrder& inner);
  static MonomialOrder lex(std::size_t nvars);
  static MonomialOrder grevlex(std::size_t nvars);

  OrderKind kind() const noexcept { return kind_; }
  OrderKind inner_kind() const noexcept { return inner_kind_; }
  const std::vector<std::size_t>& priority() const noexcept { return priority_; }
  const std::vector<std::size_t>& front() const noexcept { return front_; }

  /// Negative, zero or positive as a <, =, > b.
  int compare(const PolyMonomial& a, const PolyMonomial& b) const;

 private:
  int compare_block(OrderKind kind, const std::vector<std::size_t>& vars, const PolyMonomial& a,
                    const PolyMonomial& b) const;

  OrderKind kind_ = OrderKind::Lex;
  OrderKind inner_kind_ = OrderKind::Lex;
  std::vector<std::size_t> priority_;  // inner variables for Elim
  std::vector<std::size_t> front_;
};

/// Variables, coefficient field F_p and active monomial order.
struct Ring {
  std::vector<std::string> names;
  std::uint32_t prime = kDefaultPrime;
  MonomialOrder order;

  Ring(std::vector<std::string> names, std::uint32_t prime, MonomialOrder order);
  /// z1..zn with the given order (default grevlex z1 > ... > zn).
  static Ring fiber(std::size_t nvars, std::uint32_t prime = kDefaultPrime);
  static Ring fiber(std::size_t nvars, std::uint32_t prime, MonomialOrder order);

  std::size_t nvars() const noexcept { return names.size(); }
  std::size_t index_of(std::string_view name) const;
  Ring with_order(MonomialOrder order) const;
};

/// Parses "lex:z1>z2>z3>z4", "grevlex:z1>z2" or "elim:t|lex:z1>z2".
MonomialOrder parse_order(std::string_view text, const Ring& ring);

struct Term {
  PolyMonomial mono;
  std::uint32_t coeff;
  bool operator==(const Term&) const = default;
};

/// Sparse polynomial; terms strictly descending in the ring's order with
/// nonzero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  /// Sorts, merges duplicate monomials and drops zeros.
  static Polynomial from_terms(std::vector<Term> terms, const Ring& ring);
  static Polynomial monomial(const PolyMonomial& m, std::uint32_t coeff = 1);
  static Polynomial from_generator(const JGenerator& g, const Ring& ring);

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  const Term& leading() const { return terms_.front(); }
  const PolyMonomial& lead_monomial() const { return terms_.front().mono; }
  int degree() const;
  bool is_homogeneous() const;

  Polynomial monic(const Ring& ring) const;
  /// Re-sorts the terms for a different order on the same variables.
  Polynomial reordered(const Ring& ring) const;

  bool operator==(const Polynomial&) const = default;

 private:
  friend Polynomial add(const Polynomial&, const Polynomial&, const Ring&);
  friend Polynomial sub_multiple(const Polynomial&, std::uint32_t, const PolyMonomial&, const Polynomial&,
                                 const Ring&, std::size_t);
  std::vector<Term> terms_;
};

Polynomial add(const Polynomial& a, const Polynomial& b, const Ring& ring);
Polynomial scale(const Polynomial& a, std::uint32_t c, const PolyMonomial& m, const Ring& ring);
Polynomial multiply(const Polynomial& a, const Polynomial& b, const Ring& ring);
/// f - c * m * g, skipping the first `skip` terms of f.
Polynomial sub_multiple(const Polynomial& f, std::uint32_t c, const PolyMonomial& m, const Polynomial& g,
                        const Ring& ring, std::size_t skip = 0);
/// Exact quotient p / f; throws if f does not divide p.
Polynomial divide_exact(const Polynomial& p, const Polynomial& f, const Ring& ring);

Polynomial parse_polynomial(std::string_view text, const Ring& ring);
std::string format_polynomial(const Polynomial& p, const Ring& ring);

PolyMonomial to_poly_monomial(const ZMonomial& z);
ZMonomial to_z_monomial(const PolyMonomial& m, std::size_t nvars);

struct GroebnerBasis {
  Ring ring;
  std::vector<Polynomial> elements;
  bool reduced = false;

  bool is_unit_ideal() const;
  bool operator==(const GroebnerBasis& other) const { return elements == other.elements; }
};

/// Reduced Groebner basis, elements monic and sorted by ascending lead.
GroebnerBasis buchberger(std::span<const Polynomial> gens, const Ring& ring);
GroebnerBasis buchberger(std::span<const JGenerator> gens, const Ring& ring);

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis, const Ring& ring);
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);
bool contains(const GroebnerBasis& gb, const Polynomial& f);
/// All S-pairs reduce to zero.
bool is_groebner_basis(std::span<const Polynomial> elements, const Ring& ring);

/// Minimal generators of the initial ideal, as fiber monomials.
std::vector<ZMonomial> initial_ideal(const GroebnerBasis& gb);

/// (J : f) via J cap (f) = t J + (1 - t)(f) with t eliminated, divided by f.
GroebnerBasis colon(std::span<const Polynomial> ideal, const Polynomial& f, const Ring& ring);
/// A cap B via t A + (1 - t) B with t eliminated.
GroebnerBasis intersect(std::span<const Polynomial> a, std::span<const Polynomial> b, const Ring& ring);

/// Number of degree-k monomials in nvars variables outside the monomial
/// ideal generated by `ini`.
std::uint64_t standard_monomial_count(std::span<const ZMonomial> ini, std::size_t nvars, int k);

}  // namespace fibercone
