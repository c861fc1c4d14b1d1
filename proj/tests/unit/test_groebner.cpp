#include <random>

#include "doctest.h"
#include "support.hpp"

using namespace fibercone;
using support::gens;

namespace {

std::vector<Polynomial> polys(std::initializer_list<const char*> texts, const Ring& ring) {
  std::vector<Polynomial> out;
  for (const char* t : texts) out.push_back(parse_polynomial(t, ring));
  return out;
}

// Every element of a reduces to zero modulo b.
bool contained(const GroebnerBasis& a, const GroebnerBasis& b) {
  return std::all_of(a.elements.begin(), a.elements.end(), [&](const Polynomial& p) { return contains(b, p); });
}

std::uint64_t brute_standard_count(const std::vector<ZMonomial>& ini, std::size_t n, int k) {
  std::uint64_t count = 0;
  for (const auto& z : oracle::z_monomials(n, k)) {
    ZMonomial m(z);
    if (std::none_of(ini.begin(), ini.end(), [&](const ZMonomial& g) { return g.divides(m); })) ++count;
  }
  return count;
}

}  // namespace

TEST_SUITE("groebner") {
  TEST_CASE("polynomial arithmetic and printing") {
    Ring ring = Ring::fiber(4);
    Polynomial f = parse_polynomial("z1*z3^2 - z2^2*z4", ring);
    Polynomial g = parse_polynomial("z1 + 2*z2", ring);
    CHECK(format_polynomial(f, ring) == "z1*z3^2 - z2^2*z4");
    CHECK(f.is_homogeneous());
    CHECK(f.degree() == 3);
    Polynomial fg = multiply(f, g, ring);
    CHECK(divide_exact(fg, g, ring) == f);
    CHECK(add(f, scale(f, ring.prime - 1, PolyMonomial{}, ring), ring).is_zero());
    CHECK_THROWS_AS(parse_polynomial("z9", ring), Error);
    CHECK_THROWS_AS(Ring::fiber(9), Error);
  }

  TEST_CASE("monomial orders") {
    Ring base = Ring::fiber(3);
    PolyMonomial a = to_poly_monomial(ZMonomial{1, 0, 0}), b = to_poly_monomial(ZMonomial{0, 2, 0});
    CHECK(MonomialOrder::lex(3).compare(a, b) > 0);
    CHECK(MonomialOrder::grevlex(3).compare(a, b) < 0);
    MonomialOrder rev = parse_order("lex:z3>z2>z1", base);
    CHECK(rev.compare(a, b) < 0);
    CHECK_THROWS_AS(parse_order("lex:z1>z1>z2", base), Error);
  }

  TEST_CASE("buchberger output passes the S-pair criterion and is reduced") {
    Ring ring = Ring::fiber(4);
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 30; ++trial) {
      MonomialIdeal i = support::ideal_of(oracle::random_ideal(rng, 4, 9));
      auto j = compute_j(i, 6).generators();
      if (j.empty()) continue;
      GroebnerBasis gb = buchberger(j, ring);
      CHECK(is_groebner_basis(gb.elements, ring));
      CHECK(gb.reduced);
      for (const auto& g : j) CHECK(contains(gb, Polynomial::from_generator(g, ring)));
    }
  }

  TEST_CASE("bases for different orders describe the same ideal") {
    Ring base = Ring::fiber(4);
    for (auto [a, b, c] : std::vector<std::array<std::int64_t, 3>>{{2, 9, 10}, {3, 8, 10}, {3, 7, 11}}) {
      auto j = compute_j(symmetric_ideal(a, b, c), 10).generators();
      GroebnerBasis lex = buchberger(j, base.with_order(MonomialOrder::lex(4)));
      GroebnerBasis grev = buchberger(j, base.with_order(MonomialOrder::grevlex(4)));
      CHECK(contained(lex, grev));
      CHECK(contained(grev, lex));
    }
  }

  TEST_CASE("leading monomials agree for two primes") {
    for (auto [a, b, c] : std::vector<std::array<std::int64_t, 3>>{{2, 29, 30}, {3, 8, 10}, {4, 9, 13}}) {
      auto j = compute_j(symmetric_ideal(a, b, c), 20).generators();
      auto ini1 = initial_ideal(buchberger(j, Ring::fiber(4, 32003)));
      auto ini2 = initial_ideal(buchberger(j, Ring::fiber(4, 65521)));
      CHECK(ini1 == ini2);
    }
  }

  TEST_CASE("Hilbert function of the initial ideal equals mu of powers") {
    for (auto [a, b, c] : std::vector<std::array<std::int64_t, 3>>{{2, 3, 4}, {2, 9, 10}, {3, 8, 10}, {1, 3, 7}}) {
      MonomialIdeal i = symmetric_ideal(a, b, c);
      KernelReport rep = compute_j(i, 12);
      auto ini = initial_ideal(buchberger(rep.generators(), Ring::fiber(4)));
      for (int k = 1; k <= 12; ++k) {
        CHECK(standard_monomial_count(ini, 4, k) == rep.mu_powers[std::size_t(k - 1)]);
        if (k <= 8) CHECK(standard_monomial_count(ini, 4, k) == brute_standard_count(ini, 4, k));
      }
    }
  }

  TEST_CASE("initial ideal for (3,8,10) under lex") {
    Ring ring = Ring::fiber(4);
    auto j = compute_j(symmetric_ideal(3, 8, 10), 6).generators();
    auto ini = initial_ideal(buchberger(j, ring));
    std::vector<ZMonomial> want{{1, 0, 2, 0}, {0, 3, 0, 0}, {0, 1, 1, 0}, {0, 0, 3, 0}};
    std::sort(want.begin(), want.end(), std::greater<>());
    CHECK(ini == want);
    CHECK(is_groebner_basis(to_polynomials(j, ring), ring));
  }

  TEST_CASE("complete intersection generators are a reduced basis under lex z3 > z2 > z1 > z4") {
    Ring base = Ring::fiber(4);
    Ring ring = base.with_order(parse_order("lex:z3>z2>z1>z4", base));
    auto p = polys({"z2^2 - z1*z4", "z3^3 - z1*z4^2"}, ring);
    GroebnerBasis gb = buchberger(p, ring);
    CHECK(gb.elements.size() == 2);
    CHECK(is_groebner_basis(p, ring));
    std::vector<ZMonomial> want{{0, 0, 3, 0}, {0, 2, 0, 0}};
    std::sort(want.begin(), want.end(), std::greater<>());
    CHECK(initial_ideal(gb) == want);
  }

  TEST_CASE("colon ideals") {
    Ring ring = Ring::fiber(4);
    CHECK(colon(polys({"z1"}, ring), parse_polynomial("z1", ring), ring).is_unit_ideal());
    CHECK(colon(polys({"z1*z2"}, ring), parse_polynomial("z1", ring), ring) == buchberger(polys({"z2"}, ring), ring));
    auto j234 = to_polynomials(gens({"z2*z3", "z2^2", "z3^2"}), ring);
    CHECK(colon(j234, parse_polynomial("z2*z3", ring), ring).is_unit_ideal());
    GroebnerBasis q = colon(j234, parse_polynomial("z2", ring), ring);
    CHECK(q == buchberger(polys({"z2", "z3"}, ring), ring));
    auto prime = polys({"z1*z4 - z2*z3"}, ring);
    CHECK(colon(prime, parse_polynomial("z1", ring), ring) == buchberger(prime, ring));
  }

  TEST_CASE("intersections") {
    Ring ring = Ring::fiber(4);
    CHECK(intersect(polys({"z1"}, ring), polys({"z2"}, ring), ring) == buchberger(polys({"z1*z2"}, ring), ring));
    auto a = to_polynomials(gens({"z2", "z3^5", "z1*z3^4"}), ring);
    auto b = to_polynomials(gens({"z3", "z2^5", "z2^4*z4"}), ring);
    auto j = compute_j(symmetric_ideal(2, 9, 10), 8).generators();
    CHECK(intersect(a, b, ring) == buchberger(j, ring));
  }

  TEST_CASE("standard monomial count") {
    std::vector<ZMonomial> ini{{0, 1, 1, 0}, {0, 2, 0, 0}, {0, 0, 2, 0}};
    for (int k = 1; k <= 7; ++k) CHECK(standard_monomial_count(ini, 4, k) == 3 * std::uint64_t(k) + 1);
    CHECK(standard_monomial_count({}, 3, 2) == 6);
  }
}
