#include "fibercone/groebner.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "fibercone/modular.hpp"

namespace fibercone {

// ---------------------------------------------------------------------------
// Monomials and orders

PolyMonomial PolyMonomial::operator*(const PolyMonomial& other) const {
  PolyMonomial out;
  for (std::size_t i = 0; i < kMaxPolyVars; ++i) {
    unsigned s = unsigned(exps[i]) + other.exps[i];
    if (s > 0xFFFF) fail(ErrorCode::Overflow, "polynomial exponent overflow");
    out.exps[i] = static_cast<std::uint16_t>(s);
  }
  unsigned d = unsigned(degree) + other.degree;
  if (d > 0xFFFF) fail(ErrorCode::Overflow, "polynomial degree overflow");
  out.degree = static_cast<std::uint16_t>(d);
  return out;
}

PolyMonomial PolyMonomial::operator/(const PolyMonomial& divisor) const {
  PolyMonomial out;
  for (std::size_t i = 0; i < kMaxPolyVars; ++i) out.exps[i] = exps[i] - divisor.exps[i];
  out.degree = degree - divisor.degree;
  return out;
}

PolyMonomial PolyMonomial::lcm(const PolyMonomial& other) const {
  PolyMonomial out;
  unsigned d = 0;
  for (std::size_t i = 0; i < kMaxPolyVars; ++i) {
    out.exps[i] = std::max(exps[i], other.exps[i]);
    d += out.exps[i];
  }
  out.degree = static_cast<std::uint16_t>(d);
  return out;
}

namespace {

void check_priority(const std::vector<std::size_t>& priority) {
  std::vector<std::size_t> sorted = priority;
  std::sort(sorted.begin(), sorted.end());
  require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(), "variable repeated in order");
  for (std::size_t v : sorted) require(v < kMaxPolyVars, "variable index out of range in order");
}

std::vector<std::size_t> identity(std::size_t n) {
  std::vector<std::size_t> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = i;
  return out;
}

}  // namespace

MonomialOrder MonomialOrder::lex(std::vector<std::size_t> priority) {
  check_priority(priority);
  MonomialOrder o;
  o.kind_ = o.inner_kind_ = OrderKind::Lex;
  o.priority_ = std::move(priority);
  return o;
}

MonomialOrder MonomialOrder::grevlex(std::vector<std::size_t> priority) {
  check_priority(priority);
  MonomialOrder o;
  o.kind_ = o.inner_kind_ = OrderKind::GrevLex;
  o.priority_ = std::move(priority);
  return o;
}

MonomialOrder MonomialOrder::lex(std::size_t nvars) { return lex(identity(nvars)); }
MonomialOrder MonomialOrder::grevlex(std::size_t nvars) { return grevlex(identity(nvars)); }

MonomialOrder MonomialOrder::elimination(std::vector<std::size_t> front, const MonomialOrder& inner) {
  require(!front.empty(), "elimination order needs a front block");
  require(inner.kind_ != OrderKind::Elim, "nested elimination orders are not supported");
  std::vector<std::size_t> all = front;
  all.insert(all.end(), inner.priority_.begin(), inner.priority_.end());
  check_priority(all);
  MonomialOrder o;
  o.kind_ = OrderKind::Elim;
  o.inner_kind_ = inner.kind_;
  o.front_ = std::move(front);
  o.priority_ = inner.priority_;
  return o;
}

int MonomialOrder::compare_block(OrderKind kind, const std::vector<std::size_t>& vars, const PolyMonomial& a,
                                 const PolyMonomial& b) const {
  if (kind == OrderKind::Lex) {
    for (std::size_t v : vars)
      if (a.exps[v] != b.exps[v]) return a.exps[v] > b.exps[v] ? 1 : -1;
    return 0;
  }
  int da = 0, db = 0;
  for (std::size_t v : vars) {
    da += a.exps[v];
    db += b.exps[v];
  }
  if (da != db) return da > db ? 1 : -1;
  for (auto it = vars.rbegin(); it != vars.rend(); ++it)
    if (a.exps[*it] != b.exps[*it]) return a.exps[*it] < b.exps[*it] ? 1 : -1;
  return 0;
}

int MonomialOrder::compare(const PolyMonomial& a, const PolyMonomial& b) const {
  switch (kind_) {
    case OrderKind::Lex:
      return compare_block(OrderKind::Lex, priority_, a, b);
    case OrderKind::GrevLex:
      if (a.degree != b.degree) return a.degree > b.degree ? 1 : -1;
      return compare_block(OrderKind::GrevLex, priority_, a, b);
    case OrderKind::Elim:
      if (int c = compare_block(OrderKind::GrevLex, front_, a, b)) return c;
      return compare_block(inner_kind_, priority_, a, b);
  }
  return 0;
}

Ring::Ring(std::vector<std::string> names_in, std::uint32_t prime_in, MonomialOrder order_in)
    : names(std::move(names_in)), prime(prime_in), order(std::move(order_in)) {
  require(!names.empty() && names.size() <= kMaxPolyVars, "polynomial rings support 1 to 8 variables");
  modp::require_odd_prime(prime);
  std::vector<std::size_t> used = order.priority();
  used.insert(used.end(), order.front().begin(), order.front().end());
  std::sort(used.begin(), used.end());
  require(used == identity(names.size()), "monomial order does not cover the ring variables");
}

Ring Ring::fiber(std::size_t nvars, std::uint32_t prime) { return fiber(nvars, prime, MonomialOrder::grevlex(nvars)); }

Ring Ring::fiber(std::size_t nvars, std::uint32_t prime, MonomialOrder order) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < nvars; ++i) names.push_back("z" + std::to_string(i + 1));
  return Ring(std::move(names), prime, std::move(order));
}

std::size_t Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return i;
  fail(ErrorCode::Parse, "unknown variable '" + std::string(name) + "'");
}

Ring Ring::with_order(MonomialOrder o) const { return Ring(names, prime, std::move(o)); }

MonomialOrder parse_order(std::string_view text, const Ring& ring) {
  auto parse_vars = [&](std::string_view list, char sep) {
    std::vector<std::size_t> out;
    std::size_t pos = 0;
    while (pos <= list.size()) {
      std::size_t stop = list.find(sep, pos);
      if (stop == std::string_view::npos) stop = list.size();
      std::string_view name = list.substr(pos, stop - pos);
      while (!name.empty() && std::isspace(static_cast<unsigned char>(name.front()))) name.remove_prefix(1);
      while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back()))) name.remove_suffix(1);
      out.push_back(ring.index_of(name));
      pos = stop + 1;
    }
    return out;
  };
  auto colon_at = text.find(':');
  if (colon_at == std::string_view::npos) fail(ErrorCode::Parse, "order must look like 'lex:z1>z2'");
  std::string_view kind = text.substr(0, colon_at);
  std::string_view rest = text.substr(colon_at + 1);
  if (kind == "lex") return MonomialOrder::lex(parse_vars(rest, '>'));
  if (kind == "grevlex") return MonomialOrder::grevlex(parse_vars(rest, '>'));
  if (kind == "elim") {
    auto bar = rest.find('|');
    if (bar == std::string_view::npos) fail(ErrorCode::Parse, "elimination order must look like 'elim:t|lex:...'");
    std::vector<std::size_t> front = parse_vars(rest.substr(0, bar), ',');
    return MonomialOrder::elimination(std::move(front), parse_order(rest.substr(bar + 1), ring));
  }
  fail(ErrorCode::Parse, "unknown order kind '" + std::string(kind) + "'");
}

// ---------------------------------------------------------------------------
// Polynomials

Polynomial Polynomial::from_terms(std::vector<Term> terms, const Ring& ring) {
  const auto& order = ring.order;
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return order.compare(a.mono, b.mono) > 0; });
  Polynomial out;
  for (auto& t : terms) {
    t.coeff %= ring.prime;
    if (!out.terms_.empty() && out.terms_.back().mono == t.mono) {
      out.terms_.back().coeff = modp::add(out.terms_.back().coeff, t.coeff, ring.prime);
      if (out.terms_.back().coeff == 0) out.terms_.pop_back();
    } else if (t.coeff != 0) {
      out.terms_.push_back(t);
    }
  }
  return out;
}

Polynomial Polynomial::monomial(const PolyMonomial& m, std::uint32_t coeff) {
  Polynomial out;
  if (coeff != 0) out.terms_.push_back({m, coeff});
  return out;
}

Polynomial Polynomial::from_generator(const JGenerator& g, const Ring& ring) {
  require(g.nvars() <= ring.nvars(), "generator has more variables than the ring");
  std::vector<Term> terms{{to_poly_monomial(g.lead()), 1}};
  if (g.is_binomial()) terms.push_back({to_poly_monomial(g.trail()), ring.prime - 1});
  return from_terms(std::move(terms), ring);
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, int(t.mono.degree));
  return d;
}

bool Polynomial::is_homogeneous() const {
  return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.mono.degree == terms_[0].mono.degree; });
}

Polynomial Polynomial::monic(const Ring& ring) const {
  if (is_zero() || leading().coeff == 1) return *this;
  std::uint32_t s = modp::inv(leading().coeff, ring.prime);
  Polynomial out = *this;
  for (auto& t : out.terms_) t.coeff = modp::mul(t.coeff, s, ring.prime);
  return out;
}

Polynomial Polynomial::reordered(const Ring& ring) const { return from_terms(terms_, ring); }

Polynomial add(const Polynomial& a, const Polynomial& b, const Ring& ring) {
  Polynomial out;
  auto& t = out.terms_;
  t.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c = i == a.size() ? -1 : j == b.size() ? 1 : ring.order.compare(a.terms_[i].mono, b.terms_[j].mono);
    if (c > 0) {
      t.push_back(a.terms_[i++]);
    } else if (c < 0) {
      t.push_back(b.terms_[j++]);
    } else {
      std::uint32_t s = modp::add(a.terms_[i].coeff, b.terms_[j].coeff, ring.prime);
      if (s) t.push_back({a.terms_[i].mono, s});
      ++i;
      ++j;
    }
  }
  return out;
}

Polynomial scale(const Polynomial& a, std::uint32_t c, const PolyMonomial& m, const Ring& ring) {
  std::vector<Term> terms;
  c %= ring.prime;
  if (c == 0) return {};
  terms.reserve(a.size());
  for (const auto& t : a.terms()) terms.push_back({t.mono * m, modp::mul(t.coeff, c, ring.prime)});
  // Multiplication by a monomial preserves any monomial order.
  Polynomial out;
  out = Polynomial::from_terms(std::move(terms), ring);
  return out;
}

Polynomial multiply(const Polynomial& a, const Polynomial& b, const Ring& ring) {
  std::vector<Term> terms;
  terms.reserve(a.size() * b.size());
  for (const auto& s : a.terms())
    for (const auto& t : b.terms()) terms.push_back({s.mono * t.mono, modp::mul(s.coeff, t.coeff, ring.prime)});
  return Polynomial::from_terms(std::move(terms), ring);
}

Polynomial sub_multiple(const Polynomial& f, std::uint32_t c, const PolyMonomial& m, const Polynomial& g,
                        const Ring& ring, std::size_t skip) {
  const std::uint32_t p = ring.prime;
  Polynomial out;
  auto& t = out.terms_;
  t.reserve(f.size() - skip + g.size());
  std::size_t i = skip, j = 0;
  const std::size_t nf = f.size(), ng = g.size();
  PolyMonomial gm;
  bool have_gm = false;
  while (i < nf || j < ng) {
    if (j < ng && !have_gm) {
      gm = g.terms_[j].mono * m;
      have_gm = true;
    }
    int cmp = i == nf ? -1 : j == ng ? 1 : ring.order.compare(f.terms_[i].mono, gm);
    if (cmp > 0) {
      t.push_back(f.terms_[i++]);
    } else {
      std::uint32_t gc = modp::neg(modp::mul(c, g.terms_[j].coeff, p), p);
      if (cmp == 0) {
        std::uint32_t s = modp::add(f.terms_[i].coeff, gc, p);
        if (s) t.push_back({gm, s});
        ++i;
      } else if (gc) {
        t.push_back({gm, gc});
      }
      ++j;
      have_gm = false;
    }
  }
  return out;
}

Polynomial divide_exact(const Polynomial& p, const Polynomial& f, const Ring& ring) {
  require(!f.is_zero(), "division by zero polynomial");
  std::vector<Term> quotient;
  Polynomial rest = p;
  const std::uint32_t lc_inv = modp::inv(f.leading().coeff, ring.prime);
  while (!rest.is_zero()) {
    const Term& lt = rest.leading();
    if (!f.lead_monomial().divides(lt.mono)) fail(ErrorCode::InvalidArgument, "polynomial division is not exact");
    PolyMonomial q = lt.mono / f.lead_monomial();
    std::uint32_t c = modp::mul(lt.coeff, lc_inv, ring.prime);
    quotient.push_back({q, c});
    rest = sub_multiple(rest, c, q, f, ring);
  }
  return Polynomial::from_terms(std::move(quotient), ring);
}

PolyMonomial to_poly_monomial(const ZMonomial& z) {
  require(z.size() <= kMaxPolyVars, "too many variables for the polynomial engine");
  PolyMonomial m;
  unsigned d = 0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (z[i] > 0xFFFF) fail(ErrorCode::Overflow, "exponent too large for the polynomial engine");
    m.exps[i] = static_cast<std::uint16_t>(z[i]);
    d += z[i];
  }
  if (d > 0xFFFF) fail(ErrorCode::Overflow, "degree too large for the polynomial engine");
  m.degree = static_cast<std::uint16_t>(d);
  return m;
}

ZMonomial to_z_monomial(const PolyMonomial& m, std::size_t nvars) {
  std::vector<int> exps(nvars);
  for (std::size_t i = 0; i < nvars; ++i) exps[i] = m.exps[i];
  for (std::size_t i = nvars; i < kMaxPolyVars; ++i)
    require(m.exps[i] == 0, "monomial uses variables beyond the requested range");
  return ZMonomial(std::move(exps));
}

Polynomial parse_polynomial(std::string_view text, const Ring& ring) {
  std::vector<Term> terms;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto bad = [&](const char* what) { fail(ErrorCode::Parse, std::string(what) + " in '" + std::string(text) + "'"); };
  skip_ws();
  if (pos == text.size()) bad("empty polynomial");
  if (text.substr(pos) == "0") return {};
  bool first = true;
  while (true) {
    skip_ws();
    if (pos == text.size()) break;
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
      negative = text[pos] == '-';
      ++pos;
      skip_ws();
    } else if (!first) {
      bad("expected '+' or '-'");
    }
    first = false;
    std::uint64_t coeff = 1;
    PolyMonomial mono;
    bool have_factor = false;
    while (true) {
      skip_ws();
      if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), v);
        if (ec != std::errc()) bad("bad coefficient");
        pos = ptr - text.data();
        coeff = coeff * (v % ring.prime) % ring.prime;
      } else if (pos < text.size() && (std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
        std::size_t start = pos;
        while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) ++pos;
        std::size_t var = ring.index_of(text.substr(start, pos - start));
        unsigned e = 1;
        skip_ws();
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          skip_ws();
          auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), e);
          if (ec != std::errc()) bad("bad exponent");
          pos = ptr - text.data();
        }
        if (mono.exps[var] + e > 0xFFFF || mono.degree + e > 0xFFFF) fail(ErrorCode::Overflow, "exponent too large");
        mono.exps[var] = static_cast<std::uint16_t>(mono.exps[var] + e);
        mono.degree = static_cast<std::uint16_t>(mono.degree + e);
      } else {
        bad("expected coefficient or variable");
      }
      have_factor = true;
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    if (!have_factor) bad("empty term");
    std::uint32_t c = static_cast<std::uint32_t>(coeff);
    terms.push_back({mono, negative ? modp::neg(c, ring.prime) : c});
  }
  return Polynomial::from_terms(std::move(terms), ring);
}

std::string format_polynomial(const Polynomial& p, const Ring& ring) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : p.terms()) {
    bool negative = t.coeff > ring.prime / 2;
    std::uint32_t mag = negative ? ring.prime - t.coeff : t.coeff;
    if (first)
      out << (negative ? "-" : "");
    else
      out << (negative ? " - " : " + ");
    first = false;
    bool constant = t.mono.degree == 0;
    if (mag != 1 || constant) out << mag << (constant ? "" : "*");
    bool first_var = true;
    for (std::size_t v = 0; v < ring.nvars(); ++v) {
      if (!t.mono.exps[v]) continue;
      if (!first_var) out << '*';
      first_var = false;
      out << ring.names[v];
      if (t.mono.exps[v] > 1) out << '^' << t.mono.exps[v];
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Reduction and Buchberger

namespace {

std::size_t find_reducer(const PolyMonomial& m, std::span<const Polynomial> basis) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!basis[i].is_zero() && basis[i].lead_monomial().divides(m)) return i;
  return basis.size();
}

Polynomial reduce(const Polynomial& f, std::span<const Polynomial> basis, const Ring& ring, bool full) {
  std::vector<Term> remainder;
  Polynomial cur = f;
  std::size_t pos = 0;
  while (pos < cur.size()) {
    const Term& t = cur.terms()[pos];
    std::size_t r = find_reducer(t.mono, basis);
    if (r == basis.size()) {
      if (!full) break;
      remainder.push_back(t);
      ++pos;
      continue;
    }
    const Polynomial& g = basis[r];
    std::uint32_t c = modp::mul(t.coeff, modp::inv(g.leading().coeff, ring.prime), ring.prime);
    cur = sub_multiple(cur, c, t.mono / g.lead_monomial(), g, ring, pos);
    pos = 0;
  }
  // Remainder terms are strictly larger than whatever is left in cur.
  std::vector<Term> terms = std::move(remainder);
  terms.insert(terms.end(), cur.terms().begin() + std::min(pos, cur.size()), cur.terms().end());
  return Polynomial::from_terms(std::move(terms), ring);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const Ring& ring) {
  PolyMonomial l = f.lead_monomial().lcm(g.lead_monomial());
  // Both inputs are monic.
  Polynomial a = scale(f, 1, l / f.lead_monomial(), ring);
  return sub_multiple(a, 1, l / g.lead_monomial(), g, ring);
}

struct Pair {
  std::size_t i, j;
  PolyMonomial lcm;
};

class Completion {
 public:
  explicit Completion(const Ring& ring) : ring_(ring) {}

  void insert(Polynomial h) {
    h = h.monic(ring_);
    const std::size_t hi = polys_.size();
    const PolyMonomial& hm = h.lead_monomial();
    polys_.push_back(std::move(h));
    active_.push_back(true);

    // Gebauer-Moeller update.
    std::vector<Pair> candidates;
    for (std::size_t g = 0; g < hi; ++g)
      if (active_[g]) candidates.push_back({g, hi, hm.lcm(polys_[g].lead_monomial())});
    std::vector<char> keep(candidates.size(), 1);
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      const auto& ca = candidates[a];
      if (hm.coprime(polys_[ca.i].lead_monomial())) continue;
      for (std::size_t b = 0; b < candidates.size(); ++b) {
        if (a == b || !keep[b]) continue;
        const auto& cb = candidates[b];
        if (cb.lcm.divides(ca.lcm) && (!(cb.lcm == ca.lcm) || b < a)) {
          keep[a] = 0;
          break;
        }
      }
    }
    std::vector<Pair> fresh;
    for (std::size_t a = 0; a < candidates.size(); ++a)
      if (keep[a] && !hm.coprime(polys_[candidates[a].i].lead_monomial())) fresh.push_back(candidates[a]);

    std::vector<Pair> survivors;
    for (const auto& p : pairs_) {
      bool dominated = hm.divides(p.lcm) && !(hm.lcm(polys_[p.i].lead_monomial()) == p.lcm) &&
                       !(hm.lcm(polys_[p.j].lead_monomial()) == p.lcm);
      if (!dominated) survivors.push_back(p);
    }
    survivors.insert(survivors.end(), fresh.begin(), fresh.end());
    pairs_ = std::move(survivors);

    for (std::size_t g = 0; g < hi; ++g)
      if (active_[g] && hm.divides(polys_[g].lead_monomial())) active_[g] = false;
  }

  void run() {
    while (!pairs_.empty()) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k) {
        int c = ring_.order.compare(pairs_[k].lcm, pairs_[best].lcm);
        if (c < 0 || (c == 0 && std::tie(pairs_[k].i, pairs_[k].j) < std::tie(pairs_[best].i, pairs_[best].j)))
          best = k;
      }
      Pair p = pairs_[best];
      pairs_.erase(pairs_.begin() + best);
      Polynomial h = reduce(s_polynomial(polys_[p.i], polys_[p.j], ring_), reducers(), ring_, true);
      if (!h.is_zero()) insert(std::move(h));
    }
  }

  std::vector<Polynomial> reduced_basis() const {
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < polys_.size(); ++i) {
      if (!active_[i]) continue;
      bool redundant = false;
      for (std::size_t j = 0; j < polys_.size() && !redundant; ++j) {
        if (i == j || !active_[j]) continue;
        const auto& mi = polys_[i].lead_monomial();
        const auto& mj = polys_[j].lead_monomial();
        redundant = mj.divides(mi) && (!(mj == mi) || j < i);
      }
      if (!redundant) minimal.push_back(polys_[i]);
    }
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Polynomial> others;
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      // Lead stays: no other lead divides it. Only tails get reduced.
      Polynomial tail = Polynomial::from_terms(
          std::vector<Term>(minimal[i].terms().begin() + 1, minimal[i].terms().end()), ring_);
      Polynomial reduced_tail = reduce(tail, others, ring_, true);
      out.push_back(add(Polynomial::monomial(minimal[i].lead_monomial(), 1), reduced_tail, ring_));
    }
    std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
      return ring_.order.compare(a.lead_monomial(), b.lead_monomial()) < 0;
    });
    return out;
  }

 private:
  std::span<const Polynomial> reducers() const { return polys_; }

  const Ring& ring_;
  std::vector<Polynomial> polys_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
};

}  // namespace

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis, const Ring& ring) {
  return reduce(f, basis, ring, true);
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) { return normal_form(f, gb.elements, gb.ring); }

bool contains(const GroebnerBasis& gb, const Polynomial& f) { return normal_form(f, gb).is_zero(); }

bool GroebnerBasis::is_unit_ideal() const {
  return elements.size() == 1 && elements.front().lead_monomial().degree == 0;
}

GroebnerBasis buchberger(std::span<const Polynomial> gens, const Ring& ring) {
  Completion completion(ring);
  bool any = false;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    any = true;
    // Inputs may be sorted for another order; reduce against what is there.
    Polynomial h = reduce(g.reordered(ring), std::vector<Polynomial>{}, ring, true);
    completion.insert(std::move(h));
  }
  require(any, "Groebner basis of the zero ideal requested");
  completion.run();
  return GroebnerBasis{ring, completion.reduced_basis(), true};
}

GroebnerBasis buchberger(std::span<const JGenerator> gens, const Ring& ring) {
  std::vector<Polynomial> polys;
  for (const auto& g : gens) polys.push_back(Polynomial::from_generator(g, ring));
  return buchberger(polys, ring);
}

bool is_groebner_basis(std::span<const Polynomial> elements, const Ring& ring) {
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = i + 1; j < elements.size(); ++j) {
      Polynomial s = s_polynomial(elements[i].monic(ring), elements[j].monic(ring), ring);
      if (!normal_form(s, elements, ring).is_zero()) return false;
    }
  return true;
}

std::vector<ZMonomial> initial_ideal(const GroebnerBasis& gb) {
  std::vector<ZMonomial> leads;
  for (const auto& p : gb.elements) leads.push_back(to_z_monomial(p.lead_monomial(), gb.ring.nvars()));
  std::vector<ZMonomial> out;
  for (std::size_t i = 0; i < leads.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < leads.size() && !redundant; ++j)
      redundant = j != i && leads[j].divides(leads[i]) && (leads[j] != leads[i] || j < i);
    if (!redundant) out.push_back(leads[i]);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

// ---------------------------------------------------------------------------
// Elimination-based ideal operations

namespace {

struct Extended {
  Ring ring;
  std::size_t t;
};

Extended with_elimination_variable(const Ring& ring) {
  require(ring.nvars() < kMaxPolyVars, "no room for an elimination variable");
  std::vector<std::string> names = ring.names;
  std::string t = "t";
  while (std::find(names.begin(), names.end(), t) != names.end()) t += "_";
  names.push_back(t);
  const std::size_t ti = ring.nvars();
  MonomialOrder inner = ring.order;
  require(inner.kind() != OrderKind::Elim, "ideal operations need a non-elimination order");
  return Extended{Ring(std::move(names), ring.prime, MonomialOrder::elimination({ti}, inner)), ti};
}

GroebnerBasis eliminate_last(const std::vector<Polynomial>& gens, const Extended& ext, const Ring& ring) {
  GroebnerBasis big = buchberger(gens, ext.ring);
  std::vector<Polynomial> kept;
  for (const auto& p : big.elements)
    if (p.lead_monomial().exps[ext.t] == 0) kept.push_back(p.reordered(ring));
  // An elimination-order basis restricted to the small ring is a basis there.
  if (kept.empty()) return GroebnerBasis{ring, {}, true};
  return buchberger(kept, ring);
}

}  // namespace

GroebnerBasis intersect(std::span<const Polynomial> a, std::span<const Polynomial> b, const Ring& ring) {
  Extended ext = with_elimination_variable(ring);
  PolyMonomial t;
  t.exps[ext.t] = 1;
  t.degree = 1;
  const Polynomial one_minus_t = Polynomial::from_terms({{PolyMonomial{}, 1}, {t, ring.prime - 1}}, ext.ring);
  std::vector<Polynomial> gens;
  for (const auto& f : a)
    if (!f.is_zero()) gens.push_back(scale(f.reordered(ext.ring), 1, t, ext.ring));
  for (const auto& g : b)
    if (!g.is_zero()) gens.push_back(multiply(g.reordered(ext.ring), one_minus_t, ext.ring));
  require(!gens.empty(), "intersection of zero ideals");
  return eliminate_last(gens, ext, ring);
}

GroebnerBasis colon(std::span<const Polynomial> ideal, const Polynomial& f, const Ring& ring) {
  require(!f.is_zero(), "colon by the zero polynomial");
  std::vector<Polynomial> principal{f};
  GroebnerBasis meet = intersect(ideal, principal, ring);
  std::vector<Polynomial> quotients;
  for (const auto& p : meet.elements) quotients.push_back(divide_exact(p, f, ring));
  if (quotients.empty()) return GroebnerBasis{ring, {}, true};
  return buchberger(quotients, ring);
}

std::uint64_t standard_monomial_count(std::span<const ZMonomial> ini, std::size_t nvars, int k) {
  if (k < 0) return 0;
  std::uint64_t count = 0;
  for (const auto& z : monomials_of_degree(nvars, k)) {
    bool inside = std::any_of(ini.begin(), ini.end(), [&](const ZMonomial& g) { return g.divides(z); });
    if (!inside) ++count;
  }
  return count;
}

}  // namespace fibercone
