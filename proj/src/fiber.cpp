#include "fibercone/fiber.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "fibercone/linalg.hpp"
#include "fibercone/modular.hpp"

namespace fibercone {

// ---------------------------------------------------------------------------
// ZMonomial / JGenerator

ZMonomial::ZMonomial(std::vector<int> exps) : exps_(std::move(exps)) {
  for (int e : exps_) require(e >= 0, "negative exponent");
}

std::size_t ZMonomialHash::operator()(const ZMonomial& z) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (int e : z.values()) h = (h ^ static_cast<std::size_t>(e)) * 0x100000001b3ULL;
  return h;
}

ZMonomial ZMonomial::variable(std::size_t nvars, std::size_t index, int exponent) {
  require(index < nvars, "variable index out of range");
  ZMonomial z(nvars);
  z.exps_[index] = exponent;
  return z;
}

int ZMonomial::degree() const noexcept { return std::accumulate(exps_.begin(), exps_.end(), 0); }

bool ZMonomial::divides(const ZMonomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

ZMonomial ZMonomial::operator*(const ZMonomial& other) const {
  require(size() == other.size(), "monomials in different rings");
  ZMonomial out(size());
  for (std::size_t i = 0; i < size(); ++i) {
    if (__builtin_add_overflow(exps_[i], other.exps_[i], &out.exps_[i]))
      fail(ErrorCode::Overflow, "fiber exponent overflow");
  }
  return out;
}

ZMonomial ZMonomial::operator/(const ZMonomial& divisor) const {
  require(divisor.divides(*this), "inexact monomial division");
  ZMonomial out(size());
  for (std::size_t i = 0; i < size(); ++i) out.exps_[i] = exps_[i] - divisor.exps_[i];
  return out;
}

ZMonomial ZMonomial::gcd(const ZMonomial& other) const {
  ZMonomial out(size());
  for (std::size_t i = 0; i < size(); ++i) out.exps_[i] = std::min(exps_[i], other.exps_[i]);
  return out;
}

ZMonomial ZMonomial::lcm(const ZMonomial& other) const {
  ZMonomial out(size());
  for (std::size_t i = 0; i < size(); ++i) out.exps_[i] = std::max(exps_[i], other.exps_[i]);
  return out;
}

ZMonomial ZMonomial::permuted(std::span<const std::size_t> perm) const {
  require(perm.size() == size(), "permutation of wrong length");
  ZMonomial out(size());
  for (std::size_t i = 0; i < size(); ++i) out.exps_[perm[i]] = exps_[i];
  return out;
}

std::string ZMonomial::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!first) out << '*';
    first = false;
    out << 'z' << i + 1;
    if (exps_[i] > 1) out << '^' << exps_[i];
  }
  if (first) out << '1';
  return out.str();
}

JGenerator JGenerator::monomial(ZMonomial m) { return JGenerator(std::move(m), std::nullopt); }

JGenerator JGenerator::binomial(ZMonomial a, ZMonomial b) {
  require(a.size() == b.size(), "binomial sides in different rings");
  require(a.degree() == b.degree(), "binomial is not homogeneous");
  ZMonomial g = a.gcd(b);
  a = a / g;
  b = b / g;
  require(a != b, "binomial with equal sides");
  if (a < b) std::swap(a, b);
  return JGenerator(std::move(a), std::move(b));
}

JGenerator JGenerator::permuted(std::span<const std::size_t> perm) const {
  if (is_monomial()) return monomial(lead_.permuted(perm));
  return binomial(lead_.permuted(perm), trail_->permuted(perm));
}

std::string JGenerator::to_string() const {
  if (is_monomial()) return lead_.to_string();
  return lead_.to_string() + " - " + trail_->to_string();
}

namespace {

ZMonomial parse_z_monomial(std::string_view text, std::size_t nvars) {
  std::vector<int> exps(nvars, 0);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_int = [&](int& value) {
    skip_ws();
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc()) fail(ErrorCode::Parse, "expected integer in '" + std::string(text) + "'");
    pos = ptr - text.data();
  };
  skip_ws();
  if (pos < text.size() && text[pos] == '1' && text.find('z') == std::string_view::npos) return ZMonomial(exps);
  while (true) {
    skip_ws();
    if (pos >= text.size() || text[pos] != 'z') fail(ErrorCode::Parse, "expected variable in '" + std::string(text) + "'");
    ++pos;
    int index = 0;
    read_int(index);
    if (index < 1 || static_cast<std::size_t>(index) > nvars)
      fail(ErrorCode::Parse, "variable z" + std::to_string(index) + " out of range");
    int e = 1;
    skip_ws();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      read_int(e);
      if (e < 0) fail(ErrorCode::Parse, "negative exponent");
    }
    exps[index - 1] += e;
    skip_ws();
    if (pos >= text.size()) break;
    if (text[pos] != '*') fail(ErrorCode::Parse, "unexpected character in '" + std::string(text) + "'");
    ++pos;
  }
  return ZMonomial(exps);
}

}  // namespace

JGenerator parse_generator(std::string_view text, std::size_t nvars) {
  auto minus = text.find('-');
  if (minus == std::string_view::npos) return JGenerator::monomial(parse_z_monomial(text, nvars));
  return JGenerator::binomial(parse_z_monomial(text.substr(0, minus), nvars),
                              parse_z_monomial(text.substr(minus + 1), nvars));
}

// ---------------------------------------------------------------------------
// Graded enumeration

namespace {

// C(d + m - 1, m - 1), the number of degree-d monomials in m variables.
std::uint64_t count_monomials(int degree, std::size_t nvars) {
  if (degree < 0) return 0;
  if (nvars == 0) return degree == 0 ? 1 : 0;
  // C(d+m-1, m-1) via the multiplicative formula, exact at each step.
  std::uint64_t out = 1;
  const std::uint64_t k = nvars - 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    std::uint64_t num = static_cast<std::uint64_t>(degree) + i;
    unsigned __int128 prod = static_cast<unsigned __int128>(out) * num;
    if (prod / i > UINT64_MAX) fail(ErrorCode::Overflow, "monomial count overflow");
    out = static_cast<std::uint64_t>(prod / i);
  }
  return out;
}

void enumerate_rec(std::vector<int>& cur, std::size_t pos, int remaining, std::vector<ZMonomial>& out) {
  if (pos + 1 == cur.size()) {
    cur[pos] = remaining;
    out.emplace_back(cur);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur[pos] = e;
    enumerate_rec(cur, pos + 1, remaining - e, out);
  }
  cur[pos] = 0;
}

}  // namespace

std::vector<ZMonomial> monomials_of_degree(std::size_t nvars, int degree) {
  require(nvars >= 1, "need at least one variable");
  std::vector<ZMonomial> out;
  if (degree < 0) return out;
  out.reserve(count_monomials(degree, nvars));
  std::vector<int> cur(nvars, 0);
  enumerate_rec(cur, 0, degree, out);
  return out;
}

std::size_t graded_rank(const ZMonomial& z) {
  // Vectors with the same prefix and a larger entry at position i come
  // first; there are count_monomials(rem - e_i - 1, m - i) of them.
  std::size_t rank = 0;
  int remaining = z.degree();
  const std::size_t m = z.size();
  for (std::size_t i = 0; i + 1 < m; ++i) {
    if (z[i] < remaining) rank += count_monomials(remaining - z[i] - 1, m - i);
    remaining -= z[i];
  }
  return rank;
}

// ---------------------------------------------------------------------------
// Images in the fiber cone

ExponentVector evaluate(const MonomialIdeal& ideal, const ZMonomial& z) {
  require(z.size() == ideal.size(), "fiber monomial has wrong number of variables");
  ExponentVector w(ideal.nvars());
  for (std::size_t i = 0; i < z.size(); ++i)
    if (z[i] > 0) w = w * ideal[i].pow(z[i]);
  return w;
}

std::optional<ExponentVector> image_of_z_monomial(const MonomialIdeal& ideal, const ZMonomial& z) {
  ExponentVector w = evaluate(ideal, z);
  const int k = z.degree();
  if (k == 0) return w;
  if (member_strict(w, power(ideal, k))) return std::nullopt;
  return w;
}

bool is_kernel_element(const MonomialIdeal& ideal, const JGenerator& g) {
  if (g.is_monomial()) return !image_of_z_monomial(ideal, g.lead()).has_value();
  auto a = image_of_z_monomial(ideal, g.lead());
  auto b = image_of_z_monomial(ideal, g.trail());
  // A binomial with both sides zero is in J but is never a minimal generator.
  return a.has_value() && b.has_value() && *a == *b;
}

// ---------------------------------------------------------------------------
// KernelReport

std::size_t KernelReport::mu() const {
  std::size_t n = 0;
  for (const auto& [d, gens] : generators_by_degree) n += gens.size();
  return n;
}

std::vector<JGenerator> KernelReport::generators() const {
  std::vector<JGenerator> out;
  for (const auto& [d, gens] : generators_by_degree) out.insert(out.end(), gens.begin(), gens.end());
  return out;
}

// ---------------------------------------------------------------------------
// Combinatorial kernel algorithm

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), rank_(n, 0) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::uint8_t> rank_;
};

constexpr std::size_t kZeroClass = static_cast<std::size_t>(-1);

}  // namespace

KernelBuilder::KernelBuilder(MonomialIdeal ideal) : ideal_(ideal), powers_(std::move(ideal)) {
  mu_powers_.push_back(ideal_.size());
}

const std::vector<JGenerator>& KernelBuilder::advance() {
  const int k = ++degree_;
  const std::size_t m = ideal_.size();
  const MonomialIdeal& power_k = powers_.power(k);
  mu_powers_.push_back(power_k.size());

  std::unordered_map<ExponentVector, std::size_t, ExponentVectorHash> fiber_of;
  fiber_of.reserve(power_k.size() * 2);
  for (std::size_t i = 0; i < power_k.size(); ++i) fiber_of.emplace(power_k[i], i);

  // Nodes in lex-descending order, so the smallest index of a component is
  // its lex-largest member.
  std::vector<ZMonomial> layer = monomials_of_degree(m, k);
  std::vector<std::size_t> fiber(layer.size());
  for (std::size_t n = 0; n < layer.size(); ++n) {
    auto it = fiber_of.find(evaluate(ideal_, layer[n]));
    fiber[n] = it == fiber_of.end() ? kZeroClass : it->second;
  }

  DisjointSets components(layer.size());
  std::vector<char> dead(layer.size(), 0);
  for (const auto& [d, gens] : found_) {
    std::vector<ZMonomial> shifts = monomials_of_degree(m, k - d);
    for (const auto& g : gens) {
      for (const auto& c : shifts) {
        std::size_t a = graded_rank(g.lead() * c);
        if (g.is_monomial()) {
          dead[a] = 1;
          continue;
        }
        std::size_t b = graded_rank(g.trail() * c);
        if (fiber[a] != fiber[b]) fail(ErrorCode::InvalidArgument, "shifted relation joins distinct fibers");
        components.unite(a, b);
      }
    }
  }

  std::vector<std::size_t> root(layer.size());
  std::vector<char> root_dead(layer.size(), 0);
  std::vector<std::size_t> representative(layer.size(), kZeroClass);
  for (std::size_t n = 0; n < layer.size(); ++n) {
    root[n] = components.find(n);
    if (dead[n]) root_dead[root[n]] = 1;
    if (representative[root[n]] == kZeroClass) representative[root[n]] = n;
  }

  std::vector<JGenerator> fresh;
  std::vector<std::vector<std::size_t>> reps_in_fiber(power_k.size());
  for (std::size_t n = 0; n < layer.size(); ++n) {
    if (root[n] != n) continue;
    std::size_t rep = representative[n];
    if (fiber[n] == kZeroClass) {
      if (!root_dead[n]) fresh.push_back(JGenerator::monomial(layer[rep]));
    } else {
      reps_in_fiber[fiber[n]].push_back(rep);
    }
  }
  for (auto& reps : reps_in_fiber) {
    if (reps.size() < 2) continue;
    std::sort(reps.begin(), reps.end());
    for (std::size_t i = 1; i < reps.size(); ++i) fresh.push_back(JGenerator::binomial(layer[reps[0]], layer[reps[i]]));
  }
  std::sort(fresh.begin(), fresh.end(), std::greater<>());
  auto& slot = found_[k];
  slot = std::move(fresh);
  return slot;
}

void KernelBuilder::advance_to(int degree) {
  while (degree_ < degree) advance();
}

KernelReport KernelBuilder::report() const {
  KernelReport out{ideal_, degree_, {}, mu_powers_, 0};
  for (const auto& [d, gens] : found_)
    if (!gens.empty()) out.generators_by_degree[d] = gens;
  int window = 0;
  for (int d = degree_; d >= 2; --d) {
    auto it = found_.find(d);
    if (it != found_.end() && !it->second.empty()) break;
    ++window;
  }
  out.stability_window = window;
  return out;
}

KernelReport compute_j(const MonomialIdeal& ideal, int max_degree) {
  require(max_degree >= 2, "degree bound must be at least 2");
  KernelBuilder builder(ideal);
  builder.advance_to(max_degree);
  return builder.report();
}

KernelReport compute_j_until_stable(const MonomialIdeal& ideal, int min_degree, int window, int max_degree) {
  require(min_degree >= 2 && max_degree >= min_degree, "bad degree range");
  KernelBuilder builder(ideal);
  builder.advance_to(min_degree);
  KernelReport rep = builder.report();
  while (rep.stability_window < window && builder.degree() < max_degree) {
    builder.advance();
    rep = builder.report();
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Linear-algebra cross-check

RankCheck kernel_rank_dimensions(const MonomialIdeal& ideal, int k, std::span<const JGenerator> found_below,
                                 std::span<const JGenerator> found_at_k, std::uint32_t prime) {
  modp::require_odd_prime(prime);
  require(k >= 1, "degree must be positive");
  const std::size_t m = ideal.size();
  std::vector<ZMonomial> basis = monomials_of_degree(m, k);

  // phi_k: rows are degree-k fiber monomials, columns minimal generators of I^k.
  MonomialIdeal power_k = power(ideal, k);
  std::vector<SparseRow> phi_rows;
  phi_rows.reserve(basis.size());
  for (const auto& z : basis) {
    ExponentVector w = evaluate(ideal, z);
    SparseRow row;
    for (std::size_t c = 0; c < power_k.size(); ++c)
      if (power_k[c] == w) row.emplace_back(static_cast<std::uint32_t>(c), 1u);
    phi_rows.push_back(std::move(row));
  }
  const std::size_t phi_rank = rank_mod_p(phi_rows, power_k.size(), prime);

  // Degree-k part of the ideal generated by the lower-degree generators.
  std::unordered_map<ZMonomial, std::uint32_t, ZMonomialHash> column;
  for (std::size_t i = 0; i < basis.size(); ++i) column.emplace(basis[i], static_cast<std::uint32_t>(i));
  RowEchelon shifted(basis.size(), prime);
  for (const auto& g : found_below) {
    require(g.degree() < k, "lower generator of too high degree");
    for (const auto& c : monomials_of_degree(m, k - g.degree())) {
      SparseRow row;
      row.emplace_back(column.at(g.lead() * c), 1u);
      if (g.is_binomial()) row.emplace_back(column.at(g.trail() * c), prime - 1);
      std::sort(row.begin(), row.end());
      shifted.insert(row);
    }
  }
  const std::size_t shifted_rank = shifted.rank();
  for (const auto& g : found_at_k) {
    require(g.degree() == k, "generator of the wrong degree");
    SparseRow row;
    row.emplace_back(column.at(g.lead()), 1u);
    if (g.is_binomial()) row.emplace_back(column.at(g.trail()), prime - 1);
    std::sort(row.begin(), row.end());
    shifted.insert(row);
  }
  return RankCheck{basis.size() - phi_rank, shifted_rank, found_at_k.size(), shifted.rank()};
}

bool rank_cross_check(const MonomialIdeal& ideal, int k, std::span<const JGenerator> found_below,
                      std::span<const JGenerator> found_at_k, std::uint32_t prime) {
  return kernel_rank_dimensions(ideal, k, found_below, found_at_k, prime).agrees();
}

}  // namespace fibercone
