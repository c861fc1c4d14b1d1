#include "fibercone/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace fibercone {

Exponent checked_add(Exponent a, Exponent b) {
  Exponent out;
  if (__builtin_add_overflow(a, b, &out)) fail(ErrorCode::Overflow, "exponent overflow in addition");
  return out;
}

Exponent checked_mul(Exponent a, Exponent b) {
  Exponent out;
  if (__builtin_mul_overflow(a, b, &out)) fail(ErrorCode::Overflow, "exponent overflow in multiplication");
  return out;
}

ExponentVector::ExponentVector(std::vector<Exponent> exps) : exps_(std::move(exps)) {
  for (Exponent e : exps_) require(e >= 0, "negative exponent");
}

Exponent ExponentVector::degree() const {
  Exponent d = 0;
  for (Exponent e : exps_) d = checked_add(d, e);
  return d;
}

bool ExponentVector::divides(const ExponentVector& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

ExponentVector ExponentVector::operator*(const ExponentVector& other) const {
  require(size() == other.size(), "exponent vectors of different length");
  std::vector<Exponent> out(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) out[i] = checked_add(exps_[i], other.exps_[i]);
  return ExponentVector(std::move(out));
}

ExponentVector ExponentVector::pow(Exponent k) const {
  std::vector<Exponent> out(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) out[i] = checked_mul(exps_[i], k);
  return ExponentVector(std::move(out));
}

std::size_t ExponentVectorHash::operator()(const ExponentVector& v) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (Exponent e : v.view()) h = (h ^ static_cast<std::size_t>(e)) * 0x100000001b3ULL;
  return h;
}

MonomialIdeal::MonomialIdeal(std::vector<ExponentVector> gens) : gens_(std::move(gens)) {
  if (gens_.empty()) fail(ErrorCode::InvalidArgument, "empty generating set");
  const std::size_t n = gens_.front().size();
  require(n > 0, "monomials need at least one variable");
  for (const auto& g : gens_) require(g.size() == n, "generators have different numbers of variables");
  for (std::size_t i = 0; i < gens_.size(); ++i)
    for (std::size_t j = 0; j < gens_.size(); ++j)
      if (i != j && gens_[i].divides(gens_[j]))
        fail(ErrorCode::InvalidArgument, "generators are not an antichain: " + format_monomial(gens_[i]) +
                                             " divides " + format_monomial(gens_[j]));
}

bool MonomialIdeal::contains(const ExponentVector& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const auto& g) { return g.divides(m); });
}

bool MonomialIdeal::operator==(const MonomialIdeal& other) const {
  auto a = gens_, b = other.gens_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

MonomialIdeal minimalize(std::span<const ExponentVector> candidates) {
  if (candidates.empty()) fail(ErrorCode::InvalidArgument, "empty generating set");
  const std::size_t n = candidates.front().size();
  require(n > 0, "monomials need at least one variable");
  for (const auto& c : candidates) require(c.size() == n, "candidates have different numbers of variables");

  if (n == 2) {
    // Staircase: ascending x, keep each strict drop in y.
    std::vector<ExponentVector> sorted(candidates.begin(), candidates.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<ExponentVector> kept;
    for (auto& c : sorted)
      if (kept.empty() || c[1] < kept.back()[1]) kept.push_back(std::move(c));
    std::sort(kept.begin(), kept.end(), std::greater<>());
    return MonomialIdeal(std::move(kept), MonomialIdeal::Trusted{});
  }

  // Ascending degree: a divisor always precedes its proper multiples.
  std::vector<ExponentVector> sorted(candidates.begin(), candidates.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    auto da = a.degree(), db = b.degree();
    return da != db ? da < db : a < b;
  });
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  std::vector<ExponentVector> kept;
  for (auto& c : sorted) {
    bool redundant = std::any_of(kept.begin(), kept.end(), [&](const auto& g) { return g.divides(c); });
    if (!redundant) kept.push_back(std::move(c));
  }
  std::sort(kept.begin(), kept.end(), std::greater<>());
  return MonomialIdeal(std::move(kept), MonomialIdeal::Trusted{});
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  require(a.nvars() == b.nvars(), "ideals in different rings");
  std::vector<ExponentVector> prods;
  prods.reserve(a.size() * b.size());
  for (const auto& g : a.gens())
    for (const auto& h : b.gens()) prods.push_back(g * h);
  return minimalize(prods);
}

MonomialIdeal power(const MonomialIdeal& ideal, int k) {
  require(k >= 1, "power exponent must be positive");
  MonomialIdeal out = ideal;
  for (int i = 1; i < k; ++i) out = product(out, ideal);
  return out;
}

bool member_strict(const ExponentVector& m, const MonomialIdeal& ideal) {
  require(m.size() == ideal.nvars(), "monomial and ideal live in different rings");
  return std::any_of(ideal.gens().begin(), ideal.gens().end(),
                     [&](const auto& g) { return g != m && g.divides(m); });
}

std::vector<std::size_t> mu_power_sequence(const MonomialIdeal& ideal, int max_power) {
  require(max_power >= 1, "power bound must be positive");
  PowerTable table(ideal);
  std::vector<std::size_t> out;
  for (int k = 1; k <= max_power; ++k) out.push_back(table.power(k).size());
  return out;
}

PowerTable::PowerTable(MonomialIdeal ideal) { powers_.push_back(std::move(ideal)); }

const MonomialIdeal& PowerTable::power(int k) {
  require(k >= 1, "power exponent must be positive");
  while (static_cast<int>(powers_.size()) < k) powers_.push_back(product(powers_.back(), powers_.front()));
  return powers_[k - 1];
}

bool PowerTable::member_strict_power(const ExponentVector& m, int k) { return member_strict(m, power(k)); }

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

MonomialIdeal parse_ideal(std::string_view text, bool minimalize_input) {
  std::vector<ExponentVector> gens;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t stop = text.find(';', start);
    if (stop == std::string_view::npos) stop = text.size();
    std::string_view tuple = trim(text.substr(start, stop - start));
    start = stop + 1;
    if (tuple.empty()) {
      if (stop == text.size()) break;
      fail(ErrorCode::Parse, "empty exponent tuple in ideal text");
    }
    std::vector<Exponent> exps;
    std::size_t pos = 0;
    while (pos <= tuple.size()) {
      std::size_t comma = tuple.find(',', pos);
      if (comma == std::string_view::npos) comma = tuple.size();
      std::string_view field = trim(tuple.substr(pos, comma - pos));
      Exponent value = 0;
      auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
      if (field.empty() || ec != std::errc() || ptr != field.data() + field.size() || value < 0)
        fail(ErrorCode::Parse, "bad exponent '" + std::string(field) + "'");
      exps.push_back(value);
      pos = comma + 1;
    }
    gens.emplace_back(std::move(exps));
  }
  if (gens.empty()) fail(ErrorCode::Parse, "empty generating set");
  for (const auto& g : gens)
    if (g.size() != gens.front().size()) fail(ErrorCode::Parse, "exponent tuples of different lengths");
  if (minimalize_input) return minimalize(gens);
  return MonomialIdeal(std::move(gens));
}

std::string format_ideal(const MonomialIdeal& ideal) {
  std::ostringstream out;
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    if (i) out << "; ";
    for (std::size_t j = 0; j < ideal.nvars(); ++j) out << (j ? "," : "") << ideal[i][j];
  }
  return out.str();
}

std::string format_monomial(const ExponentVector& m, std::string_view var_prefix) {
  std::ostringstream out;
  bool first = true;
  const bool xy = var_prefix == "x" && m.size() == 2;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!first) out << '*';
    first = false;
    if (xy)
      out << (i == 0 ? 'x' : 'y');
    else
      out << var_prefix << i + 1;
    if (m[i] > 1) out << '^' << m[i];
  }
  if (first) out << '1';
  return out.str();
}

}  // namespace fibercone
