#pragma once

#include <random>
#include <vector>

#include "../oracle.hpp"
#include "fibercone/depth.hpp"
#include "fibercone/serialize.hpp"

namespace support {

inline std::vector<oracle::Vec> gens_of(const fibercone::MonomialIdeal& ideal) {
  std::vector<oracle::Vec> out;
  for (const auto& g : ideal.gens()) out.push_back(g.values());
  return out;
}

inline fibercone::MonomialIdeal ideal_of(const std::vector<oracle::Vec>& gens) {
  std::vector<fibercone::ExponentVector> v;
  for (const auto& g : gens) v.emplace_back(g);
  return fibercone::MonomialIdeal(std::move(v));
}

inline std::vector<oracle::Gen> oracle_gens(const std::vector<fibercone::JGenerator>& gens) {
  std::vector<oracle::Gen> out;
  for (const auto& g : gens) {
    oracle::Gen o{g.lead().values(), std::nullopt};
    if (g.is_binomial()) o.trail = g.trail().values();
    out.push_back(std::move(o));
  }
  return out;
}

inline std::vector<fibercone::JGenerator> gens(std::initializer_list<const char*> texts, std::size_t nvars = 4) {
  std::vector<fibercone::JGenerator> out;
  for (const char* t : texts) out.push_back(fibercone::parse_generator(t, nvars));
  return out;
}

/// Every generator maps to zero in F(I), by the brute-force oracle.
inline bool sound(const fibercone::MonomialIdeal& ideal, const std::vector<fibercone::JGenerator>& gens) {
  auto og = gens_of(ideal);
  for (const auto& g : gens) {
    auto lead = oracle::fiber_image(og, g.lead().values());
    if (g.is_monomial()) {
      if (lead) return false;
    } else if (lead != oracle::fiber_image(og, g.trail().values())) {
      return false;
    }
  }
  return true;
}

/// Checks that gens generate exactly the kernel in every degree up to k,
/// using the brute-force oracle. Together with sound() this is equality.
inline bool generates_kernel_through(const fibercone::MonomialIdeal& ideal,
                                     const std::vector<fibercone::JGenerator>& gens, int k) {
  auto og = gens_of(ideal);
  auto ogens = oracle_gens(gens);
  for (int d = 1; d <= k; ++d)
    if (oracle::ideal_dim(ogens, ideal.size(), d) != oracle::graded_kernel(og, d).kernel_dim) return false;
  return true;
}

}  // namespace support
