#pragma once

#include <array>
#include <vector>

#include "whframes/algebra.hpp"

namespace whframes::data {

/// Entries of the dimension-6 fiducial in grassl_tower(), unchecked.
std::vector<algebra::AlgebraicNumber> grassl_fiducial_entries();

/// (Σ_k t_k ω^k · θ + Σ_k c_k ω^k) / den with ω = ω12, k = 0..5.
struct AppendixEntry {
  std::array<int, 6> theta;
  std::array<int, 6> constant;
  int den;
};
using AppendixVector = std::array<AppendixEntry, 6>;

const std::vector<AppendixVector>& appendix_table();

}  // namespace whframes::data
