#pragma once

#include <cstddef>
#include <vector>

#include "rflab/potentials.hpp"

namespace rflab {

/// A: a and b both half-integers. B: both integers. real: the -N(N+1) sech^2 well.
enum class CaseLabel { A, B, real };

const char* to_string(CaseLabel c) noexcept;

struct BranchValidity {
  bool normal = false;      // a > 0
  bool parametric = false;  // b > 1/2
};

struct SpectrumSplit {
  int from_normal = 0;      // #{n >= 0 : n < a}
  int from_parametric = 0;  // #{n >= 0 : n < b - 1/2}
};

struct CatalogEntry {
  PotentialSpec spec;
  CaseLabel case_label;
  double a = 0.0;
  double b = 0.0;
  int m = 0;
  int n_bound = 0;
  BranchValidity branch_validity;
  SpectrumSplit spectrum_split;
};

/// Reflectionless Scarf-II pairs for N bound states:
/// A: [(2N-1)/2, 1/2], [(2N-3)/2, 3/2], ..., [1/2, (2N-1)/2]
/// B: [N-1, 1], [N-2, 2], ..., [0, N]
std::vector<std::pair<double, double>> reflectionless_pairs(int N);

BranchValidity branch_validity(double a, double b);
SpectrumSplit spectrum_split(double a, double b);

/// The 2N conventional entries, then for each m' in 1..m one extended entry
/// per valid branch of every pair. Length 2[(2N-1)m + N].
std::vector<CatalogEntry> enumerate(int N, int m);

/// The real well with the same number of bound states, for side-by-side use.
CatalogEntry real_reference(int N);

/// Indices of `entries` grouped by pointwise-equal potential (1e-13 relative
/// on a fixed probe grid), in order of first appearance.
std::vector<std::vector<std::size_t>> distinct_potentials(const std::vector<CatalogEntry>& entries);

/// 2[(2N-1)m + N]
long long expected_count(int N, int m);

}  // namespace rflab
