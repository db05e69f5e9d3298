#include "rflab/catalog.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

namespace rflab {

const char* to_string(CaseLabel c) noexcept {
  switch (c) {
    case CaseLabel::A: return "A";
    case CaseLabel::B: return "B";
    case CaseLabel::real: return "real";
  }
  return "?";
}

namespace {

void require_N(int N) {
  if (N < 1) throw Error(ErrorKind::domain, "catalog: N must be >= 1");
}

int count_below(double bound) { return bound > 0.0 ? static_cast<int>(std::ceil(bound - 1e-12)) : 0; }

CatalogEntry make_entry(int N, double a, double b, int m, CaseLabel label, Branch branch) {
  PotentialSpec spec = m == 0 ? PotentialSpec::scarf2(a, b, branch) : PotentialSpec::scarf2_extended(a, b, m, branch);
  return {std::move(spec), label, a, b, m, N, branch_validity(a, b), spectrum_split(a, b)};
}

}  // namespace

std::vector<std::pair<double, double>> reflectionless_pairs(int N) {
  require_N(N);
  std::vector<std::pair<double, double>> pairs;
  for (int j = 0; j < N; ++j) pairs.emplace_back(N - j - 0.5, j + 0.5);
  for (int j = 1; j <= N; ++j) pairs.emplace_back(N - j, j);
  return pairs;
}

BranchValidity branch_validity(double a, double b) { return {a > 0.0, b > 0.5}; }

SpectrumSplit spectrum_split(double a, double b) { return {count_below(a), count_below(b - 0.5)}; }

std::vector<CatalogEntry> enumerate(int N, int m) {
  require_N(N);
  if (m < 0) throw Error(ErrorKind::domain, "catalog: m must be >= 0");
  const auto pairs = reflectionless_pairs(N);
  auto label = [N](std::size_t i) { return i < static_cast<std::size_t>(N) ? CaseLabel::A : CaseLabel::B; };

  std::vector<CatalogEntry> out;
  out.reserve(static_cast<std::size_t>(expected_count(N, m)));
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto [a, b] = pairs[i];
    out.push_back(make_entry(N, a, b, 0, label(i), a > 0.0 ? Branch::normal : Branch::parametric));
  }
  for (int mm = 1; mm <= m; ++mm) {
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const auto [a, b] = pairs[i];
      const auto valid = branch_validity(a, b);
      if (valid.normal) out.push_back(make_entry(N, a, b, mm, label(i), Branch::normal));
      if (valid.parametric) out.push_back(make_entry(N, a, b, mm, label(i), Branch::parametric));
    }
  }
  return out;
}

CatalogEntry real_reference(int N) {
  require_N(N);
  return {PotentialSpec::real_sech(N), CaseLabel::real, 0.0, 0.0, 0, N, {true, false}, {N, 0}};
}

std::vector<std::vector<std::size_t>> distinct_potentials(const std::vector<CatalogEntry>& entries) {
  constexpr std::array<double, 7> probes{-3.1, -1.7, -0.6, 0.0, 0.45, 1.3, 2.9};
  std::vector<std::array<cplx, probes.size()>> samples;
  for (const auto& e : entries) {
    std::array<cplx, probes.size()> s{};
    for (std::size_t j = 0; j < probes.size(); ++j) s[j] = evaluate(e.spec, probes[j]);
    samples.push_back(s);
  }
  auto same = [&](std::size_t i, std::size_t k) {
    for (std::size_t j = 0; j < probes.size(); ++j) {
      const double scale = std::max({1.0, std::abs(samples[i][j]), std::abs(samples[k][j])});
      if (std::abs(samples[i][j] - samples[k][j]) > 1e-13 * scale) return false;
    }
    return true;
  };
  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return same(g.front(), i); });
    if (it == groups.end()) {
      groups.push_back({i});
    } else {
      it->push_back(i);
    }
  }
  return groups;
}

long long expected_count(int N, int m) { return 2LL * ((2LL * N - 1) * m + N); }

}  // namespace rflab
