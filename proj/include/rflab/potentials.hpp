#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "rflab/core.hpp"

namespace rflab {

/// Which of the two Scarf-II superpotentials (and spectra) is meant.
enum class Branch { normal, parametric };

enum class Family {
  real_sech,
  scarf2,
  scarf2_extended,
  isospectral_family,
  pursey,
  abraham_moses,
  partner_of
};

const char* to_string(Branch b) noexcept;
const char* to_string(Family f) noexcept;

struct RealSech {
  int N;
};

struct ScarfII {
  double a;
  double b;
  bool parametric = false;
};

struct ScarfIIExtended {
  double a;
  double b;
  int m;
  bool parametric = false;
};

struct IsospectralFamily {
  int N;
  double lambda;  // > 0 or < -1; +-infinity gives back the undeformed well
};

struct Pursey {
  int N;
};

struct AbrahamMoses {
  int N;
};

class PotentialSpec;

struct PartnerOf {
  std::shared_ptr<const PotentialSpec> base;
  Branch branch;
};

/// Immutable tagged description of one potential. Construct through the
/// validating factories; every family-specific rule is checked there.
class PotentialSpec {
 public:
  using Params =
      std::variant<RealSech, ScarfII, ScarfIIExtended, IsospectralFamily, Pursey, AbrahamMoses, PartnerOf>;

  static PotentialSpec real_sech(int N);
  static PotentialSpec scarf2(double a, double b, Branch branch = Branch::normal);
  static PotentialSpec scarf2_extended(double a, double b, int m, Branch branch = Branch::normal);
  static PotentialSpec isospectral_family(int N, double lambda);
  static PotentialSpec pursey(int N);
  static PotentialSpec abraham_moses(int N);
  static PotentialSpec partner_of(const PotentialSpec& base, Branch branch = Branch::normal);

  Family family() const noexcept;
  const Params& params() const noexcept { return params_; }

  template <class T>
  const T* get_if() const noexcept {
    return std::get_if<T>(&params_);
  }

  /// Short human-readable label, e.g. "scarf2(a=2,b=1,normal)".
  std::string describe() const;

 private:
  explicit PotentialSpec(Params p) : params_(std::move(p)) {}
  Params params_;
};

/// Complex samples on a uniform grid x_i = x0 + i dx.
struct GridFunction {
  double x0 = 0.0;
  double dx = 1.0;
  std::vector<cplx> values;

  GridFunction() = default;
  GridFunction(double x0_, double dx_, std::vector<cplx> values_);

  std::size_t size() const noexcept { return values.size(); }
  double x(std::size_t i) const noexcept { return x0 + static_cast<double>(i) * dx; }
};

/// -N(N+1) sech^2 x
double eval_real_sech(int N, double x);

/// -[b^2 + a(a+1)] sech^2 x + i b(2a+1) sech x tanh x
cplx eval_scarf2(double a, double b, double x);

/// The Scarf-II potential after a -> b-1/2, b -> a+1/2 (identical values).
cplx eval_scarf2_parametric(double a, double b, double x);

/// Rationally extended Scarf-II. With parametric = true the substitution
/// a -> b-1/2, b -> a+1/2 is applied first, giving a different potential.
/// Throws Error(singular) where P_m^{(-alpha-1,beta-1)}(i sinh x) vanishes.
cplx eval_scarf2_extended(double a, double b, int m, double x, bool parametric = false);

/// -N(N+1) sech^2 x - 2 d^2/dx^2 ln(I(x) + lambda). lambda = 0 and -1 are
/// routed to the Pursey and Abraham-Moses potentials; (-1, 0) is rejected.
double eval_isospectral_family(int N, double lambda, double x);

enum class IsospectralLimit { pursey, abraham_moses };

double eval_pursey_am(int N, IsospectralLimit which, double x);

/// W^2 + W' + E_0 for the selected superpotential of `base`, i.e. the SUSY
/// partner with the base spectrum's zero of energy restored.
cplx partner_potential(const PotentialSpec& base, Branch branch, double x);

/// Pointwise value of any potential.
cplx evaluate(const PotentialSpec& spec, double x);

/// Samples `spec` at x0 + i dx, i < count. Singular points are reported with
/// their grid index.
GridFunction sample(const PotentialSpec& spec, double x0, double dx, std::size_t count);

}  // namespace rflab
