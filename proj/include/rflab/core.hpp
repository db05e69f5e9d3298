#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

namespace rflab {

using cplx = std::complex<double>;

/// A complex-valued function of one real variable (potential, wavefunction, ...).
using RealToComplex = std::function<cplx(double)>;

enum class ErrorKind {
  pole,             // Gamma function or amplitude evaluated at a pole
  domain,           // argument outside the documented domain
  singular,         // vanishing denominator inside a closed form
  index,            // state index beyond the number of bound states
  unsupported,      // operation not defined for this potential family
  evanescent,       // scattering channel closed
  non_convergence,  // numerical refinement did not settle
  usage             // malformed CLI input
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what,
        std::optional<std::size_t> index = std::nullopt)
      : std::runtime_error(what), kind_(kind), index_(index) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// Grid index of the offending point, when the error came from sampling.
  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> index_;
};

}  // namespace rflab
