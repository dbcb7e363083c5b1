#ifndef SPINORLAB_ERROR_HPP
#define SPINORLAB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace spinorlab {

/// Input outside the mathematical domain of an operation (off-shell momentum,
/// non-normalized coefficients, |r| > 1, ...).
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A numerical scheme failed to meet its own accuracy contract.
class numerical_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Root bracketing or iteration failure in the axis solvers.
class solver_error : public numerical_error {
 public:
  using numerical_error::numerical_error;
};

}  // namespace spinorlab

#endif  // SPINORLAB_ERROR_HPP
