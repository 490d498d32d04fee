#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace ptband {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr double pi = 3.141592653589793238462643383279502884;

enum class Boundary { Periodic, Open };
enum class Engine { Spectral, Direct };

std::string to_string(Boundary b);
std::string to_string(Engine e);

/// Raised when an operation needs the biorthogonal mode pair at a momentum
/// where the two bands coalesce (|eps_k| below the exceptional tolerance);
/// the mode construction is singular there.
class ExceptionalModeError : public std::runtime_error {
public:
    ExceptionalModeError(double k, double eps_abs);
    double momentum() const noexcept { return k_; }

private:
    double k_;
};

/// Raised by equivalence_map outside the real-spectrum region, where no
/// Hermitian chain with real parameters shares the spectrum.
class NoCounterpartError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace ptband
