#ifndef LOOPCUT_TYPES_HPP
#define LOOPCUT_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace loopcut {

using cdouble = std::complex<double>;

/// Complex momentum vector. Components are indexed 0..D-1.
///
/// Careful: Eigen's .dot() conjugates its first argument. All momentum
/// products in this library are the symmetric bilinear form sum_i a_i*b_i,
/// provided by loopcut::dot(). Never use .dot() on these.
using CVec = Eigen::VectorXcd;

using CMat = Eigen::MatrixXcd;

/// Thrown for inputs outside the admissible kinematic domain
/// (degenerate frames, off-support cuts, isotropic vectors, ...).
/// The CLI maps this to exit code 2.
class domain_error : public std::runtime_error {
 public:
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown for malformed requests (bad labels, bad config files, ...).
/// The CLI maps this to exit code 1.
class usage_error : public std::runtime_error {
 public:
  explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

/// Default tolerances. Membership predicates take these explicitly.
struct Tol {
  double abs = 1e-9;
  double rel = 1e-9;
};

/// One-loop kinematic configuration: n propagators in D dimensions with
/// masses m_1..m_n and external momenta p_1..p_{n-1}. The i-th propagator
/// is 1/((k + P^(i))^2 + m_i^2)^{lambda_i} with P^(i) = p_1 + ... + p_{i-1}.
struct KinematicConfig {
  int n = 0;
  int D = 0;
  std::vector<double> masses;      // n entries, strictly positive
  std::vector<CVec> momenta;       // n-1 entries, each of size D
  std::vector<cdouble> regulators; // n entries, default 1

  KinematicConfig() = default;
  KinematicConfig(int n_, int D_, std::vector<double> masses_,
                  std::vector<CVec> momenta_,
                  std::vector<cdouble> regulators_ = {});

  double mass_sq(int i) const { return masses.at(i - 1) * masses.at(i - 1); }

  /// Characteristic scale used for relative tolerances: the largest of
  /// all |momentum components| and masses, at least 1.
  double scale() const;
};

inline constexpr double kPi = 3.14159265358979323846;

}  // namespace loopcut

#endif  // LOOPCUT_TYPES_HPP
