#include "loopcut/pinch.hpp"

#include <cmath>
#include <sstream>

#include "loopcut/kinematics.hpp"

namespace loopcut {

namespace {

// scale-relative guard for the triangular divisions (p_{i+1})_i; hitting it
// means the configuration left T_n, not a numeric bug
constexpr double kDiagGuard = 1e-12;

}  // namespace

PinchData pinch_point(const KinematicConfig& config, const Tol& tol) {
  const int n = config.n;
  const int D = config.D;
  if (D < n - 1)
    throw domain_error("pinch_point: needs D >= n-1 (T_n would be empty)");

  const double scale = config.scale();

  PinchData out;
  std::vector<CVec> q;  // momenta in the triangular frame
  if (is_triangular(config.momenta, scale, tol)) {
    out.frame.M = CMat::Identity(D, D);
    out.frame.reduced = config.momenta;
    q = config.momenta;
  } else {
    out.frame = reduce_frame(config.momenta, tol);
    q = out.frame.reduced;
  }

  // partial sums P^(i) in the reduced frame
  std::vector<CVec> P(n + 1);
  P[1] = CVec::Zero(D);
  for (int i = 2; i <= n; ++i) P[i] = P[i - 1] + q[i - 2];

  CVec A = CVec::Zero(D);
  for (int i = 0; i <= n - 2; ++i) {
    const cdouble diag = q[i][i];  // (p_{i+1})_i
    if (std::abs(diag) < kDiagGuard * scale) {
      std::ostringstream msg;
      msg << "pinch_point: triangular diagonal (p_" << (i + 1) << ")_" << i
          << " ~ 0; leading Gram minor " << (i + 1)
          << " degenerate (outside T_n)";
      throw domain_error(msg.str());
    }
    cdouble acc = dot(P[i + 2], P[i + 2]) - config.mass_sq(1) +
                  config.mass_sq(i + 2);
    for (int j = 0; j < i; ++j) acc += 2.0 * A[j] * P[i + 2][j];
    A[i] = -acc / (2.0 * diag);
  }

  out.A = A;
  out.r_squared = -config.mass_sq(1) - dot(A, A);
  return out;
}

PinchData subset_pinch(const KinematicConfig& config, const std::vector<int>& I,
                       const Tol& tol) {
  return pinch_point(contract(config, I), tol);
}

VanishingSphere vanishing_sphere(const PinchData& pinch, int edge_count,
                                 int D) {
  VanishingSphere s;
  s.center = pinch.A;
  s.radius_squared = pinch.r_squared;
  s.free_from = edge_count - 1;
  s.free_to = D;
  return s;
}

CVec pinch_location_in_config_frame(const KinematicConfig& config,
                                    const std::vector<int>& I,
                                    const Tol& tol) {
  const KinematicConfig sub = contract(config, I);
  const PinchData pd = pinch_point(sub, tol);
  return pd.frame.M.transpose() * pd.A - partial_sum(config, I.front());
}

AlphaSolution solve_alpha(const KinematicConfig& config,
                          const std::vector<int>& I, const CVec& k,
                          const Tol& tol) {
  const int n = config.n;
  const int D = config.D;
  if (I.size() < 2) throw domain_error("solve_alpha: subset needs >= 2 edges");
  for (size_t l = 0; l + 1 < I.size(); ++l)
    if (I[l] >= I[l + 1])
      throw usage_error("solve_alpha: subset must be strictly ascending");
  if (I.front() < 1 || I.back() > n)
    throw usage_error("solve_alpha: subset indices out of range");
  if ((int)k.size() != D) throw usage_error("solve_alpha: k dimension");

  const double scale = config.scale();
  if (!is_triangular(config.momenta, scale, tol))
    throw usage_error("solve_alpha: momenta must be in the triangular frame");

  std::vector<CVec> P(n + 1);
  P[1] = CVec::Zero(D);
  for (int i = 2; i <= n; ++i) P[i] = P[i - 1] + config.momenta[i - 2];

  const int m = (int)I.size();
  AlphaSolution out;
  out.alpha.assign(n, cdouble(0.0, 0.0));

  // vector equation k + sum alpha_i P^(i) = 0, solved from the top
  // triangular component down: component i_j - 2 pins alpha_{i_j}
  for (int j = m - 1; j >= 1; --j) {
    const int ij = I[j];
    const int comp = ij - 2;  // highest component reached by P^(i_j)
    const cdouble lead = P[ij][comp];
    if (std::abs(lead) < kDiagGuard * scale)
      throw domain_error("solve_alpha: singular triangular system (P^(i) has "
                         "vanishing leading component; outside T_n)");
    cdouble acc = k[comp];
    for (int l = j + 1; l < m; ++l) acc += out.alpha[I[l] - 1] * P[I[l]][comp];
    out.alpha[ij - 1] = -acc / lead;
  }
  cdouble rest = 0.0;
  for (int j = 1; j < m; ++j) rest += out.alpha[I[j] - 1];
  out.alpha[I[0] - 1] = 1.0 - rest;

  // residuals
  CVec vec = k;
  for (int j = 0; j < m; ++j) vec += out.alpha[I[j] - 1] * P[I[j]];
  double vr = 0.0;
  for (int c = 0; c < D; ++c) vr = std::max(vr, std::abs(vec[c]));
  out.vector_residual = vr;

  out.onshell.reserve(m);
  double osr = 0.0;
  for (int j = 0; j < m; ++j) {
    const int i = I[j];
    const CVec kp = k + P[i];
    const cdouble Qi = dot(kp, kp) + config.mass_sq(i);
    out.onshell.push_back(Qi);
    osr = std::max(osr, std::abs(Qi));
  }
  out.onshell_residual = osr;
  return out;
}

}  // namespace loopcut
