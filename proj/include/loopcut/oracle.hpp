#ifndef LOOPCUT_ORACLE_HPP
#define LOOPCUT_ORACLE_HPP

#include "loopcut/types.hpp"

namespace loopcut {

struct EuclideanResult {
  cdouble value;
  double error_estimate = 0.0;
  long nodes = 0;
};

struct EuclideanOpts {
  double rel_tol = 1e-6;
  int start_order = 16;   // per-axis Gauss-Legendre order, doubled
  int max_order = 256;
  unsigned long seed = 1; // Monte Carlo above D = 4; same seed, same bits
  long mc_samples = 400000;
};

/// Direct quadrature of the momentum integral at (near-)Euclidean momenta:
/// tan-substitution per axis maps R^D to a box, tensor Gauss-Legendre with
/// order doubling below D = 5, stratified Monte Carlo above. Refuses
/// configurations failing the power-counting bound 2 Re(sum lambda) > D.
EuclideanResult euclidean_integral(const KinematicConfig& config, int D,
                                   const EuclideanOpts& opts = {});

struct HolomorphyProbe {
  double residual_abs = 0.0;
  double residual_rel = 0.0;
  bool inconclusive = false;
};

/// Compare the directional second derivative of the integral computed with
/// real steps against the one computed with imaginary steps; for a
/// holomorphic function the two agree. Steps move p_1 along `direction`.
HolomorphyProbe holomorphy_probe(const KinematicConfig& config, int D,
                                 const CVec& direction, double h,
                                 const EuclideanOpts& opts = {});

}  // namespace loopcut

#endif  // LOOPCUT_ORACLE_HPP
