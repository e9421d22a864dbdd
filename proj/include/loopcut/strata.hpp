#ifndef LOOPCUT_STRATA_HPP
#define LOOPCUT_STRATA_HPP

#include <string>
#include <vector>

#include "loopcut/types.hpp"

namespace loopcut {

/// Homogeneous coordinates [u : k] on projective space; (u, k) != 0 and
/// equality is up to an overall complex scale.
struct ProjPoint {
  cdouble u;
  CVec k;
};

/// Propagator quadric Q_i(p)(u, k) = (k + u P^(i))^2 + u^2 m_i^2.
/// Homogeneous of degree 2 in (u, k).
cdouble Q(const KinematicConfig& config, int i, const ProjPoint& point);

/// Reduction function f_{i,j} with the substitution identity
/// Q_j - Q_i = u * f_{i,j}:
///   f_{i,j}((u,k),p) = 2 (P^(j) - P^(i)).(k + u P^(i))
///                      + u ((P^(j) - P^(i))^2 - m_i^2 + m_j^2).
/// At u = 0 this is 2 (P^(j) - P^(i)).k.
cdouble f(const KinematicConfig& config, int i, int j, const ProjPoint& point);

struct RankResult {
  int rank = 0;
  bool independent = false;
};

/// Numeric rank of the normal directions {k + P^(i)}_{i in I} via singular
/// values with threshold 1e-8 * sigma_max. independent == (rank == |I|).
RankResult general_position(const KinematicConfig& config,
                            const std::vector<int>& I, const CVec& k);

enum class Stratum { AFin, AInf, Boundary, None };

std::string to_string(Stratum s);

/// Classify a projective point against the stratum of subset I with the
/// distinguished index i_1 = min(I):
///   member of B_I:  Q_{i_1} = 0 and f_{i_1,i} = 0 for all i in I\{i_1}
///   A_fin: u != 0, Q_i != 0 for i < i_1, f_{i_1,i} != 0 for i not in I,
///          i > i_1
///   A_inf: same strict conditions with u = 0
/// Returns Boundary when a strict condition sits within tol of zero, and
/// None when the point is not in B_I at all.
Stratum stratum_membership(const KinematicConfig& config,
                           const std::vector<int>& I, const ProjPoint& point,
                           const Tol& tol = {});

struct WickProfile {
  struct Sample {
    double s;
    double min_abs_q;  // over all edges and all cycle points at this s
  };
  std::vector<Sample> profile;
  double min_abs_q = 0.0;  // over the whole run
};

/// Probe the rotated integration cycle along the coordinate-rotation path:
/// momenta p -> M_I(s) p and cycle points [u : M_I(s) k] for real (u, k),
/// where M_I(s) multiplies the coordinates in rotate_coords by e^{i pi s/2}.
/// Samples n_s values of s in [0, s_max] and, per s, n_k real points
/// (including the near-pole probes k = -u P^(l)). A positive min |Q|
/// certifies no collision at the sampled resolution. Requires real
/// (Euclidean) momenta.
WickProfile wick_check(const KinematicConfig& config,
                       const std::vector<int>& rotate_coords, int n_s,
                       int n_k, double s_max, unsigned long seed);

}  // namespace loopcut

#endif  // LOOPCUT_STRATA_HPP
