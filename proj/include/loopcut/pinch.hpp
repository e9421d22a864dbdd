#ifndef LOOPCUT_PINCH_HPP
#define LOOPCUT_PINCH_HPP

#include <vector>

#include "loopcut/frame.hpp"
#include "loopcut/types.hpp"

namespace loopcut {

/// Pinch point of the full edge set in the reduced (triangular) frame,
/// together with the squared radius of the sphere of common on-shell
/// solutions. Components n-1..D-1 of A are zero. Invariants:
///   2 A.P^(i) + (P^(i))^2 + m_i^2 - m_1^2 = 0  for all i
///   r_squared = -m_1^2 - A.A
struct PinchData {
  CVec A;
  cdouble r_squared;
  FrameReduction frame;  // the frame A is expressed in; M maps input -> frame
};

/// The common on-shell solution set at finite distance: a complex sphere
/// around A in the free components. When radius_squared is real positive
/// and the momenta are Minkowski-real, the real slice lies in Minkowski
/// space.
struct VanishingSphere {
  CVec center;
  cdouble radius_squared;
  int free_from;  // first free component index (= edge count - 1)
  int free_to;    // one past the last free component (= D)
};

/// alpha-weights solving k = -sum_{i in I} alpha_i P^(i) with
/// sum alpha = 1 (exact by construction), zeros off I. Residuals report
/// the on-shell values Q_i(1,k) for i in I and the norm of the vector
/// equation sum alpha_i (k + P^(i)).
struct AlphaSolution {
  std::vector<cdouble> alpha;         // n entries
  std::vector<cdouble> onshell;       // |I| entries, Q_i(1,k)
  double vector_residual = 0.0;
  double onshell_residual = 0.0;      // max |Q_i|
};

/// Compute the pinch point by the component recursion
///   A_0 = -(p_1^2 - m_1^2 + m_2^2) / (2 (p_1)_0)
///   A_i = -(2 kbar^(i).P^(i+2) + (P^(i+2))^2 - m_1^2 + m_{i+2}^2)
///         / (2 (p_{i+1})_i)
/// and r^2 = -m_1^2 - A.A. Momenta are frame-reduced internally when not
/// already triangular; requires the configuration to be in T_n.
PinchData pinch_point(const KinematicConfig& config, const Tol& tol = {});

/// pinch_point of the contracted configuration (|I| >= 2).
PinchData subset_pinch(const KinematicConfig& config,
                       const std::vector<int>& I, const Tol& tol = {});

/// Describe the sphere associated with pinch data.
VanishingSphere vanishing_sphere(const PinchData& pinch, int edge_count,
                                 int D);

/// Reconstruct the alpha-weights for a candidate pinch location k, given
/// in the same triangular frame as the momenta. The weights alpha_{i_m},
/// ..., alpha_{i_2} are determined recursively from the top triangular
/// component down; alpha_{i_1} closes the sum to 1 exactly.
AlphaSolution solve_alpha(const KinematicConfig& config,
                          const std::vector<int>& I, const CVec& k,
                          const Tol& tol = {});

/// The subset pinch location expressed in the frame of the original
/// (triangular) configuration: undoes the contracted frame reduction and
/// the loop-momentum shift, k = M'^T A - P^(i_1).
CVec pinch_location_in_config_frame(const KinematicConfig& config,
                                    const std::vector<int>& I,
                                    const Tol& tol = {});

}  // namespace loopcut

#endif  // LOOPCUT_PINCH_HPP
