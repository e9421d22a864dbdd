#ifndef LOOPCUT_LANDAU_HPP
#define LOOPCUT_LANDAU_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "loopcut/kinematics.hpp"
#include "loopcut/types.hpp"

namespace loopcut {

/// Per-subset sphere radii over all edge subsets with |I| >= 2.
struct LandauScan {
  struct Entry {
    cdouble r_squared;
    bool on_surface = false;
    std::optional<std::string> error;
  };
  std::map<std::vector<int>, Entry> entries;
};

/// A channel condition a y^2 + b y + c = 0 together with its roots.
/// When |a| is negligible the condition degenerates to the linear case
/// with a single root.
struct ChannelQuadratic {
  std::string channel;
  cdouble a, b, c;
  std::vector<cdouble> roots;
  bool linear = false;
};

/// r^2 for every edge subset with |I| >= 2; on_surface = (|r^2| < tol.abs
/// * scale^2). Subsets that fail to contract/reduce carry an error note
/// instead of a value.
LandauScan landau_scan(const KinematicConfig& config, const Tol& tol = {});

/// Threshold and pseudo-threshold of a two-edge loop:
/// ((m1+m2)^2, (m1-m2)^2), the two roots of kallen(., m1^2, m2^2).
std::array<double, 2> bubble_roots(double m1, double m2);

/// Channel condition of the three-edge loop in s, at fixed t, u.
/// Convention here: s = -p1^2, t = -p2^2, u = -(p1+p2)^2.
/// Coefficients (-m3^2, c, d) with
///   c = 2 m1^2 t + 2 m2^2 u - (t + m2^2 - m3^2)(u + m1^2 - m3^2)
///   d = -m1^2 (t-u)^2 - u (m1^2-m2^2)^2
///       + (m1^2-m2^2)(-t+u)(u + m1^2 - m3^2)
/// and roots s = (c +- sqrt(c^2 + 4 m3^2 d)) / (2 m3^2).
ChannelQuadratic triangle_quadratic(cdouble t, cdouble u,
                                    const std::array<double, 3>& masses);

/// Channel condition of the four-edge loop in one of the channels s, v, w.
/// All invariant arguments use the Minkowski-style convention
/// (s = -p1^2, ..., x = -(p2+p3)^2); the coefficient polynomials are the
/// transcribed closed forms, evaluated literally. The quadratic satisfies
/// a y^2 + b y + c = r_4^2 * gram_det(p1,p2,p3) identically.
/// `others` must supply the five non-channel labels from {s,t,u,v,w,x}.
ChannelQuadratic box_quadratic(const std::string& channel,
                               const std::map<std::string, cdouble>& others,
                               const std::array<double, 4>& masses,
                               const Tol& tol = {});

/// Transcribed coefficient polynomials (a_y, b_y, c_y) for y in {s,v,w};
/// inputs are the five other invariants in Minkowski convention and the
/// four squared masses. Kept in one translation unit, never simplified.
std::array<cdouble, 3> box_channel_coeffs(const std::string& channel,
                                          const std::map<std::string, cdouble>& others,
                                          const std::array<double, 4>& masses_sq);

/// Scan r_n^2 along one real channel variable with the other invariants
/// frozen at the configuration's values; returns the bisection-refined
/// roots of Re r^2 in [lo, hi] whose |Im r^2| stays below tol.
std::vector<double> channel_root_search(const KinematicConfig& config,
                                        const std::string& channel,
                                        double lo, double hi, int steps = 512,
                                        const Tol& tol = {});

}  // namespace loopcut

#endif  // LOOPCUT_LANDAU_HPP
