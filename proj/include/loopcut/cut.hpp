#ifndef LOOPCUT_CUT_HPP
#define LOOPCUT_CUT_HPP

#include <string>
#include <vector>

#include "loopcut/types.hpp"

namespace loopcut {

/// A cut discontinuity, reported with the undetermined integer N set
/// to 1. value_N1 carries the full N (2 pi i)^m chain; bare_integral is
/// value_N1 / (2 pi i)^m, i.e. the delta-reduced integral itself.
struct CutResult {
  std::vector<int> subset;
  int m = 0;
  cdouble value_N1;
  cdouble bare_integral;
  std::string prefactor_note;
};

/// Closed form for the two-edge cut in D dimensions,
///   -pi^{(D+3)/2} / (2^{D-4} Gamma((D-1)/2))
///     * lambda(-p^2, m1^2, m2^2)^{(D-3)/2} / (-p^2)^{D/2-1},
/// valid on the branch r_2^2 real positive (throws domain_error off it).
/// D even only trips a note, not an error.
CutResult disc_bubble_closed(const KinematicConfig& config, int D);

/// Closed form for the two-particle cut of the three-edge loop,
///   -pi^{(D+3)/2} / (Gamma((D-1)/2) |(p1)_0| |vec p2| r_2^2)
///     * (ln(B + 2 sqrt(r_2^2) |vec p2|) - ln(B - 2 sqrt(r_2^2) |vec p2|)),
/// with B = (p1+p2)^2 - m1^2 + m3^2 + 2 A_0 ((p1)_0 + (p2)_0).
/// Requires r_2^2(p1) real positive; throws domain_error on the singular
/// locus |B| <= 2 sqrt(r_2^2) |vec p2| (the third propagator vanishes on
/// the cut sphere there, which is where the triple cut opens).
CutResult disc_triangle_2cut(const KinematicConfig& config, int D);

/// Closed form for the full cut of the three-edge loop,
///   -i pi^{(D+5)/2} / (Gamma((D-1)/2) |(p1)_0| |(p2)_1| r_2^2(p1)),
/// supported where r_3^2 is real positive (the pinned cosine stays in
/// [-1,1]); throws domain_error off support.
CutResult disc_triangle_3cut(const KinematicConfig& config, int D);

struct CutQuadOpts {
  double rel_tol = 1e-8;
  int max_order = 4096;
};

/// Numeric cut integral following the worked delta-reductions: contract to
/// the cut subset, frame-reduce, pin the loop components to the subset
/// pinch point, and integrate the remaining propagator product over the
/// directions of the radius-sqrt(r^2) sphere with the flat iterated-cosine
/// measure and overall factor 2 pi^{(D-1)/2}/Gamma((D-1)/2). The
/// elimination chain contributes 1/(4 |q1_0| r_2) and, per later cut,
/// 1/(4 r_{j-1} |(q_{j-1})_{j-2}|); these constants are calibrated against
/// the worked two- and three-edge reductions. For a pure two-edge cut with
/// nothing left to integrate the sphere keeps its genuine radial measure
/// r^{D-2}.
CutResult cut_numeric(const KinematicConfig& config, const std::vector<int>& I,
                      int D, const CutQuadOpts& opts = {});

/// One composition term of a discontinuity expansion: ascending loop
/// labels j_1 < ... < j_i, applied right to left (Disc_{j_i} ... Disc_{j_1}).
struct DiscTerm {
  std::vector<int> labels;
};

struct DiscExpansion {
  int loops = 0;
  std::vector<DiscTerm> terms;  // 2^k - 1 of them, ordered by (size, lex)
};

/// Expansion of the discontinuity along a product of k simple loops into
/// compositions over ordered subsets.
DiscExpansion disc_expand(int k);

}  // namespace loopcut

#endif  // LOOPCUT_CUT_HPP
