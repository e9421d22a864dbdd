#ifndef LOOPCUT_FRAME_HPP
#define LOOPCUT_FRAME_HPP

#include <utility>
#include <vector>

#include "loopcut/types.hpp"

namespace loopcut {

/// Result of a complex-orthogonal triangularization: M^T M = I (complex
/// orthogonal, not unitary), reduced_i = M v_i with (reduced_i)_j = 0 for
/// j >= i and the diagonal entry (reduced_i)_{i-1} nonzero.
struct FrameReduction {
  CMat M;
  std::vector<CVec> reduced;
  /// coordinate transpositions applied when an isotropic tail forced a
  /// permutation, in application order (global coordinate indices)
  std::vector<std::pair<int, int>> permutations_applied;
};

/// Reduce a single vector to (c, 0, ..., 0) with c the principal-branch
/// square root of dot(v, v). Requires dot(v, v) != 0 within tol
/// (anisotropic); throws domain_error otherwise.
FrameReduction reduce_single(const CVec& v, const Tol& tol = {});

/// Triangularize a list of m <= D vectors with nondegenerate Gram matrix.
/// Throws domain_error naming the failing leading minor when a diagonal
/// square detG_i/detG_{i-1} vanishes within tol.
FrameReduction reduce_frame(const std::vector<CVec>& vs, const Tol& tol = {});

/// True when the momenta already satisfy the triangular zero pattern
/// (p_i)_j = 0 for j >= i to within tol.abs * scale.
bool is_triangular(const std::vector<CVec>& vs, double scale,
                   const Tol& tol = {});

/// Deterministic pseudo-random element of O(D,C), built as a product of
/// complex Givens-style rotations. Used by invariance tests and scans.
CMat random_complex_orthogonal(int D, unsigned long seed,
                               double imag_spread = 0.3);

}  // namespace loopcut

#endif  // LOOPCUT_FRAME_HPP
