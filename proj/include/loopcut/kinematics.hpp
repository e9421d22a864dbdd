#ifndef LOOPCUT_KINEMATICS_HPP
#define LOOPCUT_KINEMATICS_HPP

#include <map>
#include <string>
#include <vector>

#include "loopcut/types.hpp"

namespace loopcut {

/// Symmetric bilinear product sum_i a_i b_i (NOT Hermitian).
/// dot(v, v) is the momentum square v^2 appearing in all propagators.
cdouble dot(const CVec& a, const CVec& b);

/// Determinant of the matrix of pairwise bilinear products.
/// An empty list yields 1. Callers test |det| > tol for T_n membership.
cdouble gram_det(const std::vector<CVec>& momenta);

/// Kallen function a^2 + b^2 + c^2 - 2(ab + bc + ca). Totally symmetric.
cdouble kallen(cdouble a, cdouble b, cdouble c);

/// P^(i) = p_1 + ... + p_{i-1}; P^(1) is the zero vector. i in 1..n.
CVec partial_sum(const KinematicConfig& config, int i);

/// True when |gram_det| of the momenta exceeds tol.abs * scale^(2(n-1)).
bool in_Tn(const KinematicConfig& config, const Tol& tol = {});

/// Contract the configuration to the edge subset I (ascending, |I| >= 2):
/// keeps masses (m_i)_{i in I} and forms the momenta
///   (p_I)_l = p_{i_l} + ... + p_{i_{l+1}-1},
/// the external momenta of the cyclic graph with every edge not in I
/// shrunk away. I = {1..n} returns the configuration unchanged.
KinematicConfig contract(const KinematicConfig& config,
                         const std::vector<int>& I);

/// Channel invariants, stored in the convention of the worked examples:
/// n = 2:  s = -p1^2
/// n = 3:  s = -p1^2, t = -p2^2, u = -(p1+p2)^2
/// n = 4:  s = p1^2, t = p2^2, u = p3^2, v = (p1+p2)^2, w = (p1+p3)^2,
///         x = (p2+p3)^2   (raw bilinear squares)
/// Use q_squared()/minkowski() to read a label in a definite convention.
struct Invariants {
  int n = 0;
  std::map<std::string, cdouble> values;

  /// Raw bilinear square q^2 = dot(q, q) of the channel momentum.
  cdouble q_squared(const std::string& label) const;
  /// Minkowski-style -q^2 of the channel momentum.
  cdouble minkowski(const std::string& label) const;
};

/// The fixed channel label set for a given edge count.
const std::vector<std::string>& channel_labels(int n);

/// The channel momentum of a label as a sum of external momenta
/// (indices into p_1..p_{n-1}).
const std::vector<int>& channel_edges(int n, const std::string& label);

/// Compute the channel invariants of a configuration.
Invariants invariants_of(const KinematicConfig& config);

/// Inverse kinematics: momenta in the triangular frame ((p_i)_j = 0 for
/// j >= i) whose pairwise products reproduce the target invariants.
/// Complex square roots are principal branch, so the output is
/// reproducible. Throws domain_error naming the first vanishing leading
/// minor when the target Gram matrix is degenerate.
std::vector<CVec> momenta_from_invariants(int n, int D,
                                          const Invariants& targets,
                                          const Tol& tol = {});

}  // namespace loopcut

#endif  // LOOPCUT_KINEMATICS_HPP
