#ifndef LOOPCUT_QUADRATURE_HPP
#define LOOPCUT_QUADRATURE_HPP

#include <functional>
#include <vector>

#include "loopcut/types.hpp"

namespace loopcut {

/// Gauss-Legendre nodes and weights on [-1, 1]. Deterministic; cached.
struct GLRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GLRule& gauss_legendre(int n);

/// Surface area of the unit sphere S^{D-1} in R^D: 2 pi^{D/2} / Gamma(D/2).
double unit_sphere_area(int D);

/// Quadrature of the same area as a product of 1-D Gauss-Legendre
/// integrals of the iterated polar measure (the quadrature self-test).
double unit_sphere_area_quadrature(int D, int nodes_per_axis = 64);

/// Iterated flat-cosine quadrature: integrate f(c_1..c_d) over [-1,1]^d
/// with Richardson doubling of the per-axis Gauss-Legendre order until
/// the relative change drops below rel_tol or the node cap is reached.
/// Deterministic; returns the finest value and the last change.
struct FlatCosineResult {
  cdouble value;
  double last_change = 0.0;
  long nodes = 0;
};
FlatCosineResult flat_cosine_integrate(
    int d, const std::function<cdouble(const std::vector<double>&)>& f,
    double rel_tol = 1e-8, int max_order = 4096);

}  // namespace loopcut

#endif  // LOOPCUT_QUADRATURE_HPP
