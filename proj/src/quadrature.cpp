#include "loopcut/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace loopcut {

namespace {

GLRule compute_gl(int n) {
  GLRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  // Newton on P_n with the usual cosine initial guess
  for (int i = 0; i < n; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double p0, p1, dp;
    for (int it = 0; it < 100; ++it) {
      p0 = 1.0;
      p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes[n - 1 - i] = x;
    rule.weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

}  // namespace

const GLRule& gauss_legendre(int n) {
  static std::map<int, GLRule> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_gl(n)).first;
  return it->second;
}

double unit_sphere_area(int D) {
  return 2.0 * std::pow(kPi, 0.5 * D) / std::tgamma(0.5 * D);
}

double unit_sphere_area_quadrature(int D, int nodes_per_axis) {
  if (D < 1) throw usage_error("unit_sphere_area_quadrature: D >= 1");
  if (D == 1) return 2.0;  // S^0 is two points
  // area(S^{D-1}) = 2 pi * prod_{j=1}^{D-2} int_0^pi sin^j(theta) dtheta
  double area = 2.0 * kPi;
  const GLRule& gl = gauss_legendre(nodes_per_axis);
  for (int j = 1; j <= D - 2; ++j) {
    double integral = 0.0;
    for (size_t i = 0; i < gl.nodes.size(); ++i) {
      const double theta = 0.5 * kPi * (gl.nodes[i] + 1.0);
      integral += 0.5 * kPi * gl.weights[i] * std::pow(std::sin(theta), j);
    }
    area *= integral;
  }
  return area;
}

FlatCosineResult flat_cosine_integrate(
    int d, const std::function<cdouble(const std::vector<double>&)>& f,
    double rel_tol, int max_order) {
  if (d < 0) throw usage_error("flat_cosine_integrate: d >= 0");
  FlatCosineResult out;
  if (d == 0) {
    out.value = f({});
    out.nodes = 1;
    return out;
  }

  auto evaluate = [&](int order) -> cdouble {
    const GLRule& gl = gauss_legendre(order);
    std::vector<double> c(d, 0.0);
    std::vector<size_t> idx(d, 0);
    cdouble total = 0.0;
    // odometer over the tensor grid; pairwise-safe summation is not needed
    // at these sizes, the fixed iteration order keeps runs bit-identical
    while (true) {
      double wgt = 1.0;
      for (int a = 0; a < d; ++a) {
        c[a] = gl.nodes[idx[a]];
        wgt *= gl.weights[idx[a]];
      }
      total += wgt * f(c);
      int a = 0;
      while (a < d && ++idx[a] == gl.nodes.size()) idx[a++] = 0;
      if (a == d) break;
    }
    return total;
  };

  int order = 16;
  cdouble prev = evaluate(order);
  long nodes = 1;
  for (int a = 0; a < d; ++a) nodes *= order;
  while (order < max_order) {
    order *= 2;
    const cdouble cur = evaluate(order);
    long cn = 1;
    for (int a = 0; a < d; ++a) cn *= order;
    nodes += cn;
    const double change =
        std::abs(cur - prev) / std::max(1e-300, std::abs(cur));
    prev = cur;
    if (change < rel_tol) {
      out.last_change = change;
      break;
    }
    out.last_change = change;
  }
  out.value = prev;
  out.nodes = nodes;
  return out;
}

}  // namespace loopcut
