#include "loopcut/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "loopcut/kinematics.hpp"
#include "loopcut/quadrature.hpp"

namespace loopcut {

namespace {

// integrand of the momentum integral at real k
cdouble integrand_at(const KinematicConfig& config,
                     const std::vector<CVec>& partials,
                     const Eigen::VectorXd& k) {
  cdouble val = 1.0;
  for (int i = 1; i <= config.n; ++i) {
    cdouble q = 0.0;
    const CVec& P = partials[i];
    for (int c = 0; c < k.size(); ++c) {
      const cdouble z = k[c] + P[c];
      q += z * z;
    }
    q += config.mass_sq(i);
    const cdouble lam = config.regulators[i - 1];
    if (lam == cdouble(1.0, 0.0))
      val /= q;
    else if (lam == cdouble(2.0, 0.0))
      val /= q * q;
    else
      val /= std::pow(q, lam);
  }
  return val;
}

void check_convergence(const KinematicConfig& config, int D) {
  cdouble lam_sum = 0.0;
  for (const cdouble& l : config.regulators) lam_sum += l;
  if (!(2.0 * lam_sum.real() > (double)D)) {
    std::ostringstream msg;
    msg << "euclidean_integral: power counting fails, need "
        << "2 Re(sum lambda) = " << 2.0 * lam_sum.real() << " > D = " << D;
    throw domain_error(msg.str());
  }
}

void check_near_euclidean(const KinematicConfig& config) {
  double min_mass = config.masses[0];
  for (double m : config.masses) min_mass = std::min(min_mass, m);
  for (const CVec& p : config.momenta)
    for (int c = 0; c < p.size(); ++c)
      if (std::abs(p[c].imag()) > 0.5 * min_mass)
        throw domain_error("euclidean_integral: momenta too far from the "
                           "Euclidean region (imaginary part vs mass gap)");
}

std::vector<CVec> partial_sums_embedded(const KinematicConfig& config,
                                        int D) {
  std::vector<CVec> partials(config.n + 1);
  for (int i = 1; i <= config.n; ++i) {
    CVec P = partial_sum(config, i);
    CVec emb = CVec::Zero(D);
    for (int c = 0; c < std::min<int>(D, P.size()); ++c) emb[c] = P[c];
    for (int c = D; c < P.size(); ++c)
      if (std::abs(P[c]) > 1e-12 * config.scale())
        throw usage_error("euclidean_integral: momenta have components "
                          "beyond the requested dimension");
    partials[i] = emb;
  }
  return partials;
}

EuclideanResult tensor_quadrature(const KinematicConfig& config, int D,
                                  const std::vector<CVec>& partials,
                                  const EuclideanOpts& opts) {
  auto evaluate = [&](int order) -> cdouble {
    const GLRule& gl = gauss_legendre(order);
    // k_c = tan(theta_c), theta in (-pi/2, pi/2)
    std::vector<double> tan_nodes(order), jac(order);
    for (int i = 0; i < order; ++i) {
      const double theta = 0.5 * kPi * gl.nodes[i];
      tan_nodes[i] = std::tan(theta);
      const double sec = 1.0 / std::cos(theta);
      jac[i] = 0.5 * kPi * gl.weights[i] * sec * sec;
    }
    std::vector<size_t> idx(D, 0);
    Eigen::VectorXd k(D);
    cdouble total = 0.0;
    while (true) {
      double wgt = 1.0;
      for (int c = 0; c < D; ++c) {
        k[c] = tan_nodes[idx[c]];
        wgt *= jac[idx[c]];
      }
      total += wgt * integrand_at(config, partials, k);
      int c = 0;
      while (c < D && ++idx[c] == (size_t)order) idx[c++] = 0;
      if (c == D) break;
    }
    return total;
  };

  EuclideanResult out;
  int order = opts.start_order;
  cdouble prev = evaluate(order);
  long nodes = 1;
  for (int c = 0; c < D; ++c) nodes *= order;
  while (order < opts.max_order) {
    order *= 2;
    const cdouble cur = evaluate(order);
    long cn = 1;
    for (int c = 0; c < D; ++c) cn *= order;
    nodes += cn;
    out.error_estimate = std::abs(cur - prev);
    prev = cur;
    if (out.error_estimate <= opts.rel_tol * std::abs(cur)) break;
  }
  out.value = prev;
  out.nodes = nodes;
  return out;
}

EuclideanResult stratified_mc(const KinematicConfig& config, int D,
                              const std::vector<CVec>& partials,
                              const EuclideanOpts& opts) {
  // 2^D orthant strata over theta in (-pi/2, pi/2)^D; fixed reduction
  // order, so a seed fully determines the result
  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const long strata = 1L << D;
  const long per = std::max<long>(1, opts.mc_samples / (2 * strata));

  cdouble sum1 = 0.0, sum2 = 0.0;
  Eigen::VectorXd k(D);
  for (int half = 0; half < 2; ++half) {
    cdouble acc = 0.0;
    for (long s = 0; s < strata; ++s) {
      cdouble cell = 0.0;
      for (long i = 0; i < per; ++i) {
        double wgt = 1.0;
        for (int c = 0; c < D; ++c) {
          const double lo = (s >> c) & 1 ? 0.0 : -1.0;
          const double theta = 0.25 * kPi * (2.0 * (lo + unif(rng)) );
          k[c] = std::tan(theta);
          const double sec = 1.0 / std::cos(theta);
          wgt *= 0.5 * kPi * sec * sec;  // cell width pi/4 over density 2/pi
        }
        cell += wgt * integrand_at(config, partials, k);
      }
      acc += cell / (double)per / (double)(1L << 1);
    }
    if (half == 0) sum1 = acc; else sum2 = acc;
  }
  EuclideanResult out;
  out.value = sum1 + sum2;
  out.error_estimate = std::abs(sum1 - sum2);
  out.nodes = 2 * strata * per;
  return out;
}

}  // namespace

EuclideanResult euclidean_integral(const KinematicConfig& config, int D,
                                   const EuclideanOpts& opts) {
  if (D < 1) throw usage_error("euclidean_integral: D >= 1");
  check_convergence(config, D);
  check_near_euclidean(config);
  const std::vector<CVec> partials = partial_sums_embedded(config, D);
  if (D <= 4) return tensor_quadrature(config, D, partials, opts);
  return stratified_mc(config, D, partials, opts);
}

HolomorphyProbe holomorphy_probe(const KinematicConfig& config, int D,
                                 const CVec& direction, double h,
                                 const EuclideanOpts& opts) {
  if ((int)direction.size() != config.D)
    throw usage_error("holomorphy_probe: direction dimension mismatch");
  if (!(h > 0.0)) throw usage_error("holomorphy_probe: need h > 0");

  auto shifted = [&](cdouble z) -> cdouble {
    std::vector<CVec> momenta = config.momenta;
    momenta[0] += z * direction;
    KinematicConfig c(config.n, config.D, config.masses, std::move(momenta),
                      config.regulators);
    return euclidean_integral(c, D, opts).value;
  };

  const cdouble f0 = shifted(0.0);
  const cdouble d2_real =
      (shifted(h) + shifted(-h) - 2.0 * f0) / (h * h);
  const cdouble d2_imag =
      -(shifted(cdouble(0.0, h)) + shifted(cdouble(0.0, -h)) - 2.0 * f0) /
      (h * h);

  HolomorphyProbe out;
  out.residual_abs = std::abs(d2_real - d2_imag);
  const double mag = std::max(std::abs(d2_real), std::abs(d2_imag));
  out.residual_rel = mag > 0.0 ? out.residual_abs / mag : out.residual_abs;
  // flag steps where nonlinearity dominates and the comparison says nothing
  out.inconclusive = mag > 0.0 && out.residual_rel > 1.0;
  return out;
}

}  // namespace loopcut
