#include "loopcut/strata.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/SVD>

#include "loopcut/kinematics.hpp"

namespace loopcut {

cdouble Q(const KinematicConfig& config, int i, const ProjPoint& point) {
  if (i < 1 || i > config.n) throw usage_error("Q: edge index out of range");
  const CVec shifted = point.k + point.u * partial_sum(config, i);
  return dot(shifted, shifted) + point.u * point.u * config.mass_sq(i);
}

cdouble f(const KinematicConfig& config, int i, int j,
          const ProjPoint& point) {
  if (i < 1 || i > config.n || j < 1 || j > config.n)
    throw usage_error("f: edge index out of range");
  const CVec Pi = partial_sum(config, i);
  const CVec Pj = partial_sum(config, j);
  const CVec d = Pj - Pi;
  return 2.0 * dot(d, point.k + point.u * Pi) +
         point.u * (dot(d, d) - config.mass_sq(i) + config.mass_sq(j));
}

RankResult general_position(const KinematicConfig& config,
                            const std::vector<int>& I, const CVec& k) {
  RankResult out;
  if (I.empty()) return out;
  CMat rows((int)I.size(), config.D);
  for (size_t r = 0; r < I.size(); ++r) {
    const CVec v = k + partial_sum(config, I[r]);
    for (int c = 0; c < config.D; ++c) rows((int)r, c) = v[c];
  }
  Eigen::JacobiSVD<CMat> svd(rows);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0) return out;
  const double thresh = 1e-8 * sv(0);
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > thresh) ++rank;
  out.rank = rank;
  out.independent = (rank == (int)I.size());
  return out;
}

std::string to_string(Stratum s) {
  switch (s) {
    case Stratum::AFin: return "A_fin";
    case Stratum::AInf: return "A_inf";
    case Stratum::Boundary: return "boundary";
    case Stratum::None: return "none";
  }
  return "none";
}

Stratum stratum_membership(const KinematicConfig& config,
                           const std::vector<int>& I, const ProjPoint& point,
                           const Tol& tol) {
  if (I.empty()) throw usage_error("stratum_membership: empty subset");
  std::vector<int> sorted = I;
  std::sort(sorted.begin(), sorted.end());
  const int i1 = sorted.front();

  // normalize the projective representative so tolerances are scale-free
  double pscale = std::abs(point.u);
  for (int c = 0; c < point.k.size(); ++c)
    pscale = std::max(pscale, std::abs(point.k[c]));
  if (pscale <= 0.0)
    throw usage_error("stratum_membership: (u,k) must be nonzero");
  ProjPoint pt{point.u / pscale, point.k / pscale};

  const double s = config.scale();
  const double qscale = (1.0 + s) * (1.0 + s);

  // defining equations of B_I
  if (std::abs(Q(config, i1, pt)) > tol.abs * qscale) return Stratum::None;
  for (int i : sorted)
    if (i != i1 && std::abs(f(config, i1, i, pt)) > tol.abs * qscale)
      return Stratum::None;

  // strict non-vanishing conditions shared by both strata
  bool boundary = false;
  for (int i = 1; i < i1; ++i)
    if (std::abs(Q(config, i, pt)) < tol.abs * qscale) boundary = true;
  for (int i = i1 + 1; i <= config.n; ++i) {
    if (std::binary_search(sorted.begin(), sorted.end(), i)) continue;
    if (std::abs(f(config, i1, i, pt)) < tol.abs * qscale) boundary = true;
  }
  if (boundary) return Stratum::Boundary;

  return std::abs(pt.u) < tol.abs ? Stratum::AInf : Stratum::AFin;
}

WickProfile wick_check(const KinematicConfig& config,
                       const std::vector<int>& rotate_coords, int n_s,
                       int n_k, double s_max, unsigned long seed) {
  if (n_s < 1 || n_k < 0) throw usage_error("wick_check: bad sample counts");
  for (int c : rotate_coords)
    if (c < 0 || c >= config.D)
      throw usage_error("wick_check: coordinate index out of range");
  for (const CVec& p : config.momenta)
    for (int c = 0; c < config.D; ++c)
      if (std::abs(p[c].imag()) > 1e-12 * config.scale())
        throw domain_error("wick_check: requires real Euclidean momenta");

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> box(-1.0, 1.0);

  // real sample points [u : k], unit normalized; the designed probes
  // k = -u P^(l) sit at the Euclidean minimum |Q_l| = u^2 m_l^2
  std::vector<std::pair<double, Eigen::VectorXd>> samples;
  for (int l = 1; l <= config.n; ++l) {
    Eigen::VectorXd k(config.D);
    const CVec P = partial_sum(config, l);
    for (int c = 0; c < config.D; ++c) k[c] = -P[c].real();
    const double norm = std::sqrt(1.0 + k.squaredNorm());
    samples.emplace_back(1.0 / norm, k / norm);
  }
  for (int i = 0; i < n_k; ++i) {
    Eigen::VectorXd k(config.D);
    for (int c = 0; c < config.D; ++c) k[c] = box(rng);
    double u = box(rng);
    const double norm = std::sqrt(u * u + k.squaredNorm());
    samples.emplace_back(u / norm, k / norm);
  }

  WickProfile out;
  out.min_abs_q = std::numeric_limits<double>::infinity();
  for (int is = 0; is < n_s; ++is) {
    const double sv = n_s == 1 ? 0.0 : s_max * is / (n_s - 1);
    const cdouble phase = std::exp(cdouble(0.0, 0.5 * kPi * sv));

    // rotated momenta M_I(s) p
    std::vector<CVec> rot = config.momenta;
    for (CVec& p : rot)
      for (int c : rotate_coords) p[c] *= phase;
    KinematicConfig rc(config.n, config.D, config.masses, rot,
                       config.regulators);

    double min_q = std::numeric_limits<double>::infinity();
    for (const auto& [u, kreal] : samples) {
      ProjPoint pt;
      pt.u = u;
      pt.k = CVec::Zero(config.D);
      for (int c = 0; c < config.D; ++c) pt.k[c] = kreal[c];
      for (int c : rotate_coords) pt.k[c] *= phase;  // cycle point M_I(s) k
      for (int l = 1; l <= config.n; ++l)
        min_q = std::min(min_q, std::abs(Q(rc, l, pt)));
    }
    out.profile.push_back({sv, min_q});
    out.min_abs_q = std::min(out.min_abs_q, min_q);
  }
  return out;
}

}  // namespace loopcut
