#include "loopcut/cut.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "loopcut/frame.hpp"
#include "loopcut/kinematics.hpp"
#include "loopcut/pinch.hpp"
#include "loopcut/quadrature.hpp"

namespace loopcut {

namespace {

constexpr double kImagBranchRel = 1e-9;  // imag tol for "real positive" checks

bool real_positive(cdouble z) {
  return z.real() > 0.0 &&
         std::abs(z.imag()) <= kImagBranchRel * std::max(1.0, std::abs(z));
}

cdouble ipow(cdouble base, int n) {
  cdouble r = 1.0;
  for (int i = 0; i < n; ++i) r *= base;
  return r;
}

std::string prefactor_note(int m, int D) {
  std::ostringstream os;
  os << "N*(2*pi*i)^" << m << " chain included with N=1";
  if (D % 2 == 0) os << " (note: D even, outside the odd-D hypothesis)";
  return os.str();
}

// Pinch data of the contracted subset plus the stage radii
// r_j^2 = -m_{i1}^2 - sum_{c<j-1} A_c^2 for j = 2..m.
struct CutGeometry {
  KinematicConfig sub;
  FrameReduction frame;
  CVec A;
  std::vector<cdouble> stage_r2;  // index j-2 holds r_j^2
};

CutGeometry cut_geometry(const KinematicConfig& config,
                         const std::vector<int>& I) {
  CutGeometry g{contract(config, I), {}, {}, {}};
  PinchData pd = pinch_point(g.sub);
  g.frame = std::move(pd.frame);
  g.A = std::move(pd.A);
  const int m = g.sub.n;
  cdouble asum = 0.0;
  for (int j = 2; j <= m; ++j) {
    asum += g.A[j - 2] * g.A[j - 2];
    g.stage_r2.push_back(-g.sub.mass_sq(1) - asum);
  }
  return g;
}

void require_support(const CutGeometry& g) {
  const int m = g.sub.n;
  for (int j = 2; j <= m; ++j) {
    const cdouble r2 = g.stage_r2[j - 2];
    if (!real_positive(r2)) {
      std::ostringstream msg;
      msg << "cut off support: stage radius r_" << j << "^2 = " << r2.real()
          << (j == 2 ? " (threshold branch requires r_2^2 > 0)"
                     : " (pinned cosine leaves [-1,1])");
      throw domain_error(msg.str());
    }
  }
}

}  // namespace

CutResult disc_bubble_closed(const KinematicConfig& config, int D) {
  if (config.n != 2)
    throw usage_error("disc_bubble_closed: needs a two-edge configuration");
  const cdouble p2 = dot(config.momenta[0], config.momenta[0]);
  const cdouble lam = kallen(-p2, config.mass_sq(1), config.mass_sq(2));
  const cdouble r2 = -lam / (4.0 * p2);
  if (!real_positive(r2))
    throw domain_error("disc_bubble_closed: r_2^2 not on the positive real "
                       "branch");

  const double mp2 = (-p2).real();  // real positive on this branch
  const cdouble value = -std::pow(kPi, 0.5 * (D + 3)) /
                        (std::pow(2.0, D - 4) * std::tgamma(0.5 * (D - 1))) *
                        std::pow(lam, 0.5 * (D - 3)) /
                        std::pow(cdouble(mp2), 0.5 * D - 1.0);

  CutResult out;
  out.subset = {1, 2};
  out.m = 2;
  out.value_N1 = value;
  out.bare_integral = value / ipow(cdouble(0.0, 2.0 * kPi), 2);
  out.prefactor_note = prefactor_note(2, D);
  return out;
}

CutResult disc_triangle_2cut(const KinematicConfig& config, int D) {
  if (config.n != 3)
    throw usage_error("disc_triangle_2cut: needs a three-edge configuration");

  const PinchData full = pinch_point(config);  // reduces the frame
  const std::vector<CVec>& q = full.frame.reduced;
  const cdouble p1_0 = q[0][0];
  const cdouble p2_1 = q[1][1];

  // bubble data of the first two edges
  const cdouble A0 = -(dot(q[0], q[0]) - config.mass_sq(1) +
                       config.mass_sq(2)) /
                     (2.0 * p1_0);
  const cdouble r2 = -config.mass_sq(1) - A0 * A0;
  if (!real_positive(r2))
    throw domain_error("disc_triangle_2cut: r_2^2(p_1) not on the positive "
                       "real branch");

  const CVec P3 = q[0] + q[1];
  const cdouble B = dot(P3, P3) - config.mass_sq(1) + config.mass_sq(3) +
                    2.0 * A0 * P3[0];
  if (std::abs(B.imag()) > kImagBranchRel * std::max(1.0, std::abs(B)))
    throw domain_error("disc_triangle_2cut: B not real (not a Minkowski-real "
                       "configuration)");
  const double beta = 2.0 * std::sqrt(r2.real()) * std::abs(p2_1);
  if (std::abs(B.real()) <= beta * (1.0 + 1e-12))
    throw domain_error("disc_triangle_2cut: log-argument branch collision "
                       "(|B| <= 2 sqrt(r_2^2) |p2|, triple-cut locus)");

  const cdouble logs = std::log(cdouble(B.real() + beta)) -
                       std::log(cdouble(B.real() - beta));
  const cdouble value = -std::pow(kPi, 0.5 * (D + 3)) /
                        (std::tgamma(0.5 * (D - 1)) * std::abs(p1_0) *
                         std::abs(p2_1) * r2) *
                        logs;

  CutResult out;
  out.subset = {1, 2};
  out.m = 2;
  out.value_N1 = value;
  out.bare_integral = value / ipow(cdouble(0.0, 2.0 * kPi), 2);
  out.prefactor_note = prefactor_note(2, D);
  return out;
}

CutResult disc_triangle_3cut(const KinematicConfig& config, int D) {
  if (config.n != 3)
    throw usage_error("disc_triangle_3cut: needs a three-edge configuration");

  const PinchData full = pinch_point(config);
  const std::vector<CVec>& q = full.frame.reduced;
  const cdouble r3 = full.r_squared;
  if (!real_positive(r3))
    throw domain_error("disc_triangle_3cut: off support, r_3^2 <= 0 (the "
                       "delta support leaves the cut sphere)");
  const cdouble A0 = full.A[0];
  const cdouble r2 = -config.mass_sq(1) - A0 * A0;
  if (!real_positive(r2))
    throw domain_error("disc_triangle_3cut: r_2^2(p_1) not on the positive "
                       "real branch");

  const cdouble value =
      cdouble(0.0, -1.0) * std::pow(kPi, 0.5 * (D + 5)) /
      (std::tgamma(0.5 * (D - 1)) * std::abs(q[0][0]) * std::abs(q[1][1]) *
       r2);

  CutResult out;
  out.subset = {1, 2, 3};
  out.m = 3;
  out.value_N1 = value;
  out.bare_integral = value / ipow(cdouble(0.0, 2.0 * kPi), 3);
  out.prefactor_note = prefactor_note(3, D);
  return out;
}

CutResult cut_numeric(const KinematicConfig& config, const std::vector<int>& I,
                      int D, const CutQuadOpts& opts) {
  const int m = (int)I.size();
  if (m < 2) throw domain_error("cut_numeric: need at least two cut edges");
  if (D < m)
    throw domain_error("cut_numeric: sphere dimension D - |I| negative");
  if (D != config.D)
    throw usage_error("cut_numeric: config dimension mismatch (embed the "
                      "momenta in the requested dimension first)");

  CutGeometry g = cut_geometry(config, I);
  require_support(g);
  const double r2 = g.stage_r2[0].real();
  const double rm2 = g.stage_r2[m - 2].real();
  const double r = std::sqrt(rm2);
  const double scale = config.scale();

  // elimination chain constants, calibrated against the worked reductions
  cdouble jac = 1.0 / (4.0 * std::abs(g.frame.reduced[0][0]) * std::sqrt(r2));
  for (int j = 3; j <= m; ++j) {
    const cdouble diag = g.frame.reduced[j - 2][j - 2];
    jac /= 4.0 * std::sqrt(g.stage_r2[j - 3].real()) * std::abs(diag);
  }
  const double s_flat =
      2.0 * std::pow(kPi, 0.5 * (D - 1)) / std::tgamma(0.5 * (D - 1));

  // offsets of the uncut propagators in the reduced frame of the subset
  const CVec shift = partial_sum(config, I.front());
  std::vector<int> uncut;
  std::vector<CVec> offsets;
  std::vector<cdouble> lambdas;
  for (int j = 1; j <= config.n; ++j) {
    if (std::find(I.begin(), I.end(), j) != I.end()) continue;
    uncut.push_back(j);
    offsets.push_back(g.frame.M * (partial_sum(config, j) - shift));
    lambdas.push_back(config.regulators[j - 1]);
  }

  cdouble G;
  long nodes = 1;
  if (uncut.empty()) {
    G = (m == 2) ? std::pow(r, D - 2) : cdouble(1.0);
  } else {
    const int F = D - (m - 1);  // free components m-1 .. D-1
    // real orthonormal basis of the span of the offsets' free parts
    std::vector<Eigen::VectorXd> basis;
    for (const CVec& dp : offsets) {
      for (int pass = 0; pass < 2; ++pass) {
        Eigen::VectorXd v(F);
        for (int c = 0; c < F; ++c)
          v[c] = pass == 0 ? dp[m - 1 + c].real() : dp[m - 1 + c].imag();
        for (const auto& e : basis) v -= e.dot(v) * e;
        if (v.norm() > 1e-10 * (1.0 + scale)) basis.push_back(v.normalized());
      }
    }
    const int d = (int)basis.size();
    if (d > F - 1)
      throw domain_error("cut_numeric: not enough free directions at this D "
                         "for the angular dependence of the uncut "
                         "propagators");

    // Q_j(c) = base_j + 2 r sum_l u_l(c) g_{jl}
    std::vector<cdouble> base(uncut.size());
    CMat gmat((int)uncut.size(), std::max(d, 1));
    for (size_t j = 0; j < uncut.size(); ++j) {
      cdouble pinned = 0.0;
      for (int c = 0; c < m - 1; ++c) {
        const cdouble z = g.A[c] + offsets[j][c];
        pinned += z * z;
      }
      cdouble freesq = 0.0;
      for (int c = m - 1; c < D; ++c) freesq += offsets[j][c] * offsets[j][c];
      base[j] = pinned + rm2 + freesq + config.mass_sq(uncut[j]);
      for (int l = 0; l < d; ++l) {
        cdouble gl = 0.0;
        for (int c = 0; c < F; ++c) gl += basis[l][c] * offsets[j][m - 1 + c];
        gmat((int)j, l) = gl;
      }
    }

    double min_abs_q = std::numeric_limits<double>::infinity();
    auto integrand = [&](const std::vector<double>& c) -> cdouble {
      cdouble prod = 1.0;
      double sprod = 1.0;
      std::vector<double> u(d);
      for (int l = 0; l < d; ++l) {
        u[l] = sprod * c[l];
        sprod *= std::sqrt(std::max(0.0, 1.0 - c[l] * c[l]));
      }
      for (size_t j = 0; j < uncut.size(); ++j) {
        cdouble Qj = base[j];
        for (int l = 0; l < d; ++l) Qj += 2.0 * r * u[l] * gmat((int)j, l);
        min_abs_q = std::min(min_abs_q, std::abs(Qj));
        if (lambdas[j] == cdouble(1.0, 0.0))
          prod /= Qj;
        else
          prod /= std::pow(Qj, lambdas[j]);
      }
      return prod;
    };

    FlatCosineResult fr =
        flat_cosine_integrate(d, integrand, opts.rel_tol, opts.max_order);
    if (min_abs_q < 1e-8 * scale * scale)
      throw domain_error("cut_numeric: a non-cut propagator vanishes on the "
                         "cut sphere (singular cut)");
    G = fr.value;
    nodes = fr.nodes;
  }

  const cdouble value = ipow(cdouble(0.0, 2.0 * kPi), m) * jac * s_flat * G;

  CutResult out;
  out.subset = I;
  out.m = m;
  out.value_N1 = value;
  out.bare_integral = value / ipow(cdouble(0.0, 2.0 * kPi), m);
  std::ostringstream note;
  note << prefactor_note(m, D) << "; quadrature nodes " << nodes;
  out.prefactor_note = note.str();
  return out;
}

DiscExpansion disc_expand(int k) {
  if (k < 0) throw usage_error("disc_expand: loop count must be >= 0");
  DiscExpansion out;
  out.loops = k;
  if (k == 0) return out;
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    DiscTerm term;
    for (int i = 0; i < k; ++i)
      if (mask & (1u << i)) term.labels.push_back(i + 1);
    out.terms.push_back(std::move(term));
  }
  std::sort(out.terms.begin(), out.terms.end(),
            [](const DiscTerm& a, const DiscTerm& b) {
              if (a.labels.size() != b.labels.size())
                return a.labels.size() < b.labels.size();
              return a.labels < b.labels;
            });
  return out;
}

}  // namespace loopcut
