#include "loopcut/landau.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "loopcut/pinch.hpp"

namespace loopcut {

namespace {

void all_subsets(int n, std::vector<std::vector<int>>& out) {
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) < 2) continue;
    std::vector<int> I;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) I.push_back(i + 1);
    out.push_back(std::move(I));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
}

std::vector<cdouble> quadratic_roots(cdouble a, cdouble b, cdouble c) {
  const cdouble disc = std::sqrt(b * b - 4.0 * a * c);
  return {(-b + disc) / (2.0 * a), (-b - disc) / (2.0 * a)};
}

}  // namespace

LandauScan landau_scan(const KinematicConfig& config, const Tol& tol) {
  LandauScan scan;
  std::vector<std::vector<int>> subsets;
  all_subsets(config.n, subsets);
  const double s2 = config.scale() * config.scale();
  for (const auto& I : subsets) {
    LandauScan::Entry e;
    try {
      const PinchData pd = subset_pinch(config, I, tol);
      e.r_squared = pd.r_squared;
      e.on_surface = std::abs(pd.r_squared) < tol.abs * s2;
    } catch (const domain_error& err) {
      e.error = err.what();
    }
    scan.entries.emplace(I, std::move(e));
  }
  return scan;
}

std::array<double, 2> bubble_roots(double m1, double m2) {
  if (!(m1 > 0.0) || !(m2 > 0.0))
    throw usage_error("bubble_roots: masses must be positive");
  return {(m1 + m2) * (m1 + m2), (m1 - m2) * (m1 - m2)};
}

ChannelQuadratic triangle_quadratic(cdouble t, cdouble u,
                                    const std::array<double, 3>& masses) {
  const double m1s = masses[0] * masses[0];
  const double m2s = masses[1] * masses[1];
  const double m3s = masses[2] * masses[2];

  const cdouble c = 2.0 * m1s * t + 2.0 * m2s * u -
                    (t + m2s - m3s) * (u + m1s - m3s);
  const cdouble d = -m1s * (t - u) * (t - u) -
                    u * (m1s - m2s) * (m1s - m2s) +
                    (m1s - m2s) * (-t + u) * (u + m1s - m3s);

  ChannelQuadratic q;
  q.channel = "s";
  q.a = cdouble(-m3s, 0.0);
  q.b = c;
  q.c = d;
  const cdouble disc = std::sqrt(c * c + 4.0 * m3s * d);
  q.roots = {(c + disc) / (2.0 * m3s), (c - disc) / (2.0 * m3s)};
  return q;
}

ChannelQuadratic box_quadratic(const std::string& channel,
                               const std::map<std::string, cdouble>& others,
                               const std::array<double, 4>& masses,
                               const Tol& tol) {
  if (channel != "s" && channel != "v" && channel != "w")
    throw usage_error("box_quadratic: closed forms exist for channels s, v, w "
                      "only (t, u, x follow by relabeling, not transcribed)");
  std::array<double, 4> msq;
  for (int i = 0; i < 4; ++i) msq[i] = masses[i] * masses[i];

  const auto [a, b, c] = box_channel_coeffs(channel, others, msq);

  ChannelQuadratic q;
  q.channel = channel;
  q.a = a;
  q.b = b;
  q.c = c;
  double scale = std::max({std::abs(a), std::abs(b), std::abs(c), 1.0});
  if (std::abs(a) < tol.abs * scale) {
    q.linear = true;
    q.roots = {-c / b};
  } else {
    q.roots = quadratic_roots(a, b, c);
  }
  return q;
}

std::vector<double> channel_root_search(const KinematicConfig& config,
                                        const std::string& channel,
                                        double lo, double hi, int steps,
                                        const Tol& tol) {
  if (!(hi > lo) || steps < 2)
    throw usage_error("channel_root_search: need hi > lo and steps >= 2");

  Invariants inv = invariants_of(config);
  const auto& labels = channel_labels(config.n);
  if (std::find(labels.begin(), labels.end(), channel) == labels.end())
    throw usage_error("channel_root_search: unknown channel '" + channel +
                      "'");

  auto r_of = [&](double y) -> cdouble {
    Invariants probe = inv;
    probe.values[channel] = cdouble(y, 0.0);
    auto momenta = momenta_from_invariants(config.n, config.D, probe, tol);
    KinematicConfig c(config.n, config.D, config.masses, std::move(momenta),
                      config.regulators);
    return pinch_point(c, tol).r_squared;
  };

  const double s2 = config.scale() * config.scale();
  std::vector<double> roots;
  double prev_y = lo;
  cdouble prev_r = r_of(lo);
  for (int i = 1; i <= steps; ++i) {
    const double y = lo + (hi - lo) * i / steps;
    cdouble r;
    try {
      r = r_of(y);
    } catch (const domain_error&) {
      prev_y = y;
      prev_r = cdouble(std::nan(""), 0.0);
      continue;
    }
    if (!std::isnan(prev_r.real()) &&
        std::signbit(prev_r.real()) != std::signbit(r.real())) {
      double a = prev_y, b = y;
      double fa = prev_r.real();
      for (int it = 0; it < 200 && (b - a) > 1e-12 * (1.0 + std::abs(b));
           ++it) {
        const double mid = 0.5 * (a + b);
        const cdouble fm = r_of(mid);
        if (std::signbit(fa) != std::signbit(fm.real())) {
          b = mid;
        } else {
          a = mid;
          fa = fm.real();
        }
      }
      const double root = 0.5 * (a + b);
      if (std::abs(r_of(root).imag()) < tol.abs * s2) roots.push_back(root);
    }
    prev_y = y;
    prev_r = r;
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace loopcut
