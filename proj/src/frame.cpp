#include "loopcut/frame.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "loopcut/kinematics.hpp"

namespace loopcut {

namespace {

// |w.w| below this times ||w||^2 counts as isotropic and triggers the
// permutation branch (avoids dividing by a tiny sqrt in the 2x2 block)
constexpr double kIsotropyRel = 1e-12;

double norm1sq(const CVec& v) {
  double s = 0.0;
  for (int i = 0; i < v.size(); ++i) s += std::norm(v[i]);
  return s;
}

// Reduce w (length d, living in ambient coordinates offset..offset+d-1)
// to (sqrt(w.w), 0, ..., 0), accumulating rotations into M.
//
// Induction on d: reduce the tail (w_2..w_d), then rotate the leading 2x2
// block with [w1 w2; -w2 w1]/sqrt(w1^2+w2^2). When the tail is isotropic,
// the averaging identity sum_i (w minus component i)^2 = (d-1) w.w != 0
// guarantees some coordinate transposition fixes it; the first index in
// ascending order is taken, so the output is deterministic.
void reduce_single_rec(CVec w, int offset, CMat& M,
                       std::vector<std::pair<int, int>>& perms,
                       const Tol& tol, double scale) {
  const int d = (int)w.size();
  const int ambient = (int)M.rows();
  const cdouble wsq = dot(w, w);
  if (std::abs(wsq) < tol.abs * scale * scale)
    throw domain_error("isotropic input, dot(v,v) ~ 0");

  if (d == 1 || norm1sq(w.tail(d - 1)) < 1e-30 * scale * scale) {
    // already (w0, 0, ..., 0); fix the sign so the produced entry is the
    // principal-branch sqrt of w^2
    const cdouble phase = std::sqrt(wsq) / w[0];  // +1 or -1
    if (std::abs(phase - 1.0) > 1e-14) {
      CMat R = CMat::Identity(ambient, ambient);
      R(offset, offset) = phase;
      M = R * M;
    }
    return;
  }

  CVec tail = w.tail(d - 1);
  if (std::abs(dot(tail, tail)) < kIsotropyRel * norm1sq(tail)) {
    bool fixed = false;
    for (int i = 1; i < d && !fixed; ++i) {
      CVec cand(d - 1);
      int c = 0;
      for (int j = 0; j < d; ++j)
        if (j != i) cand[c++] = w[j];
      if (std::abs(dot(cand, cand)) >= kIsotropyRel * norm1sq(cand)) {
        std::swap(w[0], w[i]);
        CMat P = CMat::Identity(ambient, ambient);
        P(offset, offset) = P(offset + i, offset + i) = 0.0;
        P(offset, offset + i) = P(offset + i, offset) = 1.0;
        M = P * M;
        perms.emplace_back(offset, offset + i);
        fixed = true;
      }
    }
    if (!fixed) throw domain_error("no anisotropic deletion tail found");
    tail = w.tail(d - 1);
  }

  reduce_single_rec(tail, offset + 1, M, perms, tol, scale);

  // head entry is untouched by the tail rotations; the tail collapses to
  // its principal-branch square root at position offset+1
  const cdouble w1 = w[0];
  const cdouble w2 = std::sqrt(dot(tail, tail));
  const cdouble r = std::sqrt(w1 * w1 + w2 * w2);  // = sqrt(w.w)
  CMat G = CMat::Identity(ambient, ambient);
  G(offset, offset) = w1 / r;
  G(offset, offset + 1) = w2 / r;
  G(offset + 1, offset) = -w2 / r;
  G(offset + 1, offset + 1) = w1 / r;
  M = G * M;
}

}  // namespace

FrameReduction reduce_single(const CVec& v, const Tol& tol) {
  double scale = 1.0;
  for (int j = 0; j < v.size(); ++j) scale = std::max(scale, std::abs(v[j]));
  if (std::abs(dot(v, v)) < tol.abs * scale * scale)
    throw domain_error("reduce_single: isotropic input, dot(v,v) ~ 0");
  return reduce_frame({v}, tol);
}

FrameReduction reduce_frame(const std::vector<CVec>& vs, const Tol& tol) {
  if (vs.empty()) throw usage_error("reduce_frame: no vectors");
  const int D = (int)vs[0].size();
  const int m = (int)vs.size();
  if (m > D) throw usage_error("reduce_frame: more vectors than dimensions");
  for (const CVec& v : vs)
    if ((int)v.size() != D) throw usage_error("reduce_frame: length mismatch");

  double scale = 1.0;
  for (const CVec& v : vs)
    for (int j = 0; j < D; ++j) scale = std::max(scale, std::abs(v[j]));

  FrameReduction out;
  out.M = CMat::Identity(D, D);

  for (int i = 0; i < m; ++i) {
    CVec w = out.M * vs[i];
    CVec sub = w.tail(D - i);
    const cdouble subsq = dot(sub, sub);  // = detG_{i+1} / detG_i
    if (std::abs(subsq) < tol.abs * scale * scale) {
      std::ostringstream msg;
      msg << "reduce_frame: degenerate Gram, leading minor " << (i + 1)
          << " vanishes (diagonal square ~ " << std::abs(subsq) << ")";
      throw domain_error(msg.str());
    }
    try {
      reduce_single_rec(sub, i, out.M, out.permutations_applied, tol, scale);
    } catch (const domain_error& e) {
      std::ostringstream msg;
      msg << "reduce_frame: vector " << (i + 1) << ": " << e.what();
      throw domain_error(msg.str());
    }
  }

  out.reduced.reserve(m);
  for (int i = 0; i < m; ++i) out.reduced.push_back(out.M * vs[i]);
  return out;
}

bool is_triangular(const std::vector<CVec>& vs, double scale, const Tol& tol) {
  for (size_t i = 0; i < vs.size(); ++i)
    for (int j = (int)i; j < vs[i].size(); ++j)
      if (std::abs(vs[i][j]) > tol.abs * scale) return false;
  return true;
}

CMat random_complex_orthogonal(int D, unsigned long seed, double imag_spread) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  std::uniform_real_distribution<double> imag(-imag_spread, imag_spread);
  CMat M = CMat::Identity(D, D);
  if (D == 1) return M;
  std::uniform_int_distribution<int> pick(0, D - 1);
  for (int s = 0; s < 2 * D; ++s) {
    int i = pick(rng), j = pick(rng);
    if (i == j) continue;
    const cdouble th(angle(rng), imag(rng));
    const cdouble c = std::cos(th), sn = std::sin(th);
    CMat G = CMat::Identity(D, D);
    G(i, i) = c;
    G(i, j) = sn;
    G(j, i) = -sn;
    G(j, j) = c;
    M = G * M;
  }
  return M;
}

}  // namespace loopcut
