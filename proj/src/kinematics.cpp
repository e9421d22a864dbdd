#include "loopcut/kinematics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace loopcut {

KinematicConfig::KinematicConfig(int n_, int D_, std::vector<double> masses_,
                                 std::vector<CVec> momenta_,
                                 std::vector<cdouble> regulators_)
    : n(n_), D(D_), masses(std::move(masses_)), momenta(std::move(momenta_)),
      regulators(std::move(regulators_)) {
  if (n < 2) throw usage_error("KinematicConfig: need n >= 2 edges");
  if (D < 1) throw usage_error("KinematicConfig: need D >= 1");
  if ((int)masses.size() != n)
    throw usage_error("KinematicConfig: expected " + std::to_string(n) +
                      " masses, got " + std::to_string(masses.size()));
  for (double m : masses)
    if (!(m > 0.0))
      throw usage_error("KinematicConfig: masses must be strictly positive");
  if ((int)momenta.size() != n - 1)
    throw usage_error("KinematicConfig: expected " + std::to_string(n - 1) +
                      " momenta, got " + std::to_string(momenta.size()));
  for (const CVec& p : momenta)
    if ((int)p.size() != D)
      throw usage_error("KinematicConfig: momentum dimension mismatch");
  if (regulators.empty()) regulators.assign(n, cdouble(1.0, 0.0));
  if ((int)regulators.size() != n)
    throw usage_error("KinematicConfig: expected " + std::to_string(n) +
                      " regulators");
}

double KinematicConfig::scale() const {
  double s = 1.0;
  for (const CVec& p : momenta)
    for (int j = 0; j < p.size(); ++j) s = std::max(s, std::abs(p[j]));
  for (double m : masses) s = std::max(s, m);
  return s;
}

cdouble dot(const CVec& a, const CVec& b) {
  if (a.size() != b.size())
    throw usage_error("dot: length mismatch (" + std::to_string(a.size()) +
                      " vs " + std::to_string(b.size()) + ")");
  cdouble s = 0.0;
  for (int i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

cdouble gram_det(const std::vector<CVec>& momenta) {
  const int m = (int)momenta.size();
  if (m == 0) return cdouble(1.0, 0.0);
  CMat g(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) g(i, j) = g(j, i) = dot(momenta[i], momenta[j]);
  return g.determinant();
}

cdouble kallen(cdouble a, cdouble b, cdouble c) {
  return a * a + b * b + c * c - 2.0 * (a * b + b * c + c * a);
}

CVec partial_sum(const KinematicConfig& config, int i) {
  if (i < 1 || i > config.n)
    throw usage_error("partial_sum: edge index " + std::to_string(i) +
                      " out of range 1.." + std::to_string(config.n));
  CVec P = CVec::Zero(config.D);
  for (int j = 1; j <= i - 1; ++j) P += config.momenta[j - 1];
  return P;
}

bool in_Tn(const KinematicConfig& config, const Tol& tol) {
  const double s = config.scale();
  double thresh = tol.abs;
  for (int i = 0; i < 2 * (config.n - 1); ++i) thresh *= s;
  return std::abs(gram_det(config.momenta)) > thresh;
}

KinematicConfig contract(const KinematicConfig& config,
                         const std::vector<int>& I) {
  if (I.size() < 2)
    throw domain_error("contract: subset must have at least 2 edges");
  for (size_t l = 0; l + 1 < I.size(); ++l)
    if (I[l] >= I[l + 1])
      throw usage_error("contract: subset must be strictly ascending");
  if (I.front() < 1 || I.back() > config.n)
    throw usage_error("contract: subset indices out of range");

  const int m = (int)I.size();
  std::vector<double> masses(m);
  std::vector<cdouble> regs(m);
  for (int l = 0; l < m; ++l) {
    masses[l] = config.masses[I[l] - 1];
    regs[l] = config.regulators[I[l] - 1];
  }
  std::vector<CVec> momenta;
  momenta.reserve(m - 1);
  for (int l = 0; l + 1 < m; ++l) {
    CVec q = CVec::Zero(config.D);
    for (int j = I[l]; j <= I[l + 1] - 1; ++j) q += config.momenta[j - 1];
    momenta.push_back(std::move(q));
  }
  return KinematicConfig(m, config.D, std::move(masses), std::move(momenta),
                         std::move(regs));
}

namespace {

const std::vector<std::string> kLabels2 = {"s"};
const std::vector<std::string> kLabels3 = {"s", "t", "u"};
const std::vector<std::string> kLabels4 = {"s", "t", "u", "v", "w", "x"};

// channel momentum = sum of the listed external momenta (1-based indices)
const std::map<std::string, std::vector<int>> kEdges2 = {{"s", {1}}};
const std::map<std::string, std::vector<int>> kEdges3 = {
    {"s", {1}}, {"t", {2}}, {"u", {1, 2}}};
const std::map<std::string, std::vector<int>> kEdges4 = {
    {"s", {1}},    {"t", {2}},    {"u", {3}},
    {"v", {1, 2}}, {"w", {1, 3}}, {"x", {2, 3}}};

// sign applied to the raw bilinear square when storing: n <= 3 uses the
// Minkowski-style -q^2 values, n = 4 stores raw q^2.
double stored_sign(int n) { return n <= 3 ? -1.0 : 1.0; }

}  // namespace

const std::vector<std::string>& channel_labels(int n) {
  switch (n) {
    case 2: return kLabels2;
    case 3: return kLabels3;
    case 4: return kLabels4;
    default:
      throw usage_error("channel_labels: fixed label sets exist for n = 2..4");
  }
}

const std::vector<int>& channel_edges(int n, const std::string& label) {
  const std::map<std::string, std::vector<int>>* table = nullptr;
  switch (n) {
    case 2: table = &kEdges2; break;
    case 3: table = &kEdges3; break;
    case 4: table = &kEdges4; break;
    default:
      throw usage_error("channel_edges: fixed label sets exist for n = 2..4");
  }
  auto it = table->find(label);
  if (it == table->end())
    throw usage_error("channel_edges: unknown channel label '" + label +
                      "' for n = " + std::to_string(n));
  return it->second;
}

cdouble Invariants::q_squared(const std::string& label) const {
  auto it = values.find(label);
  if (it == values.end())
    throw usage_error("Invariants: unknown label '" + label + "'");
  return stored_sign(n) * it->second;
}

cdouble Invariants::minkowski(const std::string& label) const {
  return -q_squared(label);
}

Invariants invariants_of(const KinematicConfig& config) {
  Invariants inv;
  inv.n = config.n;
  for (const std::string& label : channel_labels(config.n)) {
    CVec q = CVec::Zero(config.D);
    for (int j : channel_edges(config.n, label)) q += config.momenta[j - 1];
    inv.values[label] = stored_sign(config.n) * dot(q, q);
  }
  return inv;
}

std::vector<CVec> momenta_from_invariants(int n, int D,
                                          const Invariants& targets,
                                          const Tol& tol) {
  if (n < 2 || n > 4)
    throw usage_error("momenta_from_invariants: n must be 2..4");
  if (D < n - 1)
    throw usage_error("momenta_from_invariants: need D >= n-1");
  if (targets.n != n)
    throw usage_error("momenta_from_invariants: invariant set is for n = " +
                      std::to_string(targets.n));

  const int m = n - 1;
  // raw bilinear Gram matrix g_ij = p_i . p_j from the channel squares
  CMat g(m, m);
  for (int i = 0; i < m; ++i) {
    std::string di(1, "stu"[i]);
    g(i, i) = targets.q_squared(n == 2 ? "s" : di);
  }
  if (n >= 3) {
    auto off = [&](const std::string& label, int i, int j) {
      g(i, j) = g(j, i) =
          0.5 * (targets.q_squared(label) - g(i, i) - g(j, j));
    };
    if (n == 3) off("u", 0, 1);
    if (n == 4) {
      off("v", 0, 1);
      off("w", 0, 2);
      off("x", 1, 2);
    }
  }

  // complex lower-triangular factorization g = L L^T (no conjugation),
  // principal-branch square roots on the diagonal
  double scale = 1.0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) scale = std::max(scale, std::abs(g(i, j)));
  CMat L = CMat::Zero(m, m);
  for (int j = 0; j < m; ++j) {
    cdouble d = g(j, j);
    for (int k = 0; k < j; ++k) d -= L(j, k) * L(j, k);
    if (std::abs(d) < tol.abs * scale) {
      std::ostringstream msg;
      msg << "momenta_from_invariants: target Gram is degenerate, leading "
             "minor "
          << (j + 1) << " vanishes";
      throw domain_error(msg.str());
    }
    L(j, j) = std::sqrt(d);
    for (int i = j + 1; i < m; ++i) {
      cdouble s = g(i, j);
      for (int k = 0; k < j; ++k) s -= L(i, k) * L(j, k);
      L(i, j) = s / L(j, j);
    }
  }

  std::vector<CVec> momenta(m);
  for (int i = 0; i < m; ++i) {
    momenta[i] = CVec::Zero(D);
    for (int j = 0; j <= i; ++j) momenta[i][j] = L(i, j);
  }
  return momenta;
}

}  // namespace loopcut
