// Coefficient polynomials of the four-edge channel conditions, one place,
// transcribed term by term and left unsimplified. Validated against the
// pinch recursion through the identity a y^2 + b y + c = r_4^2 * detGram_3
// (see tests). All invariants enter in the Minkowski-style convention.

#include "loopcut/landau.hpp"

namespace loopcut {

namespace {

cdouble get(const std::map<std::string, cdouble>& m, const char* key) {
  auto it = m.find(key);
  if (it == m.end())
    throw usage_error(std::string("box_channel_coeffs: missing invariant '") +
                      key + "'");
  return it->second;
}

// channel s: inputs t, u, v, w, x
std::array<cdouble, 3> coeffs_s(cdouble t, cdouble u, cdouble v, cdouble w,
                                cdouble x, double m1s, double m2s, double m3s,
                                double m4s) {
  const cdouble a =
      (m2s * m2s - 2.0 * m2s * (2.0 * m3s - m4s + t + u) + 4.0 * m3s * m3s -
       4.0 * m3s * (m4s + t + u - x) + (-m4s + t + u) * (-m4s + t + u)) /
      16.0;

  const cdouble b =
      (m2s * (m3s * (-t - 3.0 * u + v + 3.0 * w + 2.0 * x) +
              m4s * (2.0 * u - v - w - x) - 2.0 * t * t +
              t * (-4.0 * u + v + 2.0 * (w + x)) - 2.0 * u * u +
              u * (4.0 * v + w + x) - v * x) +
       m3s * (2.0 * m3s * (t + u - v - w - x) +
              2.0 * x * (2.0 * t + 2.0 * u - v - w) -
              (3.0 * t + u) * (t + u - v - w) - 2.0 * x * x) +
       m4s * (m3s * (-t - 3.0 * u + 3.0 * v + w + 2.0 * x) +
              t * (-2.0 * v + w + x) + v * (u + x)) +
       m2s * m2s * (t + 2.0 * u - w - x) +
       m1s * (m2s * (-t - 3.0 * u + x) + m4s * (3.0 * t + u - x) +
              (t - u) * (-2.0 * m3s + t + u - x)) -
       m4s * m4s * (t + v) - x * (t * t + t * (u - v) + u * v) +
       t * (t + u) * (t + u - v - w)) /
      8.0;

  const cdouble c =
      (m2s * m2s * (t * t + 4.0 * t * u - 2.0 * t * (w + x) + 4.0 * u * u -
                    4.0 * u * (v + w + x) + (w + x) * (w + x)) +
       m1s * m1s * (t * t - 2.0 * t * (u + x) + (u - x) * (u - x)) +
       2.0 * m1s *
           (-m2s * (t * t + t * (u - w - 2.0 * x) + 2.0 * u * u -
                    u * (2.0 * v + w + 3.0 * x) + x * (w + x)) +
            m3s * (-t * t + t * (v + w + x) + u * u - u * (v + w + x) +
                   x * (w - v)) +
            m4s * (t * t + t * (3.0 * u - v - 2.0 * w - x) + v * (x - u)) +
            t * t * t - t * t * (v + w + 2.0 * x) +
            t * (-u * u + u * (v + w - 2.0 * x) + x * (2.0 * v + w + x)) +
            v * x * (u - x)) -
       2.0 * m2s *
           (m4s * (t * t + t * (2.0 * u - v - w - x) + v * (x - w)) +
            m3s * (x * (t - u - v + w) - (t - 2.0 * u + w) * (t + u - v - w)) +
            t * t * t + t * t * (3.0 * u - v - 2.0 * (w + x)) +
            t * (2.0 * u * u - 4.0 * u * v - 3.0 * u * (w + x) +
                 v * (w + 2.0 * x) + (w + x) * (w + x)) +
            v * (-2.0 * u * u + 2.0 * u * (v + w + x) - x * (w + x))) +
       (m3s * (-t - u + v + w) + m4s * (t - v) + t * (t + u - v - w) +
        x * (v - t)) *
           (m3s * (-t - u + v + w) + m4s * (t - v) + t * (t + u - v - w) +
            x * (v - t))) /
      16.0;

  return {a, b, c};
}

// channel v: inputs s, t, u, w, x
std::array<cdouble, 3> coeffs_v(cdouble s, cdouble t, cdouble u, cdouble w,
                                cdouble x, double m1s, double m2s, double m3s,
                                double m4s) {
  const cdouble a = ((-m3s + m4s + t - x) * (-m3s + m4s + t - x) -
                     4.0 * m2s * u) /
                    16.0;

  const cdouble b =
      (m2s * (m3s * (s - t + 2.0 * u - w + x) + m4s * (-s + t + w - x) -
              x * (s + 2.0 * (t + u) - w) + s * t + 4.0 * s * u + t * t +
              4.0 * t * u - t * w + 2.0 * u * u - 2.0 * u * w + x * x) +
       m4s * (m3s * (3.0 * s + 2.0 * t + u - w) + s * (-2.0 * t + u + x) +
              t * (-2.0 * t - u + w + 2.0 * x)) +
       m3s * (m3s * (-(2.0 * s + t + u - w)) + s * (3.0 * t + u - 2.0 * x) +
              x * (-2.0 * t - u + w) + 2.0 * t * (t + u - w)) -
       m4s * m4s * (s + t) +
       m1s * (m3s * (t - u - x) - m4s * (t + u - x) + 2.0 * m2s * u - t * t +
              t * (u + 2.0 * x) + x * (u - x)) -
       2.0 * m2s * m2s * u + s * x * (t - u) - s * t * (t + u) -
       t * (t - x) * (t + u - w - x)) /
      8.0;

  const cdouble c =
      (-2.0 * m2s *
           (m3s * (2.0 * s * s + s * (t + 3.0 * u - 3.0 * w - 2.0 * x) -
                   t * t + t * (u + x) + (u - w) * (2.0 * u - w - x)) +
            (s + t + 2.0 * u - w - x) *
                (m4s * (t - s) + s * (t + u) + t * (t + u - w - x))) -
       2.0 * m4s *
           (m3s * (2.0 * s * s + s * (t + 3.0 * u - w - 2.0 * x) +
                   t * (t + u - w)) +
            (s - t) * (s * (t + u) + t * (t + u - w - x))) -
       4.0 * m3s * s * s * t - 4.0 * m3s * s * s * u + 4.0 * m3s * s * s * x +
       4.0 * m3s * m3s * s * s +
       2.0 * m1s *
           (m2s * (-(s * (t + 3.0 * u - x) + t * t + t * (u - w - 2.0 * x) +
                     (u - x) * (2.0 * u - w - x))) +
            m3s * (x * (t - u + w) - (t - u) * (2.0 * s + t + u - w)) +
            m4s * (s * (3.0 * t + u - x) + t * (t + 3.0 * u - 2.0 * w - x)) +
            s * (t - u) * (t + u - x) +
            t * (x * (w - 2.0 * (t + u)) + (t - u) * (t + u - w) + x * x)) -
       6.0 * m3s * s * t * t +
       m2s * m2s * (s + t + 2.0 * u - w - x) * (s + t + 2.0 * u - w - x) -
       8.0 * m3s * s * t * u + 6.0 * m3s * s * t * w + 8.0 * m3s * s * t * x +
       4.0 * m3s * m3s * s * t + m4s * m4s * (s - t) * (s - t) -
       2.0 * m3s * s * u * u + 2.0 * m3s * s * u * w + 8.0 * m3s * s * u * x +
       4.0 * m3s * m3s * s * u - 4.0 * m3s * s * w * x -
       4.0 * m3s * m3s * s * w - 4.0 * m3s * s * x * x -
       4.0 * m3s * m3s * s * x - 2.0 * m3s * t * t * t +
       m1s * m1s * (t * t - 2.0 * t * (u + x) + (u - x) * (u - x)) -
       4.0 * m3s * t * t * u + 4.0 * m3s * t * t * w + 2.0 * m3s * t * t * x +
       m3s * m3s * t * t - 2.0 * m3s * t * u * u + 4.0 * m3s * t * u * w +
       2.0 * m3s * t * u * x + 2.0 * m3s * m3s * t * u -
       2.0 * m3s * t * w * w - 2.0 * m3s * t * w * x -
       2.0 * m3s * m3s * t * w + m3s * m3s * u * u -
       2.0 * m3s * m3s * u * w + m3s * m3s * w * w +
       (s * (t + u) + t * (t + u - w - x)) *
           (s * (t + u) + t * (t + u - w - x))) /
      16.0;

  return {a, b, c};
}

// channel w: inputs s, t, u, v, x
std::array<cdouble, 3> coeffs_w(cdouble s, cdouble t, cdouble u, cdouble v,
                                cdouble x, double m1s, double m2s, double m3s,
                                double m4s) {
  const cdouble a =
      (-2.0 * m2s * (m3s + t) + (t - m3s) * (t - m3s) + m2s * m2s) / 16.0;

  const cdouble b =
      (m2s * (m4s * (-s + t + v) + m3s * (3.0 * s + 3.0 * u - v - x) +
              2.0 * s * t + s * u + 2.0 * t * t + 3.0 * t * u - t * v -
              2.0 * t * x - 2.0 * u * v + v * x) +
       m3s * (m3s * (-(2.0 * s + t + u - v)) + s * (3.0 * t + u - 2.0 * x) +
              2.0 * t * (t + u - v) + x * (v - t)) +
       m2s * m2s * (-(s + t + 2.0 * u - x)) +
       m4s * (m3s * (s + t - v) + t * (s - t + v)) +
       m1s * (m2s * (t + u - x) + m3s * (t - u + x) +
              t * (-2.0 * m4s - t + u + x)) -
       t * (s * (t + u) + t * t + t * (u - v - x) + v * x)) /
      8.0;

  const cdouble c =
      ((t * t - 2.0 * (u + x) * t + (u - x) * (u - x)) * m1s * m1s +
       2.0 *
           ((t - v) * x * x +
            (s * (u - t) - 2.0 * t * (t + u) + (2.0 * t + u) * v) * x -
            (t * t + s * t + u * t + 2.0 * u * u + x * x + 3.0 * s * u -
             2.0 * u * v - (s + 2.0 * t + 3.0 * u) * x) *
                m2s -
            ((t - u) * (2.0 * s + t + u - v) + (-t + u + v) * x) * m3s +
            (t * t + 3.0 * s * t + 3.0 * u * t - v * t + s * u - u * v -
             (s + t - v) * x) *
                m4s +
            (t - u) * ((s + t) * (t + u) - t * v)) *
           m1s +
       (s * s + 2.0 * t * s + 4.0 * u * s + t * t + 4.0 * u * u + x * x +
        4.0 * t * u - 4.0 * u * v - 2.0 * (s + t + 2.0 * u) * x) *
           m2s * m2s +
       4.0 * s * s * m3s * m3s + t * t * m3s * m3s + u * u * m3s * m3s +
       v * v * m3s * m3s + 4.0 * s * t * m3s * m3s + 4.0 * s * u * m3s * m3s +
       2.0 * t * u * m3s * m3s - 4.0 * s * v * m3s * m3s -
       2.0 * t * v * m3s * m3s - 2.0 * u * v * m3s * m3s -
       4.0 * s * x * m3s * m3s +
       (s * s - 2.0 * (t + v) * s + (t - v) * (t - v)) * m4s * m4s +
       ((s + t) * (t + u) - t * v) * ((s + t) * (t + u) - t * v) +
       (t - v) * (t - v) * x * x - 2.0 * t * t * t * m3s -
       6.0 * s * t * t * m3s - 2.0 * s * u * u * m3s - 2.0 * t * u * u * m3s -
       2.0 * t * v * v * m3s - 4.0 * s * x * x * m3s - 4.0 * s * s * t * m3s -
       4.0 * s * s * u * m3s - 4.0 * t * t * u * m3s - 8.0 * s * t * u * m3s +
       4.0 * t * t * v * m3s + 6.0 * s * t * v * m3s + 2.0 * s * u * v * m3s +
       4.0 * t * u * v * m3s + 4.0 * s * s * x * m3s + 2.0 * t * t * x * m3s +
       2.0 * v * v * x * m3s + 8.0 * s * t * x * m3s + 8.0 * s * u * x * m3s +
       2.0 * t * u * x * m3s - 4.0 * s * v * x * m3s - 4.0 * t * v * x * m3s -
       2.0 * u * v * x * m3s -
       2.0 *
           ((t + u) * s * s + (2.0 * t - u) * v * s - (t + v) * x * s +
            (2.0 * s * s + (t + 3.0 * u - 3.0 * v - 2.0 * x) * s +
             (t - v) * (t + u - v)) *
                m3s +
            (t - v) * ((t - v) * x - t * (t + u - v))) *
           m4s -
       2.0 * (t * (t - v) * (t + u - v) + s * (t * t + (u - v) * t + u * v)) *
           x -
       2.0 * m2s *
           (t * t * t + (3.0 * u - v - 2.0 * x) * t * t +
            (2.0 * u - x) * (u - 2.0 * v - x) * t +
            (2.0 * s * s + (t + 3.0 * u - v - 2.0 * x) * s - t * t +
             2.0 * u * (u - v) - (u + v) * x + t * (u + v + x)) *
                m3s +
            ((s - t + v) * x - (s - t) * (s + t + 2.0 * u - v)) * m4s +
            s * s * (t + u) +
            v * (-2.0 * u * u + 2.0 * (v + x) * u - x * x) +
            s * (2.0 * t * t + (4.0 * u - v - 2.0 * x) * t + 2.0 * u * u +
                 v * x - u * (4.0 * v + x)))) /
      16.0;

  return {a, b, c};
}

}  // namespace

std::array<cdouble, 3> box_channel_coeffs(
    const std::string& channel, const std::map<std::string, cdouble>& others,
    const std::array<double, 4>& masses_sq) {
  const double m1s = masses_sq[0], m2s = masses_sq[1], m3s = masses_sq[2],
               m4s = masses_sq[3];
  if (channel == "s")
    return coeffs_s(get(others, "t"), get(others, "u"), get(others, "v"),
                    get(others, "w"), get(others, "x"), m1s, m2s, m3s, m4s);
  if (channel == "v")
    return coeffs_v(get(others, "s"), get(others, "t"), get(others, "u"),
                    get(others, "w"), get(others, "x"), m1s, m2s, m3s, m4s);
  if (channel == "w")
    return coeffs_w(get(others, "s"), get(others, "t"), get(others, "u"),
                    get(others, "v"), get(others, "x"), m1s, m2s, m3s, m4s);
  throw usage_error("box_channel_coeffs: unknown channel '" + channel + "'");
}

}  // namespace loopcut
