#pragma once

// Test-only references for the pointer policy: a second, loop-by-loop
// implementation of the documented forward equations that reads the flat
// parameter vector by offset, and a central-difference gradient.

#include <algorithm>
#include <cmath>
#include <functional>
#include <span>
#include <vector>

#include "surfpack/geometry.hpp"

namespace surfpack::testing {

inline std::vector<double> reference_probs(std::span<const double> w,
                                           std::size_t d,
                                           const Instance& inst,
                                           const std::vector<bool>& taken) {
  const std::size_t n = inst.items.size();
  const double* We = w.data();
  const double* be = We + 3 * d;
  const double* Wc = be + d;
  const double* Wg = Wc + d * d;
  const double* Wr = Wg + d * d;
  const double* bu = Wr + d * d;
  const double* v = bu + d;

  double mx = 0;
  for (const auto& it : inst.items)
    mx = std::max({mx, double(it.l), double(it.w), double(it.h)});

  std::vector<std::vector<double>> e(n, std::vector<double>(d));
  for (std::size_t i = 0; i < n; ++i) {
    const double f[3] = {inst.items[i].l / mx, inst.items[i].w / mx,
                         inst.items[i].h / mx};
    for (std::size_t r = 0; r < d; ++r) {
      double s = be[r];
      for (int c = 0; c < 3; ++c) s += We[r * 3 + c] * f[c];
      e[i][r] = std::tanh(s);
    }
  }
  std::vector<double> g(d, 0.0), m(d, 0.0);
  std::size_t cnt = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t r = 0; r < d; ++r) g[r] += e[i][r];
    if (taken[i]) {
      ++cnt;
      for (std::size_t r = 0; r < d; ++r) m[r] += e[i][r];
    }
  }
  for (std::size_t r = 0; r < d; ++r) {
    g[r] /= double(n);
    if (cnt) m[r] /= double(cnt);
  }
  std::vector<double> q(d, 0.0);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c)
      q[r] += Wc[r * d + c] * m[c] + Wg[r * d + c] * g[c];

  std::vector<double> u(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    if (taken[i]) continue;
    for (std::size_t r = 0; r < d; ++r) {
      double z = bu[r] + q[r];
      for (std::size_t c = 0; c < d; ++c) z += Wr[r * d + c] * e[i][c];
      u[i] += v[r] * std::tanh(z);
    }
  }
  double z = 0;
  double top = -1e300;
  for (std::size_t i = 0; i < n; ++i)
    if (!taken[i]) top = std::max(top, u[i]);
  for (std::size_t i = 0; i < n; ++i)
    if (!taken[i]) z += std::exp(u[i] - top);
  std::vector<double> p(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    if (!taken[i]) p[i] = std::exp(u[i] - top) / z;
  return p;
}

inline double reference_log_prob(std::span<const double> w, std::size_t d,
                                  const Instance& inst,
                                  const std::vector<std::size_t>& seq) {
  std::vector<bool> taken(inst.items.size(), false);
  double lp = 0;
  for (std::size_t i : seq) {
    lp += std::log(reference_probs(w, d, inst, taken)[i]);
    taken[i] = true;
  }
  return lp;
}

inline std::vector<double> central_difference(
    std::vector<double> x, double eps,
    const std::function<double(std::span<const double>)>& f) {
  std::vector<double> g(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double saved = x[k];
    x[k] = saved + eps;
    const double up = f(x);
    x[k] = saved - eps;
    const double down = f(x);
    x[k] = saved;
    g[k] = (up - down) / (2 * eps);
  }
  return g;
}

// Largest per-coordinate |a - b| / max(|a|, |b|, floor).
inline double max_relative_error(const std::vector<double>& a,
                                 const std::vector<double>& b,
                                 double floor = 1e-3) {
  double worst = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double den = std::max({std::abs(a[k]), std::abs(b[k]), floor});
    worst = std::max(worst, std::abs(a[k] - b[k]) / den);
  }
  return worst;
}

}  // namespace surfpack::testing
