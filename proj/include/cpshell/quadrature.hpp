#pragma once

// Globally adaptive Gauss-Kronrod (7/15) quadrature. Integrands are evaluated
// a panel at a time: f(std::span<const double> x, std::span<double> y) fills
// y[i] = f(x[i]) for the 15 Kronrod nodes, which lets vectorised kernels see
// every node of a panel in one call.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <span>
#include <vector>

namespace cpshell {

struct QuadOptions {
  double rel_tol = 1e-10;
  double abs_tol = 0.0;
  int max_panels = 4000;
};

struct QuadResult {
  double value = 0.0;
  double abs_error = 0.0;
  int panels = 0;
  int evaluations = 0;
  bool converged = false;
};

namespace detail {

inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for nodes 1, 3, 5 and the centre.
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b, value, error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

template <class BatchFn>
Panel gauss_kronrod_panel(BatchFn& f, double a, double b) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  std::array<double, 15> x{}, y{};
  for (int i = 0; i < 7; ++i) {
    x[2 * i] = centre - half * kKronrodNodes[i];
    x[2 * i + 1] = centre + half * kKronrodNodes[i];
  }
  x[14] = centre;
  f(std::span<const double>(x), std::span<double>(y));

  double kronrod = kKronrodWeights[7] * y[14];
  double gauss = kGaussWeights[3] * y[14];
  double abs_sum = std::abs(kronrod);
  for (int i = 0; i < 7; ++i) {
    const double pair = y[2 * i] + y[2 * i + 1];
    kronrod += kKronrodWeights[i] * pair;
    abs_sum += kKronrodWeights[i] * (std::abs(y[2 * i]) + std::abs(y[2 * i + 1]));
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * pair;
  }
  const double mean = 0.5 * kronrod;
  double asc = kKronrodWeights[7] * std::abs(y[14] - mean);
  for (int i = 0; i < 7; ++i)
    asc += kKronrodWeights[i] * (std::abs(y[2 * i] - mean) + std::abs(y[2 * i + 1] - mean));

  const double value = kronrod * half;
  const double res_abs = abs_sum * std::abs(half);
  const double res_asc = asc * std::abs(half);
  double err = std::abs((kronrod - gauss) * half);
  // QUADPACK error scaling
  if (res_asc != 0.0 && err != 0.0) err = res_asc * std::min(1.0, std::pow(200.0 * err / res_asc, 1.5));
  const double eps = std::numeric_limits<double>::epsilon();
  if (res_abs > std::numeric_limits<double>::min() / (50.0 * eps)) err = std::max(50.0 * eps * res_abs, err);
  return {a, b, value, err};
}

}  // namespace detail

/// Integrate over [breaks.front(), breaks.back()], seeding one panel per
/// interval between consecutive breakpoints.
template <class BatchFn>
QuadResult integrate_batched(BatchFn&& f, std::span<const double> breaks, const QuadOptions& opts = {}) {
  QuadResult out;
  if (breaks.size() < 2) return out;
  std::priority_queue<detail::Panel> heap;
  std::vector<detail::Panel> done;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    if (!(breaks[i + 1] > breaks[i])) continue;
    heap.push(detail::gauss_kronrod_panel(f, breaks[i], breaks[i + 1]));
    out.evaluations += 15;
  }
  const auto totals = [&](double& value, double& error) {
    value = 0.0;
    error = 0.0;
    auto tmp = heap;
    while (!tmp.empty()) {
      value += tmp.top().value;
      error += tmp.top().error;
      tmp.pop();
    }
    for (const auto& p : done) {
      value += p.value;
      error += p.error;
    }
  };

  double value = 0.0, error = 0.0;
  totals(value, error);
  int panels = static_cast<int>(heap.size());
  while (!heap.empty() && error > std::max(opts.abs_tol, opts.rel_tol * std::abs(value))) {
    if (panels >= opts.max_panels) break;
    const detail::Panel worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b) ||
        (worst.b - worst.a) < 64.0 * std::numeric_limits<double>::epsilon() * std::abs(mid)) {
      // cannot split further in double precision
      done.push_back(worst);
      continue;
    }
    const detail::Panel left = detail::gauss_kronrod_panel(f, worst.a, mid);
    const detail::Panel right = detail::gauss_kronrod_panel(f, mid, worst.b);
    out.evaluations += 30;
    ++panels;
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }

  // Recompute the sums in a fixed order (by position) for reproducibility.
  std::vector<detail::Panel> all = std::move(done);
  while (!heap.empty()) {
    all.push_back(heap.top());
    heap.pop();
  }
  std::sort(all.begin(), all.end(), [](const auto& p, const auto& q) { return p.a < q.a; });
  value = 0.0;
  error = 0.0;
  for (const auto& p : all) {
    value += p.value;
    error += p.error;
  }
  out.value = value;
  out.abs_error = error;
  out.panels = static_cast<int>(all.size());
  out.converged = error <= std::max(opts.abs_tol, opts.rel_tol * std::abs(value));
  return out;
}

/// Scalar-integrand convenience over [a, b].
template <class Fn>
QuadResult integrate(Fn&& f, double a, double b, const QuadOptions& opts = {}) {
  auto batch = [&f](std::span<const double> x, std::span<double> y) {
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = f(x[i]);
  };
  const std::array<double, 2> br{a, b};
  return integrate_batched(batch, std::span<const double>(br), opts);
}

/// Integral over [0, inf) through k = scale u / (1 - u), u in (0, 1). The
/// Kronrod rule never touches u = 0 or u = 1. `k_breaks` are interior
/// breakpoints in the original variable.
template <class BatchFn>
QuadResult integrate_half_line(BatchFn&& f, double scale, std::span<const double> k_breaks,
                               const QuadOptions& opts = {}) {
  std::vector<double> u_breaks{0.0};
  for (double k : k_breaks)
    if (k > 0.0 && std::isfinite(k)) u_breaks.push_back(k / (k + scale));
  u_breaks.push_back(1.0);
  std::sort(u_breaks.begin(), u_breaks.end());
  u_breaks.erase(std::unique(u_breaks.begin(), u_breaks.end()), u_breaks.end());

  auto mapped = [&f, scale](std::span<const double> u, std::span<double> y) {
    std::array<double, 15> k{}, jac{};
    const std::size_t n = u.size();
    for (std::size_t i = 0; i < n; ++i) {
      const double one_minus = 1.0 - u[i];
      k[i] = scale * u[i] / one_minus;
      jac[i] = scale / (one_minus * one_minus);
    }
    f(std::span<const double>(k.data(), n), y);
    for (std::size_t i = 0; i < n; ++i) y[i] = (y[i] == 0.0) ? 0.0 : y[i] * jac[i];
  };
  return integrate_batched(mapped, std::span<const double>(u_breaks), opts);
}

/// Geometric breakpoints lo, lo*ratio, ... up to and including hi.
inline std::vector<double> geometric_breaks(double lo, double hi, double ratio) {
  std::vector<double> out;
  if (!(lo > 0.0) || !(hi > lo)) return out;
  const int n = static_cast<int>(std::ceil(std::log(hi / lo) / std::log(ratio)));
  for (int i = 0; i <= n; ++i) out.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / n));
  return out;
}

}  // namespace cpshell
