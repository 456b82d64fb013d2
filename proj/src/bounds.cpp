#include "unbordered/bounds.hpp"

#include <cmath>
#include <numbers>

#include "unbordered/error.hpp"
#include "unbordered/ruler.hpp"
#include "unbordered/twod.hpp"

namespace unbordered {

namespace {

double leech_objective(double delta, double big_n) {
  return big_n - std::sin(delta) / std::sin(delta / big_n);
}

long long ceil_sqrt(long long x) {
  auto r = static_cast<long long>(std::sqrt(static_cast<double>(x)));
  while (r * r > x) --r;
  while (r * r < x) ++r;
  return r;
}

}  // namespace

LeechResult leech_lower_detail(long long n, const LeechOptions& options) {
  if (n < 1) throw Error(Errc::InvalidParams, "leech_lower needs n >= 1");
  if (options.grid_points < 3) throw Error(Errc::InvalidParams, "grid needs >= 3 points");
  const double big_n = 2.0 * static_cast<double>(n) + 1.0;
  const int g = options.grid_points;
  const double step = 2.0 * std::numbers::pi / (g + 1);

  // sin(t * step) and sin(t * step / N) by the three-term recurrence
  // sin((t+1)h) = 2 cos(h) sin(th) - sin((t-1)h); only used to bracket.
  const double c1 = 2.0 * std::cos(step), c2 = 2.0 * std::cos(step / big_n);
  double s1_prev = 0.0, s1 = std::sin(step);
  double s2_prev = 0.0, s2 = std::sin(step / big_n);
  int best = 1;
  double best_value = big_n - s1 / s2;
  for (int t = 2; t <= g; ++t) {
    const double s1_next = c1 * s1 - s1_prev;
    const double s2_next = c2 * s2 - s2_prev;
    s1_prev = s1;
    s1 = s1_next;
    s2_prev = s2;
    s2 = s2_next;
    const double value = big_n - s1 / s2;
    if (value > best_value) {
      best_value = value;
      best = t;
    }
  }

  double lo = step * (best - 1), hi = step * (best + 1);
  if (lo <= 0.0) lo = step * 1e-3;
  if (hi >= 2.0 * std::numbers::pi) hi = 2.0 * std::numbers::pi - step * 1e-3;
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo), x2 = lo + inv_phi * (hi - lo);
  double f1 = leech_objective(x1, big_n), f2 = leech_objective(x2, big_n);
  while (hi - lo > options.delta_tolerance) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = leech_objective(x2, big_n);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = leech_objective(x1, big_n);
    }
  }
  const double delta = 0.5 * (lo + hi);
  double value = leech_objective(delta, big_n);
  // The refined point can only improve on the grid point it started from.
  const double grid_delta = step * best;
  if (const double at_grid = leech_objective(grid_delta, big_n); at_grid > value)
    return {std::sqrt(at_grid), grid_delta};
  return {std::sqrt(value), delta};
}

double leech_lower(long long n, const LeechOptions& options) {
  return leech_lower_detail(n, options).value;
}

double wichmann_upper(long long n) { return std::sqrt(3.0 * static_cast<double>(n)) + 4.0; }

double hb_upper_turan(long long n, long long k) {
  if (k < 2) throw Error(Errc::InvalidParams, "Turán bound needs k >= 2");
  const double ratio = 2.0 * static_cast<double>(k) / static_cast<double>(k - 1);
  return static_cast<double>(n) - std::sqrt(ratio * static_cast<double>(n - 1));
}

double hb_upper_243(long long n) {
  return static_cast<double>(n) - std::sqrt(2.43 * static_cast<double>(n - 1));
}

long long hb3_lower(long long n) {
  // ceil(2 sqrt(n+3)) = ceil(sqrt(4(n+3))), done in integers
  return n - ceil_sqrt(4 * (n + 3)) + 2;
}

double hb4_lower(long long n) {
  return static_cast<double>(n) - std::sqrt(3.0 * static_cast<double>(n) - 3.0) - 4.0;
}

long long needed_pairs(long long width, long long height) {
  return 2 * width * height - width - height;
}

double hb2d_upper(long long width, long long height, long long k) {
  if (k < 2) throw Error(Errc::InvalidParams, "2D Turán bound needs k >= 2");
  const double ratio = 2.0 * static_cast<double>(k) / static_cast<double>(k - 1);
  return static_cast<double>(width * height) -
         std::sqrt(ratio * static_cast<double>(needed_pairs(width, height)));
}

long long usable_lower(double bound) {
  return static_cast<long long>(std::ceil(bound - 1e-12));
}

long long usable_upper(double bound) {
  return static_cast<long long>(std::floor(bound + 1e-12));
}

Bounds1D bounds_1d(long long n, std::optional<long long> k) {
  if (n < 1 || n > 1'000'000'000) throw Error(Errc::InvalidParams, "bounds need 1 <= n <= 1e9");
  Bounds1D out{};
  out.n = n;
  out.m1_lower = leech_lower(n);
  out.m1_upper = wichmann_upper(n);
  out.m1_realized = n <= 5'000'000 ? cover_length(static_cast<int>(n)).size() : 0;
  out.k = k;
  if (k && *k >= 2) out.hb_upper_turan = hb_upper_turan(n, *k);
  out.hb_upper_243 = hb_upper_243(n);
  out.hb3_lower = hb3_lower(n);
  out.hb4_lower = hb4_lower(n);
  return out;
}

Bounds2D m2_bounds(int width, int height, std::optional<long long> k) {
  if (width < 1 || height < 1) throw Error(Errc::InvalidParams, "2D bounds need W, H >= 1");
  Bounds2D out{};
  out.width = width;
  out.height = height;
  const double w = width, h = height;
  out.lower = std::sqrt(4.0 * w * h - 2.0 * (w + h) + 0.25) + 0.5;
  out.needed_pairs = needed_pairs(width, height);
  if (width >= 2 && height >= 2) {
    out.realized_upper = construct_2d(width, height).size();
    out.cartesian_marks = cover_length(width - 1).size() * cover_length(height - 1).size();
  }
  if (k && *k >= 2) out.hb2d_upper = hb2d_upper(width, height, *k);
  return out;
}

}  // namespace unbordered
