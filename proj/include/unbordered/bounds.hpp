#pragma once

#include <cstddef>
#include <optional>

namespace unbordered {

struct LeechOptions {
  int grid_points = 100000;
  double delta_tolerance = 1e-9;
};

struct LeechResult {
  double value;  // sqrt of the maximum
  double delta;  // maximizing delta in (0, 2pi)
};

/// Maximum over delta in (0, 2pi) of
///   sqrt(2n + 1 - sin(delta) / sin(delta / (2n + 1))),
/// by a uniform grid followed by golden-section refinement around the best
/// grid point. Valid lower bound on the minimal number of marks M1(n).
[[nodiscard]] LeechResult leech_lower_detail(long long n, const LeechOptions& options = {});
[[nodiscard]] double leech_lower(long long n, const LeechOptions& options = {});

/// sqrt(3n) + 4
[[nodiscard]] double wichmann_upper(long long n);

/// n - sqrt(2k/(k-1) * (n-1)); k >= 2.
[[nodiscard]] double hb_upper_turan(long long n, long long k);

/// n - sqrt(2.43 (n-1))
[[nodiscard]] double hb_upper_243(long long n);

/// n - ceil(2 sqrt(n+3)) + 2, possibly negative for tiny n.
[[nodiscard]] long long hb3_lower(long long n);

/// n - sqrt(3n-3) - 4
[[nodiscard]] double hb4_lower(long long n);

/// 2nm - n - m: nonzero half-plane vectors an (n, m)-ruler must measure.
[[nodiscard]] long long needed_pairs(long long width, long long height);

/// mn - sqrt(2k/(k-1) * (2nm - n - m)); k >= 2.
[[nodiscard]] double hb2d_upper(long long width, long long height, long long k);

/// ceil(x) for the lower side of a real bound, floor for the upper side:
/// rounding always keeps the bound valid for integer quantities.
[[nodiscard]] long long usable_lower(double bound);
[[nodiscard]] long long usable_upper(double bound);

struct Bounds1D {
  long long n;
  double m1_lower;          // Leech
  double m1_upper;          // sqrt(3n) + 4
  std::size_t m1_realized;  // |cover_length(n)|
  std::optional<long long> k;
  std::optional<double> hb_upper_turan;  // needs k >= 2
  double hb_upper_243;
  long long hb3_lower;
  double hb4_lower;
};

[[nodiscard]] Bounds1D bounds_1d(long long n, std::optional<long long> k);

struct Bounds2D {
  long long width;
  long long height;
  double lower;  // sqrt(4WH - 2(W+H) + 1/4) + 1/2
  long long needed_pairs;
  std::optional<std::size_t> realized_upper;   // |construct_2d(W, H)|, W, H >= 2
  std::optional<std::size_t> cartesian_marks;  // |cover_length(W-1)| |cover_length(H-1)|
  std::optional<double> hb2d_upper;
};

/// The realized counts are left empty when a side is 1.
[[nodiscard]] Bounds2D m2_bounds(int width, int height, std::optional<long long> k = {});

}  // namespace unbordered
