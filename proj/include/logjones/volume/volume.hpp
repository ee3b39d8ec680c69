#pragma once

#include <string>
#include <vector>

#include "logjones/qcalc/complex_hp.hpp"
#include "logjones/qcalc/root_context.hpp"

namespace logjones::volume {

using qcalc::ComplexHP;
using qcalc::Real;
using qcalc::RootContext;

/// Lobachevsky function -int_0^x log|2 sin t| dt. Odd and pi-periodic.
double lobachevsky(double x);

/// Geometry of the figure-eight cone manifold M_alpha:
/// cos theta = cos alpha - 1/2 with theta in (pi, 2pi], t = 1 + cos alpha - cos 2 alpha.
struct ConeVolumeParams {
  double alpha = 0;
  double theta = 0;
  double t = 0;
};
ConeVolumeParams cone_params(double alpha);

/// Vol(M_alpha) for 0 <= alpha < 2pi/3. Throws DomainError elsewhere.
double cone_volume(double alpha);
/// d/dalpha Vol(M_alpha) = -arccosh t.
double cone_volume_derivative(double alpha);

/// Reference curve of the scan: Vol(M_alpha) below 2pi/3, 0 on [2pi/3, 4pi/3],
/// Vol(M_{2pi - alpha}) above.
double reference_volume(double alpha);

/// floor(N alpha / 2pi) clamped to [0, N].
int s_N_alpha(int N, double alpha);

/// Working digits of the real fast path. The figure-eight sums cancel terms
/// of size up to exp(0.33 N), so the precision grows with N.
int fast_path_digits(int N);

/// gamma_s^{(N)} of the figure-eight knot by running products of 2 sin(k pi/N)
/// and cotangent accumulators. O(N) per s after an O(N) setup.
class Fig8Kernel {
 public:
  /// digits = 0 selects fast_path_digits(N).
  explicit Fig8Kernel(int N, int digits = 0);

  int N() const { return N_; }
  int digits() const { return digits_; }

  struct Value {
    Real gamma;
    /// Largest summand magnitude; gamma is reliable to about 10^{-digits} of it.
    Real scale;
    bool is_zero = false;
  };
  /// 1 <= s <= N-1. The result carries this kernel's precision.
  Value gamma(int s) const;

 private:
  int N_;
  int digits_;
  std::vector<Real> sin2_;  // 2 sin(k pi / N) for k in (-N, 2N), offset by N
  std::vector<Real> cot_;   // cot(k pi / N) for 0 < k < N
  const Real& S(int k) const { return sin2_[static_cast<std::size_t>(k + N_)]; }
};

/// gamma_s at ctx.N(), computed at max(ctx digits, fast_path_digits) and
/// returned at ctx precision.
ComplexHP gamma_fig8_fast(int s, const RootContext& ctx);

struct ScanRow {
  int s = 0;
  double alpha = 0;
  /// (2pi/N) log|gamma_s|; -infinity when gamma_s = 0.
  double log_gamma_scaled = 0;
  bool gamma_zero = false;
  /// The same quantity at N - s.
  double log_gamma_scaled_mirror = 0;
  double vol_reference = 0;
  /// "volume", "conjectural" or "volume_mirror".
  std::string region;
};

struct ScanResult {
  int N = 0;
  int digits = 0;
  std::vector<ScanRow> rows;  // s = 1..N-1
};

/// Region of alpha = 2 pi s / N, decided exactly from s and N.
std::string region_label(int N, int s);

ScanResult asymptotic_scan(int N);

}  // namespace logjones::volume
