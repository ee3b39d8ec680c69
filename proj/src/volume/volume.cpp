#include "logjones/volume/volume.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <boost/math/special_functions/bernoulli.hpp>

#include "logjones/error.hpp"

namespace logjones::volume {

namespace {

constexpr double kPi = std::numbers::pi;

class PrecisionScope {
 public:
  explicit PrecisionScope(int digits) : saved_(Real::default_precision()) {
    Real::default_precision(static_cast<unsigned>(digits));
  }
  ~PrecisionScope() { Real::default_precision(saved_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

Real mp_pi() {
  Real p(0);
  mpfr_const_pi(p.backend().data(), MPFR_RNDN);
  return p;
}

// Clausen Cl_2(theta) for 0 < theta <= pi:
// theta - theta log theta + sum_k |B_2k| theta^{2k+1} / (2k (2k+1)!).
double clausen2(double theta) {
  double sum = theta - theta * std::log(theta);
  const double th2 = theta * theta;
  double power = theta;  // theta^{2k+1} / (2k+1)!
  for (int k = 1; k < 60; ++k) {
    power *= th2 / ((2.0 * k) * (2.0 * k + 1));
    const double term = std::abs(boost::math::bernoulli_b2n<double>(k)) * power / (2.0 * k);
    sum += term;
    // Terms shrink at least by (theta / 2pi)^2 <= 1/4, so the tail is below term / 3.
    if (term < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

}  // namespace

double lobachevsky(double x) {
  // Reduce to (-pi/2, pi/2]; Lambda(x) = Cl_2(2x) / 2.
  double r = std::remainder(x, kPi);
  if (r == 0 || std::abs(r) == kPi / 2) return 0;
  const double sign = r < 0 ? -1 : 1;
  return sign * clausen2(2 * std::abs(r)) / 2;
}

ConeVolumeParams cone_params(double alpha) {
  ConeVolumeParams p;
  p.alpha = alpha;
  const double c = std::clamp(std::cos(alpha) - 0.5, -1.0, 1.0);
  p.theta = 2 * kPi - std::acos(c);
  p.t = 1 + std::cos(alpha) - std::cos(2 * alpha);
  return p;
}

double cone_volume(double alpha) {
  if (!(alpha >= 0 && alpha < 2 * kPi / 3))
    throw DomainError("cone_volume needs 0 <= alpha < 2pi/3, got " + std::to_string(alpha));
  const ConeVolumeParams p = cone_params(alpha);
  return -2 * (lobachevsky((alpha + p.theta) / 2) - lobachevsky((alpha - p.theta) / 2));
}

double cone_volume_derivative(double alpha) {
  if (!(alpha >= 0 && alpha < 2 * kPi / 3))
    throw DomainError("cone_volume_derivative needs 0 <= alpha < 2pi/3, got " + std::to_string(alpha));
  return -std::acosh(std::max(1.0, cone_params(alpha).t));
}

double reference_volume(double alpha) {
  if (alpha < 2 * kPi / 3) return cone_volume(alpha);
  if (alpha <= 4 * kPi / 3) return 0;
  return cone_volume(2 * kPi - alpha);
}

int s_N_alpha(int N, double alpha) {
  const double s = std::floor(N * alpha / (2 * kPi));
  return static_cast<int>(std::clamp(s, 0.0, static_cast<double>(N)));
}

int fast_path_digits(int N) { return std::max(qcalc::kDefaultPrecisionDigits, static_cast<int>(0.15 * N) + 40); }

Fig8Kernel::Fig8Kernel(int N, int digits) : N_(N), digits_(digits > 0 ? digits : fast_path_digits(N)) {
  if (N < 2) throw DomainError("Fig8Kernel requires N >= 2");
  PrecisionScope scope(digits_);
  const Real pi = mp_pi();
  sin2_.reserve(static_cast<std::size_t>(3 * N));
  for (int k = -N; k < 2 * N; ++k)
    sin2_.push_back(k % N == 0 ? Real(0) : Real(2 * boost::multiprecision::sin(pi * k / N)));
  cot_.reserve(static_cast<std::size_t>(N));
  cot_.emplace_back(0);
  for (int k = 1; k < N; ++k) {
    const Real x = pi * k / N;
    cot_.push_back(boost::multiprecision::cos(x) / boost::multiprecision::sin(x));
  }
}

Fig8Kernel::Value Fig8Kernel::gamma(int s) const {
  if (s < 1 || s > N_ - 1) throw DomainError("gamma needs 1 <= s <= N-1, got s=" + std::to_string(s));
  PrecisionScope scope(digits_);
  const int lo = std::min(s, N_ - s), hi = std::max(s, N_ - s);
  // Factor of ~{..}: 2 sin(k pi/N), or (-1)^{k/N} at multiples of N.
  auto factor = [&](int k) -> Real {
    if (k % N_ != 0) return S(k);
    return (k / N_) % 2 == 0 ? Real(1) : Real(-1);
  };

  auto cot = [&](int k) -> const Real& { return cot_[static_cast<std::size_t>(k)]; };
  // cot_abs bounds the rounding of cot_sum, which cancels exactly at s = N/2.
  Real run = S(s), cot_sum = cot(s), cot_abs = boost::multiprecision::abs(cot(s));
  Real first(0), second(0), scale(0);
  for (int i = 0; i < hi; ++i) {
    if (i > 0) run *= factor(s + i) * factor(s - i);
    Real term;
    if (i < lo) {
      if (i > 0) {
        cot_sum += cot(s + i) + cot(s - i);
        cot_abs += boost::multiprecision::abs(cot(s + i)) + boost::multiprecision::abs(cot(s - i));
      }
      term = run * cot_sum;
      if (i % 2) term = -term;
      first += term;
      scale = std::max(scale, Real(boost::multiprecision::abs(run) * (1 + cot_abs)));
    } else {
      term = i % 2 ? Real(-run) : run;
      second += term;
    }
    scale = std::max(scale, Real(boost::multiprecision::abs(term)));
  }
  Value v;
  v.gamma = first + 2 * second;
  v.scale = scale;
  const Real eps = boost::multiprecision::pow(Real(10), -(digits_ - 10));
  v.is_zero = boost::multiprecision::abs(v.gamma) <= eps * scale;
  if (v.is_zero) v.gamma = 0;
  return v;
}

ComplexHP gamma_fig8_fast(int s, const RootContext& ctx) {
  const Fig8Kernel kernel(ctx.N(), std::max(ctx.precision_digits(), fast_path_digits(ctx.N())));
  Real g = kernel.gamma(s).gamma;
  g.precision(static_cast<unsigned>(ctx.precision_digits()));
  return ComplexHP(g, Real(0));
}

std::string region_label(int N, int s) {
  if (3 * s < N) return "volume";
  if (3 * s > 2 * N) return "volume_mirror";
  return "conjectural";
}

ScanResult asymptotic_scan(int N) {
  if (N < 2) throw DomainError("asymptotic_scan requires N >= 2");
  const Fig8Kernel kernel(N);
  ScanResult result;
  result.N = N;
  result.digits = kernel.digits();

  std::vector<double> scaled(static_cast<std::size_t>(N), 0);
  std::vector<bool> zero(static_cast<std::size_t>(N), false);
  for (int s = 1; s < N; ++s) {
    const Fig8Kernel::Value v = kernel.gamma(s);
    zero[s] = v.is_zero;
    if (v.is_zero) {
      scaled[s] = -std::numeric_limits<double>::infinity();
    } else {
      PrecisionScope scope(kernel.digits());
      scaled[s] = 2 * kPi / N * static_cast<double>(boost::multiprecision::log(boost::multiprecision::abs(v.gamma)));
    }
  }
  for (int s = 1; s < N; ++s) {
    ScanRow row;
    row.s = s;
    row.alpha = 2 * kPi * s / N;
    row.log_gamma_scaled = scaled[s];
    row.gamma_zero = zero[s];
    row.log_gamma_scaled_mirror = scaled[N - s];
    row.region = region_label(N, s);
    row.vol_reference = row.region == "conjectural" ? 0.0 : reference_volume(row.alpha);
    result.rows.push_back(std::move(row));
  }
  return result;
}

}  // namespace logjones::volume
