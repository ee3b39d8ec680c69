#include <doctest.h>

#include <cmath>
#include <numbers>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "logjones/error.hpp"
#include "logjones/loginv/loginv.hpp"
#include "logjones/volume/volume.hpp"

using namespace logjones;
using namespace logjones::volume;

namespace {

constexpr double kPi = std::numbers::pi;

// -int_0^x log|2 sin t| dt by tanh-sinh quadrature, for 0 < x <= pi.
double lobachevsky_quadrature(double x) {
  boost::math::quadrature::tanh_sinh<double> integrator;
  return -integrator.integrate([](double t) { return std::log(std::abs(2 * std::sin(t))); }, 0.0, x);
}

// Central differences at h, h/2, h/4 combined by Richardson extrapolation.
double richardson_derivative(double (*f)(double), double x, double h) {
  auto d = [&](double step) { return (f(x + step) - f(x - step)) / (2 * step); };
  const double d1 = d(h), d2 = d(h / 2), d3 = d(h / 4);
  const double r1 = (4 * d2 - d1) / 3, r2 = (4 * d3 - d2) / 3;
  return (16 * r2 - r1) / 15;
}

double scaled_at(const ScanResult& scan, int s) { return scan.rows[static_cast<std::size_t>(s - 1)].log_gamma_scaled; }

}  // namespace

TEST_CASE("lobachevsky special values and symmetries") {
  CHECK(lobachevsky(0) == 0);
  CHECK(std::abs(lobachevsky(kPi / 2)) < 1e-15);
  CHECK(std::abs(lobachevsky(kPi)) < 1e-15);
  for (int k = -40; k <= 40; ++k) {
    const double x = 0.173 * k + 0.01;
    CHECK(std::abs(lobachevsky(-x) + lobachevsky(x)) < 1e-12);
    CHECK(std::abs(lobachevsky(x + kPi) - lobachevsky(x)) < 1e-12);
    CHECK(std::abs(lobachevsky(x - 3 * kPi) - lobachevsky(x)) < 1e-12);
  }
  // Duplication formula Lambda(2x) = 2 Lambda(x) + 2 Lambda(x + pi/2).
  for (double x = 0.05; x < 3; x += 0.1)
    CHECK(std::abs(lobachevsky(2 * x) - 2 * lobachevsky(x) - 2 * lobachevsky(x + kPi / 2)) < 1e-12);
}

TEST_CASE("lobachevsky matches quadrature") {
  for (double x = 0.02; x < kPi; x += 0.0931) CHECK(std::abs(lobachevsky(x) - lobachevsky_quadrature(x)) < 1e-12);
  CHECK(std::abs(6 * lobachevsky(kPi / 3) - 6 * lobachevsky_quadrature(kPi / 3)) < 1e-12);
}

TEST_CASE("lobachevsky maximum on [0, pi] is at pi/6") {
  double best = -1, arg = 0;
  for (int k = 0; k <= 60000; ++k) {
    const double x = kPi * k / 60000;
    const double v = lobachevsky(x);
    if (v > best) best = v, arg = x;
  }
  CHECK(std::abs(arg - kPi / 6) < 1e-4);
}

TEST_CASE("volume of the figure-eight complement") {
  const double oracle = 6 * lobachevsky_quadrature(kPi / 3);
  CHECK(std::abs(cone_volume(0) - oracle) < 1e-10);
  CHECK(std::abs(cone_volume(0) - 2.029883) < 1e-5);
  CHECK(std::abs(cone_volume(0) - 4 * lobachevsky_quadrature(kPi / 6)) < 1e-10);
  CHECK(std::abs(lobachevsky(kPi / 6) - 1.5 * lobachevsky(kPi / 3)) < 1e-12);
}

TEST_CASE("cone parameters") {
  const ConeVolumeParams p0 = cone_params(0);
  CHECK(std::abs(p0.theta - 5 * kPi / 3) < 1e-14);
  CHECK(std::abs(p0.t - 1) < 1e-14);
  for (double a = 0.01; a < 2 * kPi / 3; a += 0.1) {
    const ConeVolumeParams p = cone_params(a);
    CHECK(p.theta > kPi);
    CHECK(p.theta < 2 * kPi);
    CHECK(std::abs(std::cos(p.theta) - (std::cos(a) - 0.5)) < 1e-14);
    CHECK(cone_volume(a) > 0);
  }
}

TEST_CASE("volume derivative is -arccosh(1 + cos a - cos 2a)") {
  const double expected = -std::acosh(1 + std::cos(0.3) - std::cos(0.6));
  CHECK(std::abs(richardson_derivative(cone_volume, 0.3, 1e-2) - expected) < 1e-8);
  CHECK(std::abs(cone_volume_derivative(0.3) - expected) < 1e-15);
  for (int k = 1; k <= 20; ++k) {
    const double a = 2 * kPi / 3 * k / 21.0;
    const double h = std::min(1e-2, (2 * kPi / 3 - a) / 5);
    const double fd = richardson_derivative(cone_volume, a, h);
    CHECK(std::abs(fd + std::acosh(1 + std::cos(a) - std::cos(2 * a))) < 1e-6);
  }
  // t -> 1 at 2pi/3, so the derivative flattens.
  CHECK(std::abs(cone_volume_derivative(2 * kPi / 3 - 1e-9)) < 1e-4);
  CHECK(cone_volume(2 * kPi / 3 - 1e-9) < 1e-8);
}

TEST_CASE("domain errors and the reference curve") {
  CHECK_THROWS_AS(cone_volume(-0.1), DomainError);
  CHECK_THROWS_AS(cone_volume(2 * kPi / 3), DomainError);
  CHECK_THROWS_AS(cone_volume_derivative(3.0), DomainError);
  CHECK(reference_volume(kPi) == 0);
  CHECK(reference_volume(2 * kPi / 3) == 0);
  CHECK(reference_volume(4 * kPi / 3) == 0);
  for (double a = 0.05; a < 2 * kPi / 3; a += 0.2) CHECK(std::abs(reference_volume(2 * kPi - a) - cone_volume(a)) < 1e-12);
}

TEST_CASE("s_N_alpha") {
  CHECK(s_N_alpha(200, 0) == 0);
  CHECK(s_N_alpha(200, kPi / 3) == 33);
  CHECK(s_N_alpha(400, 2 * kPi * 0.05) == 20);
  CHECK(s_N_alpha(10, 2 * kPi) == 10);
  CHECK(s_N_alpha(10, 7.0) == 10);
  int prev = 0;
  for (double a = 0; a <= 2 * kPi; a += 0.001) {
    const int s = s_N_alpha(97, a);
    CHECK(s >= prev);
    prev = s;
  }
}

TEST_CASE("fast kernel agrees with the Habiro route for N <= 6") {
  const auto knot = loginv::KnotSource::catalog("4_1");
  for (int N = 2; N <= 6; ++N) {
    const qcalc::RootContext ctx(N);
    for (int s = 1; s < N; ++s) {
      const ComplexHP fast = gamma_fig8_fast(s, ctx);
      const ComplexHP habiro = loginv::gamma_s(knot, s, loginv::Route::HABIRO, ctx);
      CHECK((fast - habiro).abs() < Real("1e-30"));
    }
  }
  const qcalc::RootContext c3(3);
  CHECK((gamma_fig8_fast(1, c3) - ComplexHP(-5)).abs() < Real("1e-50"));
}

TEST_CASE("fast kernel agrees with the Habiro route up to N = 50") {
  const auto knot = loginv::KnotSource::catalog("4_1");
  for (int N : {7, 10, 13, 20, 31, 50}) {
    const qcalc::RootContext ctx(N);
    const Fig8Kernel kernel(N);
    for (int s = 1; s < N; s += (N > 20 ? 3 : 1)) {
      const Fig8Kernel::Value v = kernel.gamma(s);
      const ComplexHP habiro = loginv::gamma_s(knot, s, loginv::Route::HABIRO, ctx);
      const Real scale = 1 + habiro.abs();
      CHECK((ComplexHP(v.gamma) - habiro).abs() < Real("1e-20") * scale);
    }
  }
}

TEST_CASE("gamma is odd under s -> N - s and vanishes at s = N/2") {
  for (int N : {8, 9, 40, 101, 200}) {
    const Fig8Kernel kernel(N);
    for (int s = 1; s < N; ++s) {
      const auto a = kernel.gamma(s), b = kernel.gamma(N - s);
      CHECK(boost::multiprecision::abs(a.gamma + b.gamma) <= Real("1e-30") * (1 + a.scale));
      CHECK(a.is_zero == (2 * s == N));
    }
  }
  CHECK_THROWS_AS(Fig8Kernel(5).gamma(0), DomainError);
  CHECK_THROWS_AS(Fig8Kernel(5).gamma(5), DomainError);
}

TEST_CASE("working precision suffices") {
  const int N = 300;
  const Fig8Kernel kernel(N), finer(N, fast_path_digits(N) + 40);
  for (int s = 1; s < N; ++s) {
    const auto a = kernel.gamma(s), b = finer.gamma(s);
    if (b.is_zero) {
      CHECK(a.is_zero);
      continue;
    }
    CHECK(boost::multiprecision::abs((a.gamma - b.gamma) / b.gamma) < Real("1e-30"));
  }
}

TEST_CASE("scan layout") {
  const ScanResult scan = asymptotic_scan(200);
  CHECK(scan.N == 200);
  REQUIRE(scan.rows.size() == 199);
  for (const ScanRow& row : scan.rows) {
    CHECK(std::abs(row.alpha - 2 * kPi * row.s / 200) < 1e-15);
    CHECK(row.log_gamma_scaled_mirror == scaled_at(scan, 200 - row.s));
    CHECK(row.gamma_zero == (row.s == 100));
    if (row.gamma_zero) CHECK(std::isinf(row.log_gamma_scaled));
  }
  CHECK(scan.rows[65].region == "volume");        // s = 66
  CHECK(scan.rows[66].region == "conjectural");   // s = 67
  CHECK(scan.rows[132].region == "conjectural");  // s = 133
  CHECK(scan.rows[133].region == "volume_mirror");
  CHECK_THROWS_AS(asymptotic_scan(1), DomainError);
}

TEST_CASE("N = 200 scan has the plateau and the volume curve") {
  const ScanResult scan = asymptotic_scan(200);
  for (const ScanRow& row : scan.rows) {
    if (row.gamma_zero) continue;
    if (row.region == "conjectural") {
      CHECK(std::abs(row.log_gamma_scaled) < 0.3);
    } else if (std::min(row.alpha, 2 * kPi - row.alpha) < 1.8) {
      // Finite-N values sit above the limit curve.
      CHECK(row.log_gamma_scaled > row.vol_reference);
      CHECK(row.log_gamma_scaled - row.vol_reference < 0.35);
    }
  }
}

TEST_CASE("convergence at alpha = pi/5") {
  const double alpha = kPi / 5, vol = cone_volume(alpha);
  double prev_gap = 1e9;
  for (int N : {100, 200, 400}) {
    const ScanResult scan = asymptotic_scan(N);
    const double value = scaled_at(scan, s_N_alpha(N, alpha));
    CHECK(value > vol);
    const double gap = value - vol;
    CHECK(gap < prev_gap);
    prev_gap = gap;
  }
}

TEST_CASE("the finite-N gap follows (3/2) log N") {
  // N gap / 2pi - (3/2) log N should settle to a constant as N doubles.
  const double alpha = kPi / 5;
  std::vector<double> residual;
  for (int N : {100, 200, 400, 800}) {
    const int s = s_N_alpha(N, alpha);
    const double a = 2 * kPi * s / N;
    const double gap = scaled_at(asymptotic_scan(N), s) - cone_volume(a);
    residual.push_back(N * gap / (2 * kPi) - 1.5 * std::log(N));
  }
  for (std::size_t k = 1; k < residual.size(); ++k) CHECK(std::abs(residual[k] - residual[k - 1]) < 0.05);
}
