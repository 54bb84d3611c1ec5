#include <doctest.h>
#include <omp.h>

#include <cmath>

#include "support.hpp"
#include "tracklight/kernels.hpp"

using namespace tracklight;
using tracklight::test::Gen;

namespace {

bool bit_identical(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!test::same_bits(a[i], b[i])) return false;
  }
  return true;
}

// Energy cost written out term by term, one power at a time.
double quintic_oracle(double es) {
  const double es2 = es * es, es3 = es2 * es, es4 = es3 * es, es5 = es4 * es;
  return 155.4 * es5 - 30.4 * es4 - 43.3 * es3 + 46.3 * es2 + 19.5 * es + 3.6;
}

struct ThreadGuard {
  int saved = omp_get_max_threads();
  ~ThreadGuard() { omp_set_num_threads(saved); }
};

}  // namespace

TEST_CASE("running_energy_cost equals the quintic") {
  CHECK(kernels::running_energy_cost(0.0) == 3.6);
  CHECK(kernels::running_energy_cost(0.1) == doctest::Approx(5.968214).epsilon(1e-12));
  CHECK(quintic_oracle(0.1) == doctest::Approx(5.968214).epsilon(1e-12));
  Gen g(1);
  for (int i = 0; i < 1000; ++i) {
    const double es = g.real(-1.0, 1.0);
    CHECK(std::abs(kernels::running_energy_cost(es) - quintic_oracle(es)) < 1e-12);
  }
}

TEST_CASE("serial and OpenMP kernels are bit-identical for any thread count") {
  ThreadGuard guard;
  Gen g(42);
  const std::size_t frames = 500, players = 9;
  std::vector<double> coords(frames * players * 2);
  for (std::size_t i = 0; i < coords.size(); i += 2) {
    if (g.chance(0.02)) {
      coords[i] = coords[i + 1] = kMissing;
    } else {
      coords[i] = g.real(0, 40);
      coords[i + 1] = g.real(0, 20);
    }
  }
  const auto sos = butterworth_lowpass_sections(3, 1.0, 20.0);
  const auto f_ref = kernels::serial::filter_columns(coords, frames, players * 2, sos, 12);
  const auto v_ref = kernels::serial::speed(f_ref, frames, players, 20.0);
  const auto a_ref = kernels::serial::rate_of_change(v_ref, frames, players, 20.0);
  const auto p_ref = kernels::serial::metabolic_power(v_ref, a_ref, 1.1, 9.81);

  std::vector<std::vector<double>> series;
  std::vector<double> tol;
  for (std::size_t k = 0; k < 12; ++k) {
    std::vector<double> s(g.index(20, 300));
    for (auto& x : s) x = g.real(-1, 1);
    series.push_back(std::move(s));
    tol.push_back(g.real(0.05, 0.5));
  }
  const auto e_ref = kernels::serial::approximate_entropy(series, 2, tol);

  for (int threads : {1, 2, 3, 4, 7, 16}) {
    CAPTURE(threads);
    omp_set_num_threads(threads);
    CHECK(kernels::max_threads() == threads);
    const auto f = kernels::omp::filter_columns(coords, frames, players * 2, sos, 12);
    CHECK(bit_identical(f, f_ref));
    const auto v = kernels::omp::speed(f, frames, players, 20.0);
    CHECK(bit_identical(v, v_ref));
    const auto a = kernels::omp::rate_of_change(v, frames, players, 20.0);
    CHECK(bit_identical(a, a_ref));
    CHECK(bit_identical(kernels::omp::metabolic_power(v, a, 1.1, 9.81), p_ref));
    CHECK(bit_identical(kernels::omp::approximate_entropy(series, 2, tol), e_ref));
  }
}

TEST_CASE("speed and rate stencils") {
  // x = t^2 at framerate 1: central difference of t^2 is exact (2t) inside.
  std::vector<double> c;
  for (int t = 0; t < 6; ++t) {
    c.push_back(t * t);
    c.push_back(0.0);
  }
  const auto v = kernels::serial::speed(c, 6, 1, 1.0);
  CHECK(v[0] == 1.0);  // forward: 1 - 0
  for (int t = 1; t < 5; ++t) CHECK(v[static_cast<std::size_t>(t)] == 2.0 * t);
  CHECK(v[5] == 9.0);  // backward: 25 - 16

  const auto r = kernels::serial::rate_of_change(std::vector<double>{0, 1, 4, 9}, 4, 1, 2.0);
  CHECK(r == std::vector<double>{2, 4, 8, 10});

  std::vector<double> gap{0, 0, kMissing, kMissing, 2, 0, 3, 0};
  const auto vg = kernels::serial::speed(gap, 4, 1, 1.0);
  CHECK(is_missing(vg[0]));
  CHECK(is_missing(vg[1]));
  CHECK(is_missing(vg[2]));
  CHECK(vg[3] == 1.0);
}
