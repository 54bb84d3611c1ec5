#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "support.hpp"
#include "tracklight/filter.hpp"
#include "tracklight/transforms.hpp"

using namespace tracklight;
using tracklight::test::Gen;

namespace {

std::vector<double> poly_mul(const std::vector<double>& p, const std::vector<double>& q) {
  std::vector<double> r(p.size() + q.size() - 1, 0.0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
  }
  return r;
}

// Expanded numerator and denominator of the cascade, trailing zeros dropped.
std::pair<std::vector<double>, std::vector<double>> expand(const std::vector<SecondOrderSection>& sos) {
  std::vector<double> b{1.0}, a{1.0};
  for (const auto& s : sos) {
    b = poly_mul(b, {s.b0, s.b1, s.b2});
    a = poly_mul(a, {1.0, s.a1, s.a2});
  }
  while (b.size() > 1 && b.back() == 0.0 && a.back() == 0.0) {
    b.pop_back();
    a.pop_back();
  }
  return {b, a};
}

// Magnitude of the bilinear-transformed Butterworth response.
double butterworth_magnitude(int order, double f, double fc, double fs) {
  const double ratio = std::tan(std::numbers::pi * f / fs) / std::tan(std::numbers::pi * fc / fs);
  return 1.0 / std::sqrt(1.0 + std::pow(ratio, 2 * order));
}

std::vector<double> reversed(std::vector<double> v) {
  std::reverse(v.begin(), v.end());
  return v;
}

TrackingData column_data(const std::vector<double>& x, double fs) {
  std::vector<double> c;
  for (double v : x) {
    c.push_back(v);
    c.push_back(is_missing(v) ? kMissing : -2.0 * v);
  }
  return TrackingData(std::move(c), x.size(), fs, {"p"});
}

std::vector<double> xs(const TrackingData& td) {
  std::vector<double> out;
  for (std::size_t t = 0; t < td.frames(); ++t) out.push_back(td.at(t, 0));
  return out;
}

}  // namespace

TEST_CASE("section design matches reference transfer functions") {
  // butter(n, fc, fs) from a reference implementation.
  struct Case {
    int n;
    double fc, fs;
    std::vector<double> b, a;
  };
  const Case cases[] = {
      {3, 5, 100,
       {0.00289819463372143, 0.008694583901164291, 0.008694583901164291, 0.00289819463372143},
       {1.0, -2.374094743709352, 1.929355669091215, -0.5320753683120918}},
      {4, 1, 20,
       {0.00041659920440659937, 0.0016663968176263975, 0.002499595226439596, 0.0016663968176263975,
        0.00041659920440659937},
       {1.0, -3.180638548874719, 3.8611943489942133, -2.112155355110969, 0.43826514226197977}},
      {1, 2, 25, {0.20430082430026447, 0.20430082430026447}, {1.0, -0.5913983513994712}},
      {5, 7.5, 50,
       {0.006933196130142604, 0.034665980650713024, 0.06933196130142605, 0.06933196130142605, 0.034665980650713024,
        0.006933196130142604},
       {1.0, -1.9759016164414662, 2.013473026000308, -1.1026179777777696, 0.3276183340001567, -0.04070948961666521}},
  };
  for (const auto& c : cases) {
    CAPTURE(c.n);
    const auto sos = butterworth_lowpass_sections(c.n, c.fc, c.fs);
    CHECK(sos.size() == static_cast<std::size_t>((c.n + 1) / 2));
    const auto [b, a] = expand(sos);
    REQUIRE(b.size() == c.b.size());
    REQUIRE(a.size() == c.a.size());
    for (std::size_t i = 0; i < b.size(); ++i) {
      CHECK(b[i] == doctest::Approx(c.b[i]).epsilon(1e-10));
      CHECK(a[i] == doctest::Approx(c.a[i]).epsilon(1e-10));
    }
  }
}

TEST_CASE("sections have unit DC gain and the Butterworth magnitude law") {
  for (int n = 1; n <= 8; ++n) {
    for (double fc : {0.5, 1.0, 4.0, 9.9}) {
      const auto sos = butterworth_lowpass_sections(n, fc, 20.0);
      for (const auto& s : sos) CHECK((s.b0 + s.b1 + s.b2) / (1.0 + s.a1 + s.a2) == doctest::Approx(1.0).epsilon(1e-12));
      for (double f : {0.0, 0.1, fc / 2, fc, 1.5 * fc, 9.95}) {
        if (f >= 10.0) continue;
        CHECK(sections_magnitude(sos, f, 20.0) == doctest::Approx(butterworth_magnitude(n, f, fc, 20.0)).epsilon(1e-9));
      }
      CHECK(sections_magnitude(sos, fc, 20.0) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
    }
  }
}

TEST_CASE("section design rejects bad arguments") {
  CHECK_THROWS_AS(butterworth_lowpass_sections(0, 1.0, 20.0), ArgumentError);
  CHECK_THROWS_AS(butterworth_lowpass_sections(3, 10.0, 20.0), ArgumentError);
  CHECK_THROWS_AS(butterworth_lowpass_sections(3, 0.0, 20.0), ArgumentError);
  CHECK_THROWS_AS(butterworth_lowpass_sections(3, -1.0, 20.0), ArgumentError);
}

TEST_CASE("run_sections starts in steady state") {
  const auto sos = butterworth_lowpass_sections(4, 1.0, 20.0);
  std::vector<double> v(50, 3.25);
  run_sections(sos, v, 3.25);
  for (double y : v) CHECK(y == doctest::Approx(3.25).epsilon(1e-13));
}

TEST_CASE("zero_phase_filter matches the reference averaged forward-backward result") {
  const auto sos = butterworth_lowpass_sections(3, 2.0, 25.0);
  std::vector<double> x;
  for (int i = 0; i < 60; ++i) x.push_back(std::sin(0.3 * i) + 0.05 * i + 0.2 * std::cos(2.1 * i));
  const auto y = zero_phase_filter(sos, x, 12);
  const std::pair<std::size_t, double> expected[] = {{0, 0.1928348681052198},   {1, 0.4549695849464541},
                                                     {13, -0.005196687391279494}, {30, 1.8957782397776608},
                                                     {58, 1.9818387978608176},  {59, 1.9885917789122973}};
  for (const auto& [k, v] : expected) CHECK(y[k] == doctest::Approx(v).epsilon(1e-11));
  CHECK_THROWS_AS(zero_phase_filter(sos, std::vector<double>(12, 1.0), 12), ArgumentError);
}

TEST_CASE("butterworth_lowpass: DC, short segments, gaps") {
  std::vector<double> x(200, 5.0);
  const auto dc = butterworth_lowpass(column_data(x, 25.0), {3, 1.0});
  for (std::size_t t = 0; t < 200; ++t) CHECK(std::abs(dc.at(t, 0) - 5.0) < 1e-9);

  // Segments: 5 samples (dropped), gap, 13 samples (kept), gap, 12 samples (dropped: == padlen).
  std::vector<double> g;
  g.insert(g.end(), 5, 1.0);
  g.push_back(kMissing);
  g.insert(g.end(), 13, 2.0);
  g.push_back(kMissing);
  g.insert(g.end(), 12, 3.0);
  const auto out = xs(butterworth_lowpass(column_data(g, 25.0), {3, 1.0}));
  for (std::size_t t = 0; t < 6; ++t) CHECK(is_missing(out[t]));
  for (std::size_t t = 6; t < 19; ++t) CHECK(std::abs(out[t] - 2.0) < 1e-9);
  for (std::size_t t = 19; t < out.size(); ++t) CHECK(is_missing(out[t]));
}

TEST_CASE("butterworth_lowpass: argument checks name the field") {
  const auto td = column_data(std::vector<double>(100, 1.0), 20.0);
  try {
    butterworth_lowpass(td, {3, 10.0});
    FAIL("expected an argument error");
  } catch (const ArgumentError& e) {
    CHECK(std::string(e.what()).find("filter.cutoff_hz") != std::string::npos);
  }
  try {
    butterworth_lowpass(td, {0, 1.0});
    FAIL("expected an argument error");
  } catch (const ArgumentError& e) {
    CHECK(std::string(e.what()).find("filter.order") != std::string::npos);
  }
}

TEST_CASE("butterworth_lowpass: amplitude at cutoff is one half") {
  const double fs = 100.0, fc = 5.0;
  std::vector<double> x(2000);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = std::sin(2 * std::numbers::pi * fc * static_cast<double>(i) / fs);
  const auto y = xs(butterworth_lowpass(column_data(x, fs), {3, fc}));
  double peak = 0.0;
  for (std::size_t i = 500; i < 1500; ++i) peak = std::max(peak, std::abs(y[i]));
  CHECK(peak == doctest::Approx(0.5).epsilon(0.02 / 0.5));
}

TEST_CASE("butterworth_lowpass: reversal symmetry and linearity on random inputs") {
  Gen g(31);
  for (int trial = 0; trial < 40; ++trial) {
    const int order = static_cast<int>(g.index(1, 6));
    const double fs = 25.0;
    const double fc = g.real(0.2, 12.0);
    std::vector<double> s1(g.index(40, 400)), s2(s1.size());
    for (std::size_t i = 0; i < s1.size(); ++i) {
      s1[i] = g.real(-30, 30);
      s2[i] = g.real(-30, 30);
    }
    // Random gaps, same positions in both signals.
    for (std::size_t i = 0; i < s1.size(); ++i) {
      if (g.chance(0.01)) s1[i] = s2[i] = kMissing;
    }
    const FilterSpec spec{order, fc};
    const auto f1 = xs(butterworth_lowpass(column_data(s1, fs), spec));
    const auto f2 = xs(butterworth_lowpass(column_data(s2, fs), spec));
    const auto f1r = reversed(xs(butterworth_lowpass(column_data(reversed(s1), fs), spec)));
    CHECK(test::max_abs_diff(f1, f1r) < 1e-9);

    const double a = g.real(-3, 3), b = g.real(-3, 3);
    std::vector<double> mix(s1.size());
    for (std::size_t i = 0; i < s1.size(); ++i) mix[i] = a * s1[i] + b * s2[i];
    const auto fm = xs(butterworth_lowpass(column_data(mix, fs), spec));
    std::vector<double> expect(s1.size());
    for (std::size_t i = 0; i < s1.size(); ++i) expect[i] = a * f1[i] + b * f2[i];
    CHECK(test::max_abs_diff(fm, expect) < 1e-9);
  }
}

TEST_CASE("butterworth_lowpass keeps metadata and the missing mask superset") {
  Gen g(8);
  const auto td = test::random_tracking(g, 300, 4, 20.0, 0.02);
  const auto f = butterworth_lowpass(td, {2, 2.0});
  CHECK(f.frames() == td.frames());
  CHECK(f.framerate() == td.framerate());
  CHECK(f.player_ids() == td.player_ids());
  CHECK(f.direction() == td.direction());
  for (std::size_t i = 0; i < td.coords().size(); ++i) {
    if (is_missing(td.coords()[i])) CHECK(is_missing(f.coords()[i]));
  }
}
