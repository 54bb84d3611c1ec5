#include <doctest.h>

#include "support.hpp"
#include "tracklight/transforms.hpp"

using namespace tracklight;
using tracklight::test::Gen;

namespace {

TrackingData one_point(double x, double y) { return TrackingData({x, y, kMissing, kMissing}, 1, 25.0, {"a", "b"}); }

Pitch box(double x0, double x1, double y0, double y1) {
  Pitch p;
  p.xlim = {x0, x1};
  p.ylim = {y0, y1};
  return p;
}

void check_metadata(const TrackingData& out, const TrackingData& in) {
  CHECK(out.frames() == in.frames());
  CHECK(out.framerate() == in.framerate());
  CHECK(out.player_ids() == in.player_ids());
  CHECK(out.direction() == in.direction());
  CHECK(test::same_mask(out.coords(), in.coords()));
}

}  // namespace

TEST_CASE("translate") {
  CHECK(translate(one_point(1, 2), 0, 0) == one_point(1, 2));
  const auto t = translate(one_point(1, 2), -1, 3);
  CHECK(t.point(0, 0).x == 0.0);
  CHECK(t.point(0, 0).y == 5.0);
  CHECK(t.point(0, 1).missing());
}

TEST_CASE("scale, rotate, reflect") {
  CHECK(scale(one_point(1, 2), 1, 1) == one_point(1, 2));
  const auto s = scale(one_point(1, 2), 3, -0.5);
  CHECK(s.point(0, 0).x == 3.0);
  CHECK(s.point(0, 0).y == -1.0);

  const auto r = rotate(one_point(1, 0), 90);
  CHECK(std::abs(r.point(0, 0).x - 0.0) < 1e-12);
  CHECK(std::abs(r.point(0, 0).y - 1.0) < 1e-12);
  const auto r2 = rotate(one_point(1, 1), -45);
  CHECK(std::abs(r2.point(0, 0).x - std::sqrt(2.0)) < 1e-12);
  CHECK(std::abs(r2.point(0, 0).y) < 1e-12);

  const auto fx = reflect(one_point(3, 4), Axis::X);
  CHECK(fx.point(0, 0).x == 3.0);
  CHECK(fx.point(0, 0).y == -4.0);
  const auto fy = reflect(one_point(3, 4), Axis::Y);
  CHECK(fy.point(0, 0).x == -3.0);
  CHECK(fy.point(0, 0).y == 4.0);
  CHECK(fy.point(0, 1).missing());
}

TEST_CASE("rescale_to_pitch") {
  const Pitch from = box(0, 105, 0, 68);
  const Pitch to = box(-52.5, 52.5, -34, 34);
  const auto mid = rescale_to_pitch(one_point(52.5, 34), from, to);
  CHECK(mid.point(0, 0).x == 0.0);
  CHECK(mid.point(0, 0).y == 0.0);
  const auto corner = rescale_to_pitch(one_point(0, 0), from, to);
  CHECK(corner.point(0, 0).x == -52.5);
  CHECK(corner.point(0, 0).y == -34.0);
  const auto same = rescale_to_pitch(one_point(17.3, 61.9), from, from);
  CHECK(std::abs(same.point(0, 0).x - 17.3) < 1e-12);
  CHECK(std::abs(same.point(0, 0).y - 61.9) < 1e-12);

  Pitch flat = from;
  flat.xlim = {3, 3};
  CHECK_THROWS_AS(rescale_to_pitch(one_point(1, 1), flat, to), ArgumentError);
  Pitch inf = from;
  inf.ylim = {0, INFINITY};
  CHECK_THROWS_AS(rescale_to_pitch(one_point(1, 1), inf, to), ArgumentError);
}

TEST_CASE("transform round trips and mask preservation on random data") {
  Gen g(77);
  for (int trial = 0; trial < 100; ++trial) {
    auto td = test::random_tracking(g, g.index(1, 30), g.index(1, 5), 25.0, 0.25);
    const double dx = g.real(-100, 100), dy = g.real(-100, 100);
    const double theta = g.real(-720, 720);
    const double fx = g.real(0.1, 10) * (g.chance(0.5) ? -1 : 1), fy = g.real(0.1, 10);

    const auto t = translate(td, dx, dy);
    const auto tb = translate(t, -dx, -dy);
    check_metadata(t, td);
    CHECK(test::max_abs_diff(tb.coords(), td.coords()) < 1e-12);

    const auto r = rotate(td, theta);
    check_metadata(r, td);
    CHECK(test::max_abs_diff(rotate(r, -theta).coords(), td.coords()) < 1e-9);

    const auto s = scale(td, fx, fy);
    check_metadata(s, td);
    CHECK(test::max_abs_diff(scale(s, 1 / fx, 1 / fy).coords(), td.coords()) < 1e-9);

    for (Axis a : {Axis::X, Axis::Y}) {
      const auto f = reflect(td, a);
      check_metadata(f, td);
      CHECK(reflect(f, a) == td);
    }

    const Pitch A = box(g.real(-50, 0), g.real(1, 120), g.real(-50, 0), g.real(1, 80));
    const Pitch B = box(g.real(-1, 0), g.real(1, 2), g.real(-500, 0), g.real(1, 500));
    const auto ab = rescale_to_pitch(td, A, B);
    check_metadata(ab, td);
    CHECK(test::max_abs_diff(rescale_to_pitch(ab, B, A).coords(), td.coords()) < 1e-9);
  }
}
