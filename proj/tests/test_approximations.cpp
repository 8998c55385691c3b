#include <gtest/gtest.h>

#include "lcelab/gallery.hpp"

using namespace lcelab;
using nlohmann::json;

namespace {

PrefixMachine toy_machine() { return PrefixMachine("toy", {{"0", "1"}, {"10", "10"}, {"11", "101"}}); }

}  // namespace

TEST(ApproxAt, Examples) {
  EXPECT_EQ(reals::geometric(Rational(1)).approx_at(3), make_rational(7, 8));
  EXPECT_EQ(reals::set_real(sets::evens()).approx_at(4), make_rational(5, 8));
  EXPECT_EQ(reals::omega_toy(toy_machine()).approx_at(0), 0);
}

TEST(Gap, Examples) {
  EXPECT_EQ(gap(reals::geometric(Rational(1)), 5), make_rational(1, 32));
  EXPECT_EQ(gap(reals::set_real(sets::evens()), 2), make_rational(1, 6));
  const auto stair = reals::staircase(Rational(1), schedules::alternating());
  for (std::uint64_t n = 0; n < 20; ++n) EXPECT_EQ(gap(stair, n), schedules::alternating().at(n));
}

TEST(Gap, DegenerateApproximationIsRejected) {
  DeskReal reaches("reaches", [](std::uint64_t n) { return n >= 2 ? Rational(1) : Rational(0); }, Rational(1));
  EXPECT_NO_THROW(gap(reaches, 1));
  EXPECT_THROW(gap(reaches, 2), DegenerateApproximation);
  EXPECT_THROW(validate_real(reaches, 5), DegenerateApproximation);
}

TEST(Gallery, GeometricEntry) {
  auto g = build_gallery({{"g", "geometric", json{{"limit", "1"}, {"ratio", "1/2"}}}});
  ASSERT_EQ(g.size(), 1u);
  for (std::uint64_t n = 0; n < 30; ++n) EXPECT_EQ(g[0].approx_at(n), 1 - pow2(-static_cast<std::int64_t>(n)));
  EXPECT_EQ(g[0].name(), "g");
}

TEST(Gallery, OmegaToyLimitIsKraftSum) {
  json machine = {{"name", "m"},
                  {"entries",
                   {{{"code", "0"}, {"output", "1"}, {"stage", 1}},
                    {{"code", "10"}, {"output", "10"}, {"stage", 3}},
                    {{"code", "11"}, {"output", "101"}, {"stage", 2}}}}};
  auto g = build_gallery({{"om", "omega_toy", json{{"machine", machine}}}});
  EXPECT_EQ(Oracle::limit(g[0]), 1);
  const auto m = io::machine_from_json(machine);
  EXPECT_EQ(stage_measure(m, 0), 0);
  EXPECT_EQ(stage_measure(m, 1), make_rational(1, 2));
  EXPECT_EQ(stage_measure(m, 2), make_rational(3, 4));
  EXPECT_EQ(stage_measure(m, final_stage(m)), measure(m));
  EXPECT_EQ(final_stage(m), 3u);
  Rational prev = 0;
  for (std::uint64_t s = 0; s < 200; ++s) {
    ASSERT_GE(g[0].approx_at(s), prev);
    ASSERT_LT(g[0].approx_at(s), 1);
    prev = g[0].approx_at(s);
  }
}

TEST(Gallery, StaircaseDoubleExponential) {
  auto g = build_gallery({{"st", "staircase", json{{"schedule", {{"kind", "double_exponential"}}}}}});
  for (std::uint64_t n = 0; n < 10; ++n) EXPECT_EQ(gap(g[0], n), pow2(-(std::int64_t{1} << n)));
}

TEST(Gallery, ConfigErrorsNameTheEntry) {
  auto bad = [](std::vector<GalleryEntry> cfg, const std::string& needle) {
    try {
      build_gallery(cfg);
      FAIL() << "expected ConfigError";
    } catch (const ConfigError& e) {
      EXPECT_NE(std::string(e.what()).find(needle), std::string::npos) << e.what();
    }
  };
  const GalleryEntry ok{"ok", "geometric", json{{"limit", "1"}}};
  bad({ok, {"r", "geometric", json{{"limit", "1"}, {"ratio", "3/2"}}}}, "entry 1");
  bad({{"s", "staircase", json{{"schedule", {{"kind", "explicit"}, {"gaps", {"1/2", "1/2"}}}}}}}, "entry 0");
  const json clash = json::parse(R"({"entries": [{"code": "0", "output": "1"}, {"code": "01", "output": "1"}]})");
  bad({ok, ok, {"m", "omega_toy", json{{"machine", clash}}}}, "prefix violation (0, 01)");
  bad({{"sq", "set_real", json{{"set", {{"kind", "squares"}}}}}}, "not a known rational");
  bad({{"x", "mystery", json::object()}}, "unknown gallery kind");
}

TEST(Gallery, ParsesBothConfigShapes) {
  json arr = json::array({{{"name", "a"}, {"kind", "geometric"}, {"parameters", {{"limit", {{"num", "1"}, {"den", "2"}}}}}}});
  EXPECT_EQ(gallery_config_from_json(arr).size(), 1u);
  EXPECT_EQ(gallery_config_from_json(json{{"entries", arr}}).size(), 1u);
  auto g = build_gallery(gallery_config_from_json(arr));
  EXPECT_EQ(Oracle::limit(g[0]), make_rational(1, 2));
}

TEST(StandardGallery, MonotoneAndStrictlyBelowLimit) {
  for (const auto& x : standard_gallery()) {
    Rational prev = x.approx_at(0);
    for (std::uint64_t n = 0; n <= 1000; ++n) {
      const Rational cur = x.approx_at(n);
      ASSERT_GE(cur, prev) << x.name() << " n=" << n;
      ASSERT_LT(cur, Oracle::limit(x)) << x.name() << " n=" << n;
      prev = cur;
    }
  }
}

TEST(Reals, ScaledAndSum) {
  const auto x = reals::set_real(sets::evens());
  const auto y = reals::scaled(x, Rational(3));
  EXPECT_EQ(Oracle::limit(y), 2);
  EXPECT_EQ(y.approx_at(4), make_rational(15, 8));
  const auto s = reals::sum(x, reals::geometric(Rational(1)));
  EXPECT_EQ(Oracle::limit(s), make_rational(5, 3));
  EXPECT_THROW(reals::scaled(x, Rational(0)), ConfigError);
}
