#include "doctest.h"

#include "masure/campaign.hpp"
#include "masure/json_io.hpp"

using namespace masure;
namespace mj = masure::json;
using Json = nlohmann::json;

namespace {

RootGeneratingSystem a2() { return RootGeneratingSystem::default_realization(make_matrix({{2, -1}, {-1, 2}})); }

}  // namespace

TEST_CASE("rationals encode in lowest terms and round-trip") {
  for (auto r : {Rational(0), Rational(3, 6), Rational(-7, 3), Rational(1, 997)}) {
    Json j = mj::encode(r);
    CHECK(j.at("den").get<long long>() > 0);
    CHECK(mj::decode_rational(j) == r);
  }
  CHECK(mj::encode(Rational(-2, 4)).dump() == R"({"den":2,"num":-1})");
  CHECK(mj::decode_rational(Json(5)) == 5);
  CHECK(mj::decode_rational(Json("3/4")) == Rational(3, 4));
  CHECK_THROWS_AS(mj::decode_rational(Json::parse(R"({"num":1,"den":0})")), Error);
}

TEST_CASE("systems round-trip with and without an explicit realization") {
  auto d = a2();
  auto back = mj::decode_system(mj::encode(d));
  CHECK(back == d);
  CHECK_FALSE(mj::encode(d).contains("realization"));
  auto custom = RootGeneratingSystem::with_realization(make_matrix({{2}}), {Vector{Rational(2)}},
                                                       {LinearForm{Rational(1)}});
  CHECK(mj::decode_system(mj::encode(custom)) == custom);
}

TEST_CASE("paths, enclosed sets and affine Weyl elements round-trip") {
  auto rgs = a2();
  PLPath p({0, Rational(1, 3), 1}, {Vector{0, 0}, Vector{Rational(1, 3), Rational(2, 3)}, Vector{1, Rational(2, 3)}});
  CHECK(mj::decode_path(mj::encode(p)) == p);
  CHECK(mj::encode(mj::decode_path(mj::encode(p))).dump() == mj::encode(p).dump());

  auto alpha = simple_root(rgs, 0), beta = root_from_coords(rgs, {1, 1});
  EnclosedSet e(2, {HalfApartment{alpha, 1}, HalfApartment{beta.negated(), 2, true}});
  auto e2 = mj::decode_enclosed_set(rgs, mj::encode(e));
  CHECK(enclosed_equal(e, e2));
  CHECK(mj::encode(e2).dump() == mj::encode(e).dump());
  auto empty = EnclosedSet::empty(2);
  CHECK(mj::decode_enclosed_set(rgs, mj::encode(empty)).is_empty());

  AffineWeylElement g(WeylElement::from_word(rgs, {0, 1}), Vector{1, -2});
  auto g2 = mj::decode_affine(rgs, mj::encode(g));
  CHECK(g2 == g);
}

TEST_CASE("campaign configs round-trip and reject bad input") {
  Json j = Json::parse(R"({"model": {"kind": "sl3", "q": 4, "precision": 30}, "trials": 5, "seed": 9,
                           "window_radius": 3, "complexity": 1, "height_bound": 2, "length_bound": 6})");
  auto c = campaign::parse_config(j);
  CHECK(c.model.q == 4);
  CHECK(c.model.precision == 30);
  auto back = campaign::encode(campaign::parse_config(campaign::encode(c)));
  CHECK(back.dump() == campaign::encode(c).dump());
  for (const char* bad : {R"({"trials": 3})", R"({"model": {"kind": "cube"}})", R"({"model": {"kind": "tree"}, "x": 1})",
                          R"({"model": {"kind": "tree"}, "window_radius": 0})", R"({"model": {"kind": "tree"}, "trials": "many"})"}) {
    try {
      campaign::parse_config(Json::parse(bad));
      FAIL("accepted " << bad);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ConfigError);
    }
  }
}

TEST_CASE("campaign reports are deterministic across execution modes") {
  for (const char* kind : {"tree", "sl3"}) {
    campaign::CampaignConfig c;
    c.model.kind = kind;
    c.model.q = 2;
    c.trials = 6;
    c.seed = 42;
    c.window_radius = 4;
    c.height_bound = std::string(kind) == "tree" ? 1 : 2;
    auto serial = campaign::run_campaign(c, campaign::Execution::Serial).dump(2);
    auto parallel = campaign::run_campaign(c, campaign::Execution::Parallel).dump(2);
    CHECK(serial == parallel);
    CHECK(campaign::run_campaign(c, campaign::Execution::Serial).dump(2) == serial);
    auto report = Json::parse(serial);
    CHECK(report.dump(2) == serial);
    CHECK(report.at("summary").at("fail") == 0);
    CHECK(campaign::exit_status(report) == 0);
    c.seed = 43;
    CHECK(campaign::run_campaign(c, campaign::Execution::Serial).dump(2) != serial);
  }
}

TEST_CASE("an empty campaign succeeds") {
  campaign::CampaignConfig c;
  auto report = campaign::run_campaign(c, campaign::Execution::Parallel);
  CHECK(report.at("trials").empty());
  CHECK(campaign::exit_status(report) == 0);
}

TEST_CASE("exit status distinguishes failures from inconclusive runs") {
  Json r{{"summary", {{"fail", 0}, {"inconclusive", 2}}}};
  CHECK(campaign::exit_status(r) == 3);
  r["summary"]["fail"] = 1;
  CHECK(campaign::exit_status(r) == 1);
}
