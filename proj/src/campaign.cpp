#include "masure/campaign.hpp"

#include "masure/rng.hpp"
#include "masure/sl3_model.hpp"
#include "masure/tree_model.hpp"

#include <set>

namespace masure::campaign {

using Json = nlohmann::json;
namespace mj = masure::json;

namespace {

enum Stream : std::uint64_t { StreamA = 1, StreamB = 2, StreamSegment = 3 };

Verdict parse_verdict(const std::string& s) {
  if (s == "PASS") return Verdict::Pass;
  if (s == "FAIL") return Verdict::Fail;
  return Verdict::Inconclusive;
}

// Rational point of the window with small odd denominators, so that it is
// rarely special.
Vector random_point(Rng& rng, std::size_t dim, long radius) {
  static const long dens[] = {3, 5, 7, 9, 11};
  std::vector<Rational> c;
  for (std::size_t i = 0; i < dim; ++i) {
    long d = dens[rng.below(5)];
    c.push_back(Rational(rng.between(-radius * d, radius * d), d));
  }
  return Vector(std::move(c));
}

Vector random_special(Rng& rng, std::size_t dim, long radius) {
  std::vector<Rational> c;
  for (std::size_t i = 0; i < dim; ++i) c.push_back(Rational(rng.between(-radius, radius)));
  return Vector(std::move(c));
}

template <class M>
Json growth_record(const M& model, const PLPath& path, const SectorGerm& germ, const CampaignConfig& c, Verdict& v) {
  const auto& rgs = model.system();
  // verify_growth is stated for -infinity; toward +infinity the negated path is checked.
  PLPath oriented = germ.is_minus_infinity() ? path : path.negated();
  auto rep = verify_growth(rgs, oriented, c.height_bound, c.length_bound);
  v = rep.overall;
  bool folded = path.pieces() > 1;
  bool strict = rep.endpoint_relation == Dominance::LE;
  if (v == Verdict::Pass && folded != strict) v = Verdict::Fail;
  return {{"path", mj::encode(path)},
          {"verdict", std::string(to_string(v))},
          {"folded", folded},
          {"endpoint_relation", std::string(to_string(rep.endpoint_relation))},
          {"report", mj::encode(rep)}};
}

template <class M>
Json run_trial(const M& model, const CampaignConfig& c, std::size_t index) {
  const auto& rgs = model.system();
  Json rec{{"index", index}};
  Verdict overall = Verdict::Pass;
  try {
    auto A = model.random_apartment(derive_seed(c.seed, StreamA, index), c.complexity);
    auto B = model.random_apartment(derive_seed(c.seed, StreamB, index), c.complexity);

    long radius = c.window_radius;
    auto ir = check_MA2(model, A, B, radius);
    const bool initial_small = ir.window_too_small;
    for (std::size_t e = 0; e < c.enlargements && ir.window_too_small; ++e) {
      radius *= 2;
      ir = check_MA2(model, A, B, radius);
    }
    rec["intersection"] = mj::encode(ir);
    rec["initial_window_too_small"] = initial_small;
    overall = combine(overall, ir.verdict);

    // A segment of A from a generic rational point to a special point.
    Rng rng(derive_seed(c.seed, StreamSegment, index));
    const long R = c.window_radius;
    Vector a, b;
    for (;;) {
      a = random_point(rng, rgs.dim(), R);
      b = random_special(rng, rgs.dim(), R);
      if (a != b && generic_position(a, b, walls_meeting(rgs, a, b, c.height_bound), false)) break;
    }
    PLPath minus = model.retract_segment(A, a, b, MINUS_INFINITY);
    PLPath plus = model.retract_segment(A, a, b, PLUS_INFINITY);
    Verdict vm, vp;
    rec["retraction"] = {{"from", mj::encode(a)},
                         {"to", mj::encode(b)},
                         {"minus", growth_record(model, minus, MINUS_INFINITY, c, vm)},
                         {"plus", growth_record(model, plus, PLUS_INFINITY, c, vp)}};
    overall = combine(overall, combine(vm, vp));

    // Coinciding retractions exactly when the sampled segment stays in the standard apartment.
    const auto standard = model.standard_apartment();
    std::set<Rational> params(minus.breakpoints().begin(), minus.breakpoints().end());
    for (std::size_t j = 0; j <= c.samples; ++j) params.insert(Rational(static_cast<long>(j), static_cast<long>(c.samples)));
    bool inside = true;
    for (const auto& t : params) inside = inside && model.locate(standard, model.chart(A, a + t * (b - a))).has_value();
    const bool coincide = minus == plus;
    Verdict vs = coincide == inside ? Verdict::Pass : Verdict::Fail;
    rec["separation"] = {{"coincide", coincide}, {"inside_standard", inside}, {"verdict", std::string(to_string(vs))}};
    overall = combine(overall, vs);
  } catch (const Error& e) {
    rec["error"] = mj::error_object(e)["error"];
    overall = combine(overall, e.code() == ErrorCode::PrecisionExhausted ? Verdict::Inconclusive : Verdict::Fail);
  }
  rec["verdict"] = std::string(to_string(overall));
  return rec;
}

template <class M>
std::vector<Json> run_all(const M& model, const CampaignConfig& c, Execution mode) {
  std::vector<Json> out(c.trials);
  const long n = static_cast<long>(c.trials);
  if (mode == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = run_trial(model, c, static_cast<std::size_t>(i));
  } else {
    for (long i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = run_trial(model, c, static_cast<std::size_t>(i));
  }
  return out;
}

}  // namespace

CampaignConfig parse_config(const Json& j) {
  static const std::set<std::string> keys{"model",        "trials",      "seed",    "window_radius", "complexity",
                                          "height_bound", "length_bound", "enlargements", "samples", "output"};
  if (!j.is_object()) throw Error(ErrorCode::ConfigError, "configuration must be an object");
  for (const auto& [k, v] : j.items())
    if (!keys.count(k)) throw Error(ErrorCode::ConfigError, "unknown configuration key '" + k + "'");
  if (!j.contains("model")) throw Error(ErrorCode::ConfigError, "missing 'model'");
  CampaignConfig c;
  try {
    const auto& m = j.at("model");
    for (const auto& [k, v] : m.items())
      if (k != "kind" && k != "q" && k != "precision") throw Error(ErrorCode::ConfigError, "unknown model key '" + k + "'");
    c.model.kind = m.at("kind").get<std::string>();
    c.model.q = m.value("q", 2);
    c.model.precision = m.value("precision", 40L);
    c.trials = j.value("trials", std::size_t{0});
    c.seed = j.value("seed", std::uint64_t{1});
    c.window_radius = j.value("window_radius", 8L);
    c.complexity = j.value("complexity", 2);
    c.height_bound = j.value("height_bound", 4L);
    c.length_bound = j.value("length_bound", std::size_t{8});
    c.enlargements = j.value("enlargements", std::size_t{2});
    c.samples = j.value("samples", std::size_t{16});
    c.output = j.value("output", std::string{});
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ConfigError, std::string("bad configuration value: ") + e.what());
  }
  if (c.model.kind != "tree" && c.model.kind != "sl3")
    throw Error(ErrorCode::ConfigError, "model kind must be 'tree' or 'sl3'");
  if (c.window_radius < 1) throw Error(ErrorCode::ConfigError, "window_radius must be at least 1");
  if (c.height_bound < 1) throw Error(ErrorCode::ConfigError, "height_bound must be at least 1");
  if (c.complexity < 0) throw Error(ErrorCode::ConfigError, "complexity must be nonnegative");
  if (c.samples < 1) throw Error(ErrorCode::ConfigError, "samples must be at least 1");
  if (c.model.precision < 1) throw Error(ErrorCode::ConfigError, "precision must be positive");
  return c;
}

Json encode(const CampaignConfig& c) {
  Json m{{"kind", c.model.kind}, {"q", c.model.q}};
  if (c.model.kind == "sl3") m["precision"] = c.model.precision;
  Json j{{"model", m},
         {"trials", c.trials},
         {"seed", c.seed},
         {"window_radius", c.window_radius},
         {"complexity", c.complexity},
         {"height_bound", c.height_bound},
         {"length_bound", c.length_bound},
         {"enlargements", c.enlargements},
         {"samples", c.samples}};
  if (!c.output.empty()) j["output"] = c.output;
  return j;
}

Json run_campaign(const CampaignConfig& c, Execution mode) {
  std::vector<Json> trials;
  try {
    if (c.model.kind == "tree")
      trials = run_all(tree::TreeModel(c.model.q), c, mode);
    else
      trials = run_all(sl3::Sl3Model(c.model.q, c.model.precision), c, mode);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InvalidField) throw Error(ErrorCode::ConfigError, e.what());
    throw;
  }
  std::size_t pass = 0, fail = 0, inconclusive = 0, small_initial = 0, small_final = 0, exhausted = 0, folded = 0,
              coincide = 0;
  for (const auto& t : trials) {
    switch (parse_verdict(t.at("verdict").get<std::string>())) {
      case Verdict::Pass: ++pass; break;
      case Verdict::Fail: ++fail; break;
      case Verdict::Inconclusive: ++inconclusive; break;
    }
    if (t.contains("intersection")) {
      small_initial += t.at("initial_window_too_small").get<bool>();
      small_final += t.at("intersection").at("window_too_small").get<bool>();
    }
    if (t.contains("error") && t.at("error").at("code") == "PrecisionExhausted") ++exhausted;
    if (t.contains("retraction")) folded += t.at("retraction").at("minus").at("folded").get<bool>();
    if (t.contains("separation")) coincide += t.at("separation").at("coincide").get<bool>();
  }
  Json summary{{"trials", trials.size()},
               {"pass", pass},
               {"fail", fail},
               {"inconclusive", inconclusive},
               {"window_too_small_initial", small_initial},
               {"window_too_small_final", small_final},
               {"precision_exhausted", exhausted},
               {"folded_paths", folded},
               {"coinciding_retractions", coincide}};
  return {{"config", encode(c)}, {"summary", summary}, {"trials", trials}, {"schema", "masure/verification-report/1"}};
}

int exit_status(const Json& report) {
  const auto& s = report.at("summary");
  if (s.at("fail").get<std::size_t>() > 0) return 1;
  if (s.at("inconclusive").get<std::size_t>() > 0) return 3;
  return 0;
}

}  // namespace masure::campaign
