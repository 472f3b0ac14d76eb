// masure: inspection of Kac-Moody data, Hecke path tools and verification
// campaigns. Every command prints one JSON document on standard output.
//
// Exit status: 0 success, 1 verification failure found, 2 usage or
// configuration error, 3 inconclusive results only.

#include "masure/campaign.hpp"
#include "masure/json_io.hpp"
#include "masure/rng.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace masure;
using Json = nlohmann::json;
namespace mj = masure::json;

namespace {

constexpr int EXIT_VERIFICATION_FAILED = 1;
constexpr int EXIT_USAGE = 2;
constexpr int EXIT_INCONCLUSIVE = 3;

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

// A relative path that does not exist is looked up in $MASURE_CONFIG_DIR.
std::string resolve(const std::string& path) {
  namespace fs = std::filesystem;
  if (path == "-" || fs::exists(path) || fs::path(path).is_absolute()) return path;
  if (const char* dir = std::getenv("MASURE_CONFIG_DIR")) {
    fs::path alt = fs::path(dir) / path;
    if (fs::exists(alt)) return alt.string();
  }
  return path;
}

Vector parse_point(const std::string& text) {
  if (!text.empty() && text.front() == '[') {
    try {
      return mj::decode_vector(Json::parse(text));
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::ParseError, std::string("bad point: ") + e.what());
    }
  }
  std::vector<Rational> c;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) c.push_back(parse_rational(item));
  if (c.empty()) throw Error(ErrorCode::ParseError, "empty point");
  return Vector(std::move(c));
}

void check_dim(const RootGeneratingSystem& rgs, const Vector& v, const char* what) {
  if (v.dim() != rgs.dim())
    throw Error(ErrorCode::DimensionMismatch, std::string(what) + " has dimension " + std::to_string(v.dim()) +
                                                  ", the realization has " + std::to_string(rgs.dim()));
}

RootGeneratingSystem load_system(const std::string& path) { return mj::decode_system(mj::read_file(resolve(path))); }

RootGeneratingSystem default_a2() { return RootGeneratingSystem::default_realization(make_matrix({{2, -1}, {-1, 2}})); }

Json path_document(const RootGeneratingSystem& rgs, const PLPath& p) {
  return {{"system", mj::encode(rgs)}, {"path", mj::encode(p)}};
}

int verdict_status(Verdict v) {
  switch (v) {
    case Verdict::Pass: return 0;
    case Verdict::Fail: return EXIT_VERIFICATION_FAILED;
    case Verdict::Inconclusive: return EXIT_INCONCLUSIVE;
  }
  return EXIT_USAGE;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kac-Moody masure verification toolkit"};
  app.require_subcommand(1);
  int status = 0;

  // km
  auto* km = app.add_subcommand("km", "Kac-Moody matrices, roots, Weyl group, Tits cone");
  km->require_subcommand(1);
  std::string matrix_file;

  auto* km_validate = km->add_subcommand("validate", "check the Kac-Moody axioms");
  km_validate->add_option("--matrix", matrix_file, "matrix JSON file")->required();
  km_validate->callback([&] {
    auto v = validate_matrix(mj::decode_matrix_entries(mj::read_file(resolve(matrix_file))));
    Json vs = Json::array();
    for (const auto& x : v.violations)
      vs.push_back({{"code", std::string(to_string(x.code))}, {"i", x.i}, {"j", x.j}, {"message", x.message()}});
    Json out{{"valid", v.ok()}, {"violations", vs}};
    if (v.ok()) {
      auto rgs = RootGeneratingSystem::default_realization(*v.matrix);
      out["dim"] = rgs.dim();
      out["finite_type"] = rgs.finite_type();
    }
    emit(out);
    status = v.ok() ? 0 : EXIT_VERIFICATION_FAILED;
  });

  long height = 1;
  auto* km_roots = km->add_subcommand("roots", "real roots up to a height");
  km_roots->add_option("--matrix", matrix_file, "matrix JSON file")->required();
  km_roots->add_option("--height", height, "height bound")->required()->check(CLI::NonNegativeNumber);
  km_roots->callback([&] {
    auto rgs = load_system(matrix_file);
    Json rs = Json::array();
    for (const auto& r : enumerate_real_roots(rgs, height)) {
      Json e = mj::encode(r);
      e["form"] = mj::encode(r.form());
      e["coroot"] = mj::encode(r.coroot());
      rs.push_back(std::move(e));
    }
    emit({{"height_bound", height}, {"count", rs.size()}, {"roots", rs}});
  });

  std::size_t length = 0;
  auto* km_weyl = km->add_subcommand("weyl", "Weyl group elements up to a length");
  km_weyl->add_option("--matrix", matrix_file, "matrix JSON file")->required();
  km_weyl->add_option("--length", length, "length bound")->required();
  km_weyl->callback([&] {
    auto rgs = load_system(matrix_file);
    Json es = Json::array();
    for (const auto& w : weyl_ball(rgs, length)) es.push_back(mj::encode(w));
    emit({{"length_bound", length}, {"count", es.size()}, {"elements", es}});
  });

  std::string point_text, x_text, y_text;
  std::size_t steps = 64;
  auto* km_cone = km->add_subcommand("cone", "Tits cone membership of a point");
  km_cone->add_option("--matrix", matrix_file, "matrix JSON file")->required();
  km_cone->add_option("--point", point_text, "point, e.g. 1,-1/2 or a JSON list")->required();
  km_cone->add_option("--steps", steps, "descent step bound");
  km_cone->callback([&] {
    auto rgs = load_system(matrix_file);
    Vector p = parse_point(point_text);
    check_dim(rgs, p, "point");
    emit(mj::encode(tits_membership(rgs, p, steps)));
  });

  auto* km_dom = km->add_subcommand("dominance", "compare two points in the coroot order");
  km_dom->add_option("--matrix", matrix_file, "matrix JSON file")->required();
  km_dom->add_option("--x", x_text, "first point")->required();
  km_dom->add_option("--y", y_text, "second point")->required();
  km_dom->callback([&] {
    auto rgs = load_system(matrix_file);
    Vector x = parse_point(x_text), y = parse_point(y_text);
    check_dim(rgs, x, "x");
    check_dim(rgs, y, "y");
    emit({{"relation", std::string(to_string(dominance_compare(rgs, x, y)))}});
  });

  // path
  auto* path = app.add_subcommand("path", "piecewise-linear paths and the growth verifier");
  path->require_subcommand(1);
  std::string path_file = "-";
  long height_bound = 4;
  std::size_t length_bound = 8;
  auto system_for = [&](const Json& doc) {
    if (!matrix_file.empty()) return load_system(matrix_file);
    if (doc.contains("system")) return mj::decode_system(doc.at("system"));
    throw Error(ErrorCode::ParseError, "no --matrix given and the path document has no 'system'");
  };

  auto* p_verify = path->add_subcommand("verify", "check the growth laws of a retracted segment");
  p_verify->add_option("--path", path_file, "path JSON file, - for standard input");
  p_verify->add_option("--matrix", matrix_file, "matrix JSON file (overrides the document)");
  p_verify->add_option("--height-bound", height_bound, "root height bound");
  p_verify->add_option("--length-bound", length_bound, "Weyl length bound for the orbit check");
  p_verify->callback([&] {
    Json doc = mj::read_file(resolve(path_file));
    auto rgs = system_for(doc);
    PLPath p = mj::decode_path(doc);
    check_dim(rgs, p.at(0), "path");
    auto rep = verify_growth(rgs, p, height_bound, length_bound);
    emit(mj::encode(rep));
    status = verdict_status(rep.overall);
  });

  std::string t_text, level_text = "0";
  std::vector<long> root_coords;
  bool allow_illegal = false;
  auto* p_fold = path->add_subcommand("fold", "reflect the tail of a path in a wall");
  p_fold->add_option("--path", path_file, "path JSON file, - for standard input");
  p_fold->add_option("--matrix", matrix_file, "matrix JSON file (overrides the document)");
  p_fold->add_option("--t", t_text, "fold parameter")->required();
  p_fold->add_option("--root", root_coords, "root coordinates in the simple-root basis")->required()->delimiter(',');
  p_fold->add_option("--level", level_text, "wall level k of M(alpha, k)");
  p_fold->add_flag("--illegal", allow_illegal, "allow folds against the growth direction");
  p_fold->callback([&] {
    Json doc = mj::read_file(resolve(path_file));
    auto rgs = system_for(doc);
    PLPath p = mj::decode_path(doc);
    Root alpha = root_from_coords(rgs, root_coords);
    emit(path_document(rgs, fold_tail(rgs, p, parse_rational(t_text), alpha, parse_rational(level_text), !allow_illegal)));
  });

  std::uint64_t seed = 0;
  std::string from_text, to_text;
  double fold_probability = 0.5;
  bool mutate = false;
  auto* p_random = path->add_subcommand("random", "a seeded random folded path");
  p_random->add_option("--matrix", matrix_file, "matrix JSON file (default A2)");
  p_random->add_option("--seed", seed, "seed")->required();
  p_random->add_option("--from", from_text, "start point (default: origin, re-sampled to be generic)");
  p_random->add_option("--to", to_text, "end point (default: drawn from the seed)");
  p_random->add_option("--height-bound", height_bound, "root height bound");
  p_random->add_option("--fold-probability", fold_probability, "probability of folding at a crossing")
      ->check(CLI::Range(0.0, 1.0));
  p_random->add_flag("--mutate", mutate, "insert one illegal fold");
  p_random->callback([&] {
    auto rgs = matrix_file.empty() ? default_a2() : load_system(matrix_file);
    Vector a = from_text.empty() ? Vector(rgs.dim()) : parse_point(from_text);
    Vector b(rgs.dim());
    if (to_text.empty()) {
      Rng rng(derive_seed(seed, 0, 0));
      while (b == a)
        for (std::size_t i = 0; i < rgs.dim(); ++i) b[i] = Rational(rng.between(-3, 3));
    } else {
      b = parse_point(to_text);
    }
    check_dim(rgs, a, "from");
    check_dim(rgs, b, "to");
    auto trace = generate_folded_path(rgs, seed, a, b, {height_bound, fold_probability, mutate});
    Json doc = path_document(rgs, trace.path);
    Json folds = Json::array();
    for (const auto& f : trace.folds) folds.push_back({{"t", mj::encode(f.t)}, {"wall", mj::encode(f.wall)}, {"legal", f.legal}});
    doc["folds"] = folds;
    doc["mutated"] = trace.mutated;
    emit(doc);
  });

  // verify-theorem
  std::string config_file, output_file;
  bool serial = false;
  auto* vt = app.add_subcommand("verify-theorem", "run a seeded verification campaign");
  vt->add_option("--config", config_file, "campaign configuration JSON (looked up in $MASURE_CONFIG_DIR)")->required();
  vt->add_option("--output", output_file, "report path (overrides the configuration)");
  vt->add_flag("--serial", serial, "run trials on one thread");
  vt->callback([&] {
    Json raw;
    try {
      raw = mj::read_file(resolve(config_file));
    } catch (const Error& e) {
      throw Error(ErrorCode::ConfigError, e.what());
    }
    auto cfg = campaign::parse_config(raw);
    if (!output_file.empty()) cfg.output = output_file;
    Json report = campaign::run_campaign(cfg, serial ? campaign::Execution::Serial : campaign::Execution::Parallel);
    if (!cfg.output.empty()) {
      std::ofstream out(cfg.output);
      if (!out) throw Error(ErrorCode::ConfigError, "cannot write report to '" + cfg.output + "'");
      out << report.dump(2) << '\n';
    }
    Json summary{{"summary", report.at("summary")}, {"config", report.at("config")}};
    if (!cfg.output.empty()) summary["report"] = cfg.output;
    emit(summary);
    status = campaign::exit_status(report);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    emit({{"error", {{"code", "UsageError"}, {"message", e.what()}}}});
    return EXIT_USAGE;
  } catch (const Error& e) {
    emit(mj::error_object(e));
    return EXIT_USAGE;
  }
  return status;
}
