#include "masure/json_io.hpp"

#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

namespace masure::json {

namespace {

long long to_int64(const Integer& z) {
  if (z > std::numeric_limits<long long>::max() || z < std::numeric_limits<long long>::min())
    throw Error(ErrorCode::OutOfRange, "integer does not fit the JSON encoding");
  return static_cast<long long>(z);
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::ParseError, std::string("missing field '") + key + "'");
  return j.at(key);
}

json encode_words(const Word& w) {
  json a = json::array();
  for (auto i : w) a.push_back(i);
  return a;
}

Word decode_word(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "a Weyl word is a list of indices");
  Word w;
  for (const auto& x : j) w.push_back(x.get<std::size_t>());
  return w;
}

}  // namespace

json encode(const Rational& r) {
  return {{"num", to_int64(numerator(r))}, {"den", to_int64(denominator(r))}};
}

Rational decode_rational(const json& j) {
  try {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    long long n = field(j, "num").get<long long>(), d = field(j, "den").get<long long>();
    if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator");
    return Rational(Integer(n), Integer(d));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("bad rational: ") + e.what());
  }
}

json encode(const std::vector<Rational>& xs) {
  json a = json::array();
  for (const auto& x : xs) a.push_back(encode(x));
  return a;
}

json encode(const Vector& v) { return encode(v.coords()); }

Vector decode_vector(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "a vector is a list of rationals");
  std::vector<Rational> c;
  for (const auto& x : j) c.push_back(decode_rational(x));
  return Vector(std::move(c));
}

json encode(const LinearForm& f) { return encode(f.coeffs()); }

LinearForm decode_form(const json& j) { return LinearForm(decode_vector(j).coords()); }

std::vector<std::vector<long>> decode_matrix_entries(const json& j) {
  const json& m = j.is_object() ? field(j, "matrix") : j;
  if (!m.is_array()) throw Error(ErrorCode::ParseError, "a matrix is a list of rows");
  std::vector<std::vector<long>> rows;
  try {
    for (const auto& r : m) {
      if (!r.is_array()) throw Error(ErrorCode::ParseError, "a matrix row is a list of integers");
      std::vector<long> row;
      for (const auto& x : r) row.push_back(x.get<long>());
      rows.push_back(std::move(row));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("bad matrix entry: ") + e.what());
  }
  return rows;
}

json encode(const RootGeneratingSystem& rgs) {
  json j;
  j["matrix"] = rgs.matrix().entries();
  if (!rgs.is_default_realization()) {
    json co = json::array(), ro = json::array();
    for (const auto& c : rgs.simple_coroots()) co.push_back(encode(c));
    for (const auto& r : rgs.simple_roots()) ro.push_back(encode(r));
    j["realization"] = {{"coroots", co}, {"roots", ro}};
  }
  return j;
}

RootGeneratingSystem decode_system(const json& j) {
  auto m = make_matrix(decode_matrix_entries(j));
  if (!j.is_object() || !j.contains("realization")) return RootGeneratingSystem::default_realization(m);
  const json& r = j.at("realization");
  std::vector<Vector> co;
  std::vector<LinearForm> ro;
  for (const auto& c : field(r, "coroots")) co.push_back(decode_vector(c));
  for (const auto& c : field(r, "roots")) ro.push_back(decode_form(c));
  return RootGeneratingSystem::with_realization(m, std::move(co), std::move(ro));
}

json encode(const Root& r) { return {{"coords", r.coords()}, {"height", r.height()}}; }

Root decode_root(const RootGeneratingSystem& rgs, const json& j) {
  const json& c = j.is_object() ? field(j, "coords") : j;
  return root_from_coords(rgs, c.get<std::vector<long>>());
}

json encode(const Wall& w) { return {{"root", w.root.coords()}, {"level", encode(w.level)}}; }

json encode(const HalfApartment& h) {
  json j{{"root", h.root.coords()}, {"strict", h.strict}};
  if (h.everything)
    j["everything"] = true;
  else
    j["level"] = encode(h.level);
  return j;
}

HalfApartment decode_half_apartment(const RootGeneratingSystem& rgs, const json& j) {
  Root r = decode_root(rgs, field(j, "root"));
  if (j.value("everything", false)) return HalfApartment::whole_space(r);
  return HalfApartment{r, decode_rational(field(j, "level")), j.value("strict", false)};
}

json encode(const EnclosedSet& e) {
  json cs = json::array();
  for (const auto& h : e.constraints()) cs.push_back(encode(h));
  return {{"dim", e.dim()}, {"empty", e.is_empty()}, {"constraints", cs}, {"height_truncated", e.height_truncated()}};
}

EnclosedSet decode_enclosed_set(const RootGeneratingSystem& rgs, const json& j) {
  std::size_t dim = field(j, "dim").get<std::size_t>();
  if (j.value("empty", false)) {
    auto e = EnclosedSet::empty(dim);
    e.set_height_truncated(j.value("height_truncated", false));
    return e;
  }
  std::vector<HalfApartment> cs;
  for (const auto& h : field(j, "constraints")) cs.push_back(decode_half_apartment(rgs, h));
  EnclosedSet e(dim, std::move(cs));
  e.set_height_truncated(j.value("height_truncated", false));
  return e;
}

json encode(const Crossing& c) {
  json ws = json::array();
  for (const auto& w : c.walls) ws.push_back(encode(w));
  return {{"t", encode(c.t)}, {"walls", ws}};
}

json encode(const WeylElement& w) { return {{"word", encode_words(w.word())}, {"length", w.length()}}; }

json encode(const AffineWeylElement& g) {
  return {{"word", encode_words(g.linear().word())}, {"translation", encode(g.translation())}};
}

AffineWeylElement decode_affine(const RootGeneratingSystem& rgs, const json& j) {
  return AffineWeylElement(WeylElement::from_word(rgs, decode_word(field(j, "word"))),
                           decode_vector(field(j, "translation")));
}

json encode(const PLPath& p) {
  json xs = json::array();
  for (const auto& v : p.vertices()) xs.push_back(encode(v));
  return {{"breakpoints", encode(p.breakpoints())}, {"vertices", xs}};
}

PLPath decode_path(const json& j) {
  const json& p = j.contains("path") ? j.at("path") : j;
  std::vector<Rational> ts;
  std::vector<Vector> xs;
  for (const auto& t : field(p, "breakpoints")) ts.push_back(decode_rational(t));
  for (const auto& x : field(p, "vertices")) xs.push_back(decode_vector(x));
  return PLPath(std::move(ts), std::move(xs));
}

json encode(const GrowthReport& r) {
  json bps = json::array();
  for (const auto& b : r.breakpoints) {
    json e{{"t", encode(b.t)},
           {"left", encode(b.left)},
           {"right", encode(b.right)},
           {"dominance", std::string(to_string(b.dominance))},
           {"verdict", std::string(to_string(b.verdict))}};
    if (b.reflection) e["reflection"] = encode(*b.reflection);
    if (!b.reason.empty()) e["reason"] = b.reason;
    bps.push_back(std::move(e));
  }
  json j{{"breakpoints", bps},
         {"chain", std::string(to_string(r.chain))},
         {"orbit", std::string(to_string(r.orbit))},
         {"endpoint", std::string(to_string(r.endpoint))},
         {"endpoint_relation", std::string(to_string(r.endpoint_relation))},
         {"overall", std::string(to_string(r.overall))}};
  if (r.first_failure) j["first_failure"] = encode(*r.first_failure);
  if (!r.failure_reason.empty()) j["failure_reason"] = r.failure_reason;
  return j;
}

json encode(const IntersectionReport& r) {
  json hits = json::array();
  for (const auto& h : r.hits) hits.push_back(encode(h));
  json j{{"verdict", std::string(to_string(r.verdict))},
         {"window_too_small", r.window_too_small},
         {"radius", r.radius},
         {"window_size", r.window_size},
         {"hits", hits},
         {"fitted", encode(r.fitted)},
         {"enclosed", r.enclosed},
         {"convex", r.convex}};
  if (r.intertwiner) {
    j["intertwiner"] = encode(*r.intertwiner);
    json images = json::array();
    for (const auto& h : r.hits) images.push_back(encode(r.intertwiner->apply(h)));
    j["images"] = images;
  }
  if (r.counterexample) j["counterexample"] = encode(*r.counterexample);
  if (!r.failure.empty()) j["failure"] = r.failure;
  return j;
}

json encode(const ConeMembership& m) {
  json j{{"kind", std::string(to_string(m.kind))}, {"J", m.J}, {"steps", m.steps}};
  if (m.dominant) j["dominant"] = encode(*m.dominant);
  return j;
}

json error_object(const Error& e) {
  return {{"error", {{"code", std::string(to_string(e.code()))}, {"message", e.what()}}}};
}

json read_file(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
    buf << in.rdbuf();
  }
  try {
    return json::parse(buf.str());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, "invalid JSON in '" + path + "': " + e.what());
  }
}

}  // namespace masure::json
