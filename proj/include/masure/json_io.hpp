#pragma once

// JSON encodings shared by the CLI and campaign reports. Rationals are
// {"num": n, "den": d} with d > 0 in lowest terms; objects have sorted keys,
// so dumping the same value always yields the same bytes.

#include "masure/heckepath.hpp"
#include "masure/masure_model.hpp"

#include <json.hpp>

namespace masure::json {

using nlohmann::json;

json encode(const Rational& r);
Rational decode_rational(const json& j);
json encode(const Vector& v);
Vector decode_vector(const json& j);
json encode(const LinearForm& f);
LinearForm decode_form(const json& j);
json encode(const std::vector<Rational>& xs);

/// {"matrix": [[...]], "realization": {"coroots": [...], "roots": [...]}};
/// the realization is omitted for the default one.
json encode(const RootGeneratingSystem& rgs);
RootGeneratingSystem decode_system(const json& j);
std::vector<std::vector<long>> decode_matrix_entries(const json& j);

json encode(const Root& r);
Root decode_root(const RootGeneratingSystem& rgs, const json& j);
json encode(const Wall& w);
json encode(const HalfApartment& h);
HalfApartment decode_half_apartment(const RootGeneratingSystem& rgs, const json& j);
json encode(const EnclosedSet& e);
EnclosedSet decode_enclosed_set(const RootGeneratingSystem& rgs, const json& j);
json encode(const Crossing& c);
json encode(const WeylElement& w);
json encode(const AffineWeylElement& g);
AffineWeylElement decode_affine(const RootGeneratingSystem& rgs, const json& j);

json encode(const PLPath& p);
PLPath decode_path(const json& j);
json encode(const GrowthReport& r);
json encode(const IntersectionReport& r);
json encode(const ConeMembership& m);

json error_object(const Error& e);

/// Reads a whole file (or standard input for "-") as JSON; ParseError on failure.
json read_file(const std::string& path);

}  // namespace masure::json
