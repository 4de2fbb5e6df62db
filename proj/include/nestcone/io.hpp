#pragma once
#include <json.hpp>

#include "nestcone/cone.hpp"
#include "nestcone/pairing.hpp"
#include "nestcone/studies.hpp"
#include "nestcone/verify.hpp"

namespace nestcone {

using Json = nlohmann::ordered_json;

Json to_json(const Rat& r);
Json to_json(const Vec& v);
Json to_json(const Mat& m);
Json to_json(const Space& sp);
Json to_json(const DivClass& d);
Json to_json(const CurClass& c);
Json to_json(const Cone& c);
Json to_json(const Polytope& p);
Json to_json(const PairingTable& t);
Json to_json(const Certificate& c);
Json to_json(const TableReport& r);
Json to_json(const ButlerReport& r);
Json to_json(const AsymptoticReport& r);

// two-space indented, stable key order
std::string dump(const Json& j);

}  // namespace nestcone
