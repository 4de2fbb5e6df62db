#include "nestcone/io.hpp"

#include "nestcone/expr.hpp"

namespace nestcone {

namespace {
const char* kind_name(SpaceKind k) {
  switch (k) {
    case SpaceKind::Surface: return "Surface";
    case SpaceKind::Hilb: return "Hilb";
    case SpaceKind::Nested: return "Nested";
    case SpaceKind::Univ: return "Univ";
  }
  return "?";
}

Json labels(const std::vector<BasisElement>& b) {
  Json out = Json::array();
  for (const auto& e : b) out.push_back(e.label);
  return out;
}
}  // namespace

Json to_json(const Rat& r) { return to_string(r); }

Json to_json(const Vec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Json to_json(const Mat& m) {
  Json out = Json::array();
  for (const auto& row : m) out.push_back(to_json(row));
  return out;
}

Json to_json(const Space& sp) {
  Json j;
  j["kind"] = kind_name(sp.id.kind);
  j["n"] = sp.id.n;
  j["surface"] = sp.surface.name();
  return j;
}

Json to_json(const DivClass& d) {
  Json j;
  j["space"] = to_json(d.space);
  j["basis"] = labels(divisor_basis(d.space));
  j["coords"] = to_json(d.coords);
  j["expr"] = format_div(d);
  return j;
}

Json to_json(const CurClass& c) {
  Json j;
  j["space"] = to_json(c.space);
  j["basis"] = labels(curve_basis(c.space));
  j["coords"] = to_json(c.coords);
  j["expr"] = format_cur(c);
  return j;
}

Json to_json(const Cone& c) {
  Json j;
  j["dim"] = c.dim();
  j["rays"] = to_json(c.rays());
  j["facets"] = to_json(c.facets());
  j["equalities"] = to_json(c.equalities());
  j["pointed"] = c.is_pointed();
  j["full_dimensional"] = c.is_full_dimensional();
  return j;
}

Json to_json(const Polytope& p) {
  Json j;
  j["vertices"] = to_json(p.vertices);
  j["rays"] = to_json(p.source_rays);
  Json e = Json::array();
  for (auto [a, b] : p.edges) e.push_back({a, b});
  j["edges"] = e;
  return j;
}

Json to_json(const PairingTable& t) {
  Json j;
  j["space"] = to_json(t.space);
  j["rows"] = t.row_labels;
  j["cols"] = t.col_labels;
  j["matrix"] = to_json(t.matrix);
  return j;
}

Json to_json(const Certificate& c) {
  Json j;
  j["kind"] = c.kind == CertKind::NefDual ? "NefDual" : "EffMoving";
  j["space"] = to_json(c.space);
  Json rays = Json::array();
  for (const auto& r : c.rays) {
    Json x;
    x["label"] = r.label;
    x["class"] = to_json(r.cls.coords);
    x["expr"] = format_div(r.cls);
    x["tag"] = ray_tag_name(r.tag);
    x["citation"] = r.citation;
    if (!r.source.empty()) x["source"] = r.source;
    rays.push_back(x);
  }
  j["divisor_basis"] = labels(divisor_basis(c.space));
  j["rays"] = rays;
  Json w = Json::array();
  for (const auto& c2 : c.witnesses) {
    Json x;
    x["label"] = c2.label;
    x["class"] = to_json(c2.cls.coords);
    x["expr"] = format_cur(c2.cls);
    w.push_back(x);
  }
  j["curve_basis"] = labels(curve_basis(c.space));
  j["witnesses"] = w;
  j["matrix"] = to_json(c.matrix);
  j["verdict"] = c.certified ? "Certified" : "Failed";
  if (!c.certified) j["reason"] = c.reason;
  return j;
}

Json to_json(const TableReport& r) {
  Json j;
  j["id"] = r.id;
  Json p = Json::object();
  if (r.params.n) p["n"] = *r.params.n;
  if (r.params.g) p["g"] = *r.params.g;
  if (r.params.i) p["i"] = *r.params.i;
  j["params"] = p;
  j["space"] = r.space;
  if (!r.row_labels.empty()) {
    j["rows"] = r.row_labels;
    j["cols"] = r.col_labels;
  }
  Json cells = Json::array();
  for (const auto& c : r.cells) {
    Json x;
    x["row"] = c.row;
    x["col"] = c.col;
    x["printed"] = c.printed ? Json(to_string(*c.printed)) : Json(nullptr);
    x["computed"] = c.computed ? Json(to_string(*c.computed)) : Json(nullptr);
    x["status"] = cell_status_name(c.status);
    if (!c.note.empty()) x["note"] = c.note;
    cells.push_back(x);
  }
  j["cells"] = cells;
  Json certs = Json::array();
  for (const auto& c : r.certificates) certs.push_back(to_json(c));
  j["certificates"] = certs;
  Json checks = Json::array();
  for (const auto& [name, pass] : r.checks) checks.push_back({{"name", name}, {"pass", pass}});
  j["checks"] = checks;
  j["notes"] = r.notes;
  j["summary"] = {{"match", r.count(CellStatus::Match)},
                  {"diff", r.count(CellStatus::Diff)},
                  {"skipped", r.count(CellStatus::Skipped)}};
  j["ok"] = r.ok();
  return j;
}

Json to_json(const ButlerReport& r) {
  Json j;
  j["i"] = r.input.i;
  j["a"] = r.input.a;
  j["b"] = r.input.b;
  j["n"] = r.input.n;
  j["swap_factors"] = r.input.swap_factors;
  j["rays"] = {"Hb", "Fb", "Hdiff", "Fdiff", "Da[1,1]"};
  j["claimed"] = r.claimed;
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json x;
    x["k"] = row.k;
    x["class"] = format_div(row.cls);
    x["coefficients"] = to_json(row.coefficients);
    x["position"] = position_name(row.position);
    rows.push_back(x);
  }
  j["rows"] = rows;
  j["ok"] = r.ok();
  return j;
}

Json to_json(const AsymptoticReport& r) {
  Json j;
  j["frame"] = {"H1", "H2", "B1", "B2"};
  j["k_max"] = r.k_max;
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json x;
    x["k"] = row.k;
    x["a_k"] = row.ak;
    x["a_prime_k"] = row.apk;
    x["deviation_1"] = to_string(row.dev1);
    x["deviation_2"] = to_string(row.dev2);
    x["nested_next"] = row.nested_next;
    x["distance"] = to_string(row.distance);
    x["within_bound"] = row.within_bound;
    rows.push_back(x);
  }
  j["rows"] = rows;
  j["deviations_exact"] = r.deviations_exact;
  j["deviations_decreasing"] = r.deviations_decreasing;
  j["limit_is_orthant"] = r.limit_is_orthant;
  j["ok"] = r.ok();
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace nestcone
