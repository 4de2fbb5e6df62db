#include "nestcone/verify.hpp"

#include "nestcone/error.hpp"
#include "nestcone/expr.hpp"

namespace nestcone {

const char* ray_tag_name(RayTag t) {
  switch (t) {
    case RayTag::None: return "None";
    case RayTag::PullbackOfNef: return "PullbackOfNef";
    case RayTag::ResidueOfNef: return "ResidueOfNef";
    case RayTag::PullbackOfEffective: return "PullbackOfEffective";
    case RayTag::Asserted: return "Asserted";
  }
  return "?";
}

const char* cell_status_name(CellStatus s) {
  switch (s) {
    case CellStatus::Match: return "MATCH";
    case CellStatus::Diff: return "DIFF";
    case CellStatus::Skipped: return "SKIPPED";
  }
  return "?";
}

Cone cone_of(const std::vector<TaggedRay>& rays, const Space& sp) {
  Mat m;
  for (const auto& r : rays) m.push_back(r.cls.coords);
  return Cone(divisor_rank(sp), m);
}

Cone Certificate::ray_cone() const { return cone_of(rays, space); }

Space base_a(const Space& sp) {
  if (sp.id.kind == SpaceKind::Nested) return hilb(sp.id.n + 1, sp.surface);
  if (sp.id.kind == SpaceKind::Univ) return hilb(sp.id.n, sp.surface);
  throw Error(ErrorCode::InvalidSpace, "pr_a is defined on Nested and Univ spaces, not " + sp.name());
}

Space base_b(const Space& sp) {
  if (sp.id.kind == SpaceKind::Nested)
    return sp.id.n == 1 ? surface_space(sp.surface) : hilb(sp.id.n, sp.surface);
  if (sp.id.kind == SpaceKind::Univ) return surface_space(sp.surface);
  throw Error(ErrorCode::InvalidSpace, "pr_b is defined on Nested and Univ spaces, not " + sp.name());
}

std::optional<DivClass> pullback_of_source(const TaggedRay& ray, const Space& sp) {
  if (ray.source.empty()) return std::nullopt;
  auto colon = ray.source.find(':');
  if (colon == std::string::npos) throw Error(ErrorCode::InvalidInput, "bad ray source '" + ray.source + "'");
  std::string map = ray.source.substr(0, colon), expr = ray.source.substr(colon + 1);
  // n keeps the meaning it has on the target space
  std::map<std::string, Rat> vars{{"n", Rat(sp.id.n)}};
  if (map == "a") return pull_a(parse_div(expr, base_a(sp), vars), sp);
  if (map == "b") return pull_b(parse_div(expr, base_b(sp), vars), sp);
  if (map == "res") return pull_res(parse_div(expr, surface_space(sp.surface), vars), sp);
  throw Error(ErrorCode::InvalidInput, "bad ray source '" + ray.source + "'");
}

namespace {

Certificate certify(CertKind kind, const Space& sp, const std::vector<TaggedRay>& rays,
                    const std::vector<LabeledCurve>& wits) {
  Certificate c;
  c.kind = kind;
  c.space = sp;
  c.rays = rays;
  c.witnesses = wits;
  auto fail = [&](std::string why) {
    c.certified = false;
    c.reason = std::move(why);
    return c;
  };
  if (rays.empty() || wits.empty()) throw Error(ErrorCode::EmptyInput, "certificate needs rays and witnesses");
  for (const auto& r : rays)
    if (r.cls.space != sp) throw Error(ErrorCode::SpaceMismatch, "ray " + r.label + " lives on " + r.cls.space.name());
  for (const auto& w : wits)
    if (w.cls.space != sp)
      throw Error(ErrorCode::SpaceMismatch, "witness " + w.label + " lives on " + w.cls.space.name());

  for (const auto& w : wits) {
    Vec row;
    for (const auto& r : rays) row.push_back(pair(r.cls, w.cls));
    c.matrix.push_back(row);
  }

  for (const auto& r : rays) {
    if (r.tag == RayTag::None) return fail("ray " + r.label + " has no provenance tag");
    auto pb = pullback_of_source(r, sp);
    if (pb && !(*pb == r.cls)) return fail("ray " + r.label + " is not the pullback named by its provenance");
  }
  for (size_t i = 0; i < wits.size(); ++i)
    for (size_t j = 0; j < rays.size(); ++j)
      if (sgn(c.matrix[i][j]) < 0)
        return fail(wits[i].label + " pairs negatively with " + rays[j].label + " (" + to_string(c.matrix[i][j]) + ")");

  size_t dim = divisor_rank(sp);
  Cone rc = cone_of(rays, sp);
  if (!rc.is_pointed()) return fail("ray cone is not pointed");
  Mat fs;
  for (const auto& w : wits) fs.push_back(functional(w.cls));
  Cone dc = dual(Cone(dim, fs));
  if (!cone_equal(rc, dc)) {
    if (cone_contains(dc, rc)) return fail("dual cone strictly larger");
    return fail("ray cone and dual cone differ");
  }

  if (kind == CertKind::NefDual) {
    bool ok = c.matrix.size() == rays.size();
    for (size_t i = 0; ok && i < c.matrix.size(); ++i)
      for (size_t j = 0; ok && j < rays.size(); ++j)
        ok = (i == j) ? sgn(c.matrix[i][j]) > 0 : sgn(c.matrix[i][j]) == 0;
    if (!ok) return fail("matrix not diagonal-compatible");
  }
  c.certified = true;
  return c;
}

}  // namespace

Certificate certify_nef(const Space& sp, const std::vector<TaggedRay>& rays, const std::vector<LabeledCurve>& w) {
  return certify(CertKind::NefDual, sp, rays, w);
}

Certificate certify_eff(const Space& sp, const std::vector<TaggedRay>& rays, const std::vector<LabeledCurve>& w) {
  return certify(CertKind::EffMoving, sp, rays, w);
}

namespace {

TaggedRay resolve_ray(const LabelDef& l, const Space& sp) {
  return TaggedRay{l.label, parse_div(l.expr, sp), l.tag, l.citation, l.source};
}
LabeledCurve resolve_curve(const LabelDef& l, const Space& sp) { return LabeledCurve{l.label, parse_cur(l.expr, sp)}; }

std::vector<std::string> labels(const std::vector<LabelDef>& ls) {
  std::vector<std::string> out;
  for (const auto& l : ls) out.push_back(l.label);
  return out;
}

// reads a printed row back into a curve class and compares it with the catalog's class
std::string row_readback(const TableSpec& t, const Space& sp, size_t r, const std::vector<TaggedRay>& cols) {
  std::vector<DivisorRow> rows;
  for (size_t j = 0; j < cols.size(); ++j) rows.push_back({cols[j].cls, parse_scalar(t.cells[r][j], sp)});
  std::string who = "row " + t.rows[r].label + ": ";
  try {
    CurClass c = class_from_pairings(sp, rows);
    CurClass mine = parse_cur(t.rows[r].expr, sp);
    if (c == mine) return who + "printed pairings determine " + format_cur(c) + ", the catalog class";
    return who + "printed pairings determine " + format_cur(c) + ", catalog class is " + format_cur(mine);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Inconsistent) return who + "no curve class has the printed pairings";
    if (e.code() == ErrorCode::UnderDetermined) return who + "printed pairings do not determine a class";
    throw;
  }
}

TableReport reproduce_chart(const TableSpec& t) {
  TableReport rep;
  rep.id = t.id;
  rep.space = "P2 nested and universal families";
  for (const auto& row : t.chart) {
    Space sp = make_space(row.space, row.n, p2());
    std::vector<std::optional<TaggedRay>> rays;
    std::vector<std::optional<LabeledCurve>> curves;
    std::vector<std::string> missing;
    for (const auto& l : row.rays) {
      rays.push_back(l.resolved() ? std::optional(resolve_ray(l, sp)) : std::nullopt);
      if (!l.resolved()) missing.push_back(l.label);
    }
    for (const auto& l : row.curves) {
      curves.push_back(l.resolved() ? std::optional(resolve_curve(l, sp)) : std::nullopt);
      if (!l.resolved()) missing.push_back(l.label);
    }
    for (size_t i = 0; i < curves.size(); ++i) {
      for (size_t j = 0; j < rays.size(); ++j) {
        CellResult cell;
        cell.space = row.space_label;
        cell.row = row.space_label + " " + row.curves[i].label;
        cell.col = row.space_label + " " + row.rays[j].label;
        if (!curves[i] || !rays[j]) {
          cell.status = CellStatus::Skipped;
          cell.note = "unresolved label " + (!curves[i] ? row.curves[i].label : row.rays[j].label);
        } else {
          cell.computed = pair(rays[j]->cls, curves[i]->cls);
          cell.status = sgn(*cell.computed) >= 0 ? CellStatus::Match : CellStatus::Diff;
          cell.note = "moving curve against effective ray, expect >= 0";
        }
        rep.cells.push_back(cell);
      }
    }
    if (missing.empty()) {
      std::vector<TaggedRay> rs;
      std::vector<LabeledCurve> cs;
      for (auto& r : rays) rs.push_back(*r);
      for (auto& c : curves) cs.push_back(*c);
      rep.certificates.push_back(certify_eff(sp, rs, cs));
      rep.notes.push_back(row.space_label + ": all labels resolve, effective cone certificate attempted");
    } else {
      std::string m;
      for (const auto& s : missing) m += (m.empty() ? "" : ", ") + s;
      rep.notes.push_back(row.space_label + ": no certificate, unresolved " + m);
    }
    if (!row.reconstruct_label.empty()) {
      std::vector<CurveRow> cr;
      for (const auto& [e, v] : row.reconstruct_rows) cr.push_back({parse_cur(e, sp), parse_scalar(v, sp)});
      DivClass d = divisor_from_pairings(sp, cr);
      rep.notes.push_back(row.space_label + ": reconstruction (flagged, not used in checks) " + row.reconstruct_label +
                          " = " + format_div(d));
    }
  }
  return rep;
}

}  // namespace

std::vector<TaggedRay> table_rays(const TableSpec& t, const Space& sp) {
  std::vector<TaggedRay> out;
  for (const auto& l : t.cols) out.push_back(resolve_ray(l, sp));
  return out;
}

std::vector<LabeledCurve> table_curves(const TableSpec& t, const Space& sp) {
  std::vector<LabeledCurve> out;
  for (const auto& l : t.rows) out.push_back(resolve_curve(l, sp));
  return out;
}

std::string nef_table_for(const Space& sp) {
  if (!(sp.surface == p2())) return "";
  if (sp.id.kind == SpaceKind::Univ) return "nef_p2_univ";
  if (sp.id.kind == SpaceKind::Nested) return "nef_p2_nested";
  if (sp.id.kind == SpaceKind::Hilb) return "hilb_p2_nef";
  return "";
}

size_t TableReport::count(CellStatus s) const {
  size_t k = 0;
  for (const auto& c : cells) k += c.status == s;
  return k;
}

bool TableReport::ok() const {
  if (count(CellStatus::Diff)) return false;
  for (const auto& c : certificates)
    if (!c.certified) return false;
  for (const auto& [name, pass] : checks)
    if (!pass) return false;
  return true;
}

TableReport reproduce_table(const std::string& id, const TableParams& params) {
  const TableSpec& t = find_table(id);
  Space sp = table_space(t, params);
  if (t.kind == TableKind::Chart) return reproduce_chart(t);

  TableReport rep;
  rep.id = t.id;
  rep.params = params;
  rep.params.n = sp.id.n;
  if (t.surface == "k3") rep.params.g = sp.surface.index;
  if (t.surface == "fi") rep.params.i = sp.surface.index;
  rep.space = sp.name();
  rep.row_labels = labels(t.rows);
  rep.col_labels = labels(t.cols);

  auto rays = table_rays(t, sp);
  auto curves = table_curves(t, sp);
  for (size_t i = 0; i < curves.size(); ++i) {
    for (size_t j = 0; j < rays.size(); ++j) {
      CellResult cell;
      cell.space = sp.name();
      cell.row = t.rows[i].label;
      cell.col = t.cols[j].label;
      cell.printed = parse_scalar(t.cells[i][j], sp);
      cell.computed = pair(rays[j].cls, curves[i].cls);
      cell.status = *cell.printed == *cell.computed ? CellStatus::Match : CellStatus::Diff;
      rep.cells.push_back(cell);
    }
  }

  if (t.kind == TableKind::Nef) rep.certificates.push_back(certify_nef(sp, rays, curves));
  if (t.kind == TableKind::Eff) {
    const Certificate& cert = rep.certificates.emplace_back(certify_eff(sp, rays, curves));
    for (size_t r = 0; r < t.rows.size(); ++r) rep.notes.push_back(row_readback(t, sp, r, rays));
    std::string nid = nef_table_for(sp);
    if (!nid.empty()) {
      const TableSpec& nt = find_table(nid);
      Cone nef = cone_of(table_rays(nt, sp), sp);
      rep.checks.emplace_back("nef cone (" + nid + ") inside effective cone", cone_contains(cert.ray_cone(), nef));
    }
  }
  return rep;
}

}  // namespace nestcone
