#pragma once
#include <optional>
#include <string>
#include <vector>

#include "nestcone/cone.hpp"
#include "nestcone/pairing.hpp"

namespace nestcone {

enum class RayTag { None, PullbackOfNef, ResidueOfNef, PullbackOfEffective, Asserted };
const char* ray_tag_name(RayTag t);

struct TaggedRay {
  std::string label;
  DivClass cls;
  RayTag tag = RayTag::None;
  std::string citation;
  // "a:<expr>", "b:<expr>" or "res:<expr>": the base class this ray pulls back from
  std::string source;
};

struct LabeledCurve {
  std::string label;
  CurClass cls;
};

enum class CertKind { NefDual, EffMoving };

struct Certificate {
  CertKind kind = CertKind::NefDual;
  Space space;
  std::vector<TaggedRay> rays;
  std::vector<LabeledCurve> witnesses;
  Mat matrix;  // row = witness, column = ray
  bool certified = false;
  std::string reason;  // empty when certified

  Cone ray_cone() const;
};

Certificate certify_nef(const Space& sp, const std::vector<TaggedRay>& rays, const std::vector<LabeledCurve>& witnesses);
Certificate certify_eff(const Space& sp, const std::vector<TaggedRay>& rays, const std::vector<LabeledCurve>& moving);

Cone cone_of(const std::vector<TaggedRay>& rays, const Space& sp);

// base spaces of the projections out of a Nested or Univ space
Space base_a(const Space& sp);
Space base_b(const Space& sp);
// evaluates a ray's source and pulls it back; nullopt when the ray has no source
std::optional<DivClass> pullback_of_source(const TaggedRay& ray, const Space& sp);

// ---- catalog ----

struct TableParams {
  std::optional<int> n, g, i;
};

struct LabelDef {
  std::string label;      // ASCII
  std::string tex;        // for figures
  std::string expr;       // class expression; empty when unresolved
  RayTag tag = RayTag::None;
  std::string citation;
  std::string source;
  bool resolved() const { return !expr.empty(); }
};

enum class TableKind { Pairing, Nef, Eff, Chart };

struct ChartRow {
  std::string space_label;  // e.g. "P2[3,2]"
  SpaceKind space;
  int n;
  std::vector<LabelDef> rays;
  std::vector<LabelDef> curves;
  // flagged reconstruction of an unresolved ray: test curves and their expected pairings
  std::string reconstruct_label;
  std::vector<std::pair<std::string, std::string>> reconstruct_rows;
};

struct TableSpec {
  std::string id;
  std::string title;
  TableKind kind = TableKind::Pairing;
  std::string surface;  // p2, p1xp1, fi, k3
  SpaceKind space = SpaceKind::Hilb;
  std::optional<int> fixed_n;
  std::vector<LabelDef> rows;  // curves
  std::vector<LabelDef> cols;  // divisors
  std::vector<std::vector<std::string>> cells;  // printed, as scalar expressions
  std::string provenance;
  std::vector<ChartRow> chart;
};

const std::vector<TableSpec>& catalog();
const TableSpec& find_table(const std::string& id);

// parameter sets checked by `verify --all`
std::vector<TableParams> acceptance_params(const TableSpec& t);
TableParams default_params(const TableSpec& t);
std::string params_string(const TableParams& p);

Space table_space(const TableSpec& t, const TableParams& p);

enum class CellStatus { Match, Diff, Skipped };
const char* cell_status_name(CellStatus s);

struct CellResult {
  std::string row, col;
  std::string space;  // chart rows differ per row
  std::optional<Rat> printed;
  std::optional<Rat> computed;
  CellStatus status = CellStatus::Match;
  std::string note;
};

struct TableReport {
  std::string id;
  TableParams params;
  std::string space;
  std::vector<std::string> row_labels, col_labels;
  std::vector<CellResult> cells;
  std::vector<Certificate> certificates;
  std::vector<std::string> notes;
  std::vector<std::pair<std::string, bool>> checks;  // extra named checks

  size_t count(CellStatus s) const;
  bool ok() const;  // no diffs and every certificate certified
};

TableReport reproduce_table(const std::string& id, const TableParams& params);

// resolved (label, class) lists for a nef/eff table
std::vector<TaggedRay> table_rays(const TableSpec& t, const Space& sp);
std::vector<LabeledCurve> table_curves(const TableSpec& t, const Space& sp);

// the nef cone certified for the same space as an eff table (for nef-in-eff checks)
std::string nef_table_for(const Space& sp);

}  // namespace nestcone
