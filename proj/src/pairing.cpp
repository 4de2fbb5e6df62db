#include "nestcone/pairing.hpp"

#include <sstream>

#include "nestcone/error.hpp"
#include "nestcone/linalg.hpp"

namespace nestcone {

PairingTable pairing_table(const Space& sp) {
  int dr = divisor_rank(sp);
  int r = sp.rho();
  const Mat& g = sp.surface.gram;
  Mat m(dr, zeros(dr));
  switch (sp.id.kind) {
    case SpaceKind::Surface:
      m = g;
      break;
    case SpaceKind::Hilb:
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) m[i][j] = g[i][j];
      m[r][r] = -1;
      break;
    case SpaceKind::Nested:
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
          m[i][j] = g[i][j];
          m[r + i][r + j] = g[i][j];
        }
      m[2 * r][2 * r] = -1;
      m[2 * r + 1][2 * r] = 1;
      m[2 * r + 1][2 * r + 1] = -1;
      break;
    case SpaceKind::Univ:
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
          m[i][j] = g[i][j];
          m[r + i][r + j] = g[i][j];
        }
      m[2 * r][2 * r] = -1;
      break;
  }
  PairingTable t{sp, m, {}, {}};
  for (const auto& b : curve_basis(sp)) t.row_labels.push_back(b.label);
  for (const auto& b : divisor_basis(sp)) t.col_labels.push_back(b.label);
  return t;
}

std::string pairing_table_csv(const PairingTable& t) {
  std::ostringstream os;
  os << "curve";
  for (const auto& c : t.col_labels) os << ',' << c;
  os << '\n';
  for (size_t i = 0; i < t.matrix.size(); ++i) {
    os << t.row_labels[i];
    for (const auto& x : t.matrix[i]) os << ',' << to_string(x);
    os << '\n';
  }
  return os.str();
}

Vec functional(const CurClass& c) { return vec_mat(c.coords, pairing_table(c.space).matrix); }

Vec functional(const DivClass& d) { return mat_vec(pairing_table(d.space).matrix, d.coords); }

Rat pair(const DivClass& d, const CurClass& c) {
  if (d.space != c.space)
    throw Error(ErrorCode::SpaceMismatch, "pairing " + d.space.name() + " with " + c.space.name());
  return dot(functional(c), d.coords);
}

namespace {

void check_gamma(const Space& sp, const Gamma& gamma) {
  if (static_cast<int>(gamma.size()) != sp.rho())
    throw Error(ErrorCode::DimensionMismatch,
                "curve class on " + sp.surface.name() + " needs " + std::to_string(sp.rho()) + " coefficients");
}

void check_r(int r, int hi, const std::string& what) {
  if (r < 1 || r > hi)
    throw Error(ErrorCode::RangeError, what + ": r=" + std::to_string(r) + " outside 1.." + std::to_string(hi));
}

// sum m_i times the curve basis element at offset + i
CurClass gamma_sum(const Space& sp, const Gamma& gamma, int offset) {
  CurClass c = cur_zero(sp);
  for (int i = 0; i < sp.rho(); ++i) c.coords[offset + i] = gamma[i];
  return c;
}

size_t idx_A(const Space& sp) { return sp.rho(); }
size_t idx_Aa(const Space& sp) { return 2 * sp.rho(); }
size_t idx_Ab(const Space& sp) { return 2 * sp.rho() + 1; }

}  // namespace

CurClass curve_family_a(const Space& sp, const Gamma& gamma, int r) {
  check_gamma(sp, gamma);
  int n = sp.id.n;
  switch (sp.id.kind) {
    case SpaceKind::Hilb: {
      check_r(r, n, "C_{gamma,r}");
      CurClass c = gamma_sum(sp, gamma, 0);
      c.coords[idx_A(sp)] -= r - 1;
      return c;
    }
    case SpaceKind::Nested: {
      check_r(r, n + 1, "C^a_{gamma,r}");
      CurClass c = gamma_sum(sp, gamma, 0);
      c.coords[idx_Aa(sp)] -= r - 1;
      return c;
    }
    case SpaceKind::Univ: {
      // the marked point lies on the curve: one extra collision
      check_r(r, n - 1, "C^a_{gamma,r}");
      CurClass c = gamma_sum(sp, gamma, 0);
      c.coords[idx_Aa(sp)] -= r;
      return c;
    }
    default: break;
  }
  throw Error(ErrorCode::SpaceMismatch, "curve_family_a not defined on " + sp.name());
}

CurClass curve_family_b(const Space& sp, const Gamma& gamma, int r) {
  check_gamma(sp, gamma);
  int n = sp.id.n;
  if (sp.id.kind == SpaceKind::Nested) {
    check_r(r, n, "C^b_{gamma,r}");
    CurClass c = gamma_sum(sp, gamma, sp.rho());
    c.coords[idx_Aa(sp)] -= r;
    c.coords[idx_Ab(sp)] -= r - 1;
    return c;
  }
  if (sp.id.kind == SpaceKind::Univ) {
    check_r(r, n, "C^b_{gamma,r}");
    CurClass c = gamma_sum(sp, gamma, sp.rho());
    c.coords[idx_Aa(sp)] -= r - 1;
    return c;
  }
  throw Error(ErrorCode::SpaceMismatch, "curve_family_b not defined on " + sp.name());
}

CurClass curve_family_b_printed(const Space& sp, const Gamma& gamma, int r) {
  check_gamma(sp, gamma);
  if (sp.id.kind != SpaceKind::Nested)
    throw Error(ErrorCode::SpaceMismatch, "printed C^b expansion is a nested-space formula");
  check_r(r, sp.id.n, "C^b_{gamma,r}");
  CurClass c = gamma_sum(sp, gamma, sp.rho());
  c.coords[idx_Aa(sp)] -= 1;
  c.coords[idx_Ab(sp)] -= r - 1;
  return c;
}

CurClass chart_curve_a(const Space& sp, const Gamma& gamma, int r) {
  check_gamma(sp, gamma);
  if (sp.id.kind != SpaceKind::Nested && sp.id.kind != SpaceKind::Univ)
    throw Error(ErrorCode::SpaceMismatch, "chart curves live on Nested or Univ");
  if (r < 1) throw Error(ErrorCode::RangeError, "r must be >= 1");
  CurClass c = gamma_sum(sp, gamma, 0);
  c.coords[idx_Aa(sp)] -= r - 1;
  return c;
}

CurClass chart_curve_b(const Space& sp, const Gamma& gamma, int r) {
  check_gamma(sp, gamma);
  if (sp.id.kind != SpaceKind::Nested && sp.id.kind != SpaceKind::Univ)
    throw Error(ErrorCode::SpaceMismatch, "chart curves live on Nested or Univ");
  if (r < 1) throw Error(ErrorCode::RangeError, "r must be >= 1");
  CurClass c = gamma_sum(sp, gamma, sp.rho());
  c.coords[idx_Aa(sp)] -= r - 1;
  if (sp.id.kind == SpaceKind::Nested) c.coords[idx_Ab(sp)] -= r - 1;
  return c;
}

CurClass derived_c0(const Space& sp) {
  if (sp.id.kind != SpaceKind::Hilb) throw Error(ErrorCode::SpaceMismatch, "C0 lives on Hilb");
  return cur_basis(sp, 0) - cur_basis(sp, idx_A(sp));
}

CurClass derived_ca0(const Space& sp) {
  if (sp.id.kind != SpaceKind::Nested && sp.id.kind != SpaceKind::Univ)
    throw Error(ErrorCode::SpaceMismatch, "Ca0 lives on Nested or Univ");
  return cur_basis(sp, 0) - cur_basis(sp, idx_Aa(sp));
}

CurClass derived_cb0(const Space& sp) {
  if (sp.id.kind != SpaceKind::Nested) throw Error(ErrorCode::SpaceMismatch, "Cb0 lives on Nested");
  return cur_basis(sp, sp.rho()) - cur_basis(sp, idx_Ab(sp)) - cur_basis(sp, idx_Aa(sp));
}

std::pair<CurClass, std::optional<CurClass>> nodal_curves_k3(const Space& sp) {
  if (sp.surface.kind != SurfaceKind::K3) throw Error(ErrorCode::NotK3, sp.surface.name() + " is not a K3 surface");
  int g = sp.surface.index, n = sp.id.n;
  if (n <= g) throw Error(ErrorCode::RangeError, "nodal curves need n > g");
  switch (sp.id.kind) {
    case SpaceKind::Hilb: {
      CurClass c = cur_basis(sp, 0);
      c.coords[idx_A(sp)] -= n - 1 + g;
      return {c, std::nullopt};
    }
    case SpaceKind::Nested: {
      CurClass a = cur_basis(sp, 0);
      a.coords[idx_Aa(sp)] -= n + g;
      CurClass b = cur_basis(sp, 1);
      b.coords[idx_Aa(sp)] -= n + g;
      b.coords[idx_Ab(sp)] -= n - 1 + g;
      return {a, b};
    }
    case SpaceKind::Univ: {
      // z has n points here, so the moving point meets n-1+g others counted with nodes
      CurClass a = cur_basis(sp, 0);
      a.coords[idx_Aa(sp)] -= n - 1 + g;
      CurClass b = cur_basis(sp, 1);
      b.coords[idx_Aa(sp)] -= n - 1 + g;
      return {a, b};
    }
    default: break;
  }
  throw Error(ErrorCode::SpaceMismatch, "nodal curves not defined on " + sp.name());
}

CurClass g1n_curve(const Space& sp) {
  if (sp.id.kind != SpaceKind::Hilb) throw Error(ErrorCode::SpaceMismatch, "g^1_n lives on Hilb");
  return nodal_curves_k3(sp).first;
}

CurClass class_from_pairings(const Space& sp, const std::vector<DivisorRow>& rows) {
  Mat a;
  Vec b;
  for (const auto& row : rows) {
    if (row.divisor.space != sp) throw Error(ErrorCode::SpaceMismatch, "row divisor on " + row.divisor.space.name());
    a.push_back(functional(row.divisor));
    b.push_back(row.value);
  }
  auto res = solve(a, b, curve_rank(sp));
  if (res.status == SolveStatus::Inconsistent)
    throw Error(ErrorCode::Inconsistent, "no curve class on " + sp.name() + " has these pairings");
  if (res.status == SolveStatus::UnderDetermined)
    throw Error(ErrorCode::UnderDetermined, "the listed divisors do not span N^1(" + sp.name() + ")");
  return CurClass{sp, res.x};
}

DivClass divisor_from_pairings(const Space& sp, const std::vector<CurveRow>& rows) {
  Mat a;
  Vec b;
  for (const auto& row : rows) {
    if (row.curve.space != sp) throw Error(ErrorCode::SpaceMismatch, "row curve on " + row.curve.space.name());
    a.push_back(functional(row.curve));
    b.push_back(row.value);
  }
  auto res = solve(a, b, divisor_rank(sp));
  if (res.status == SolveStatus::Inconsistent)
    throw Error(ErrorCode::Inconsistent, "no divisor class on " + sp.name() + " has these pairings");
  if (res.status == SolveStatus::UnderDetermined)
    throw Error(ErrorCode::UnderDetermined, "the listed curves do not span N_1(" + sp.name() + ")");
  return DivClass{sp, res.x};
}

CurClass pushforward_a(const CurClass& c) {
  const Space& sp = c.space;
  int r = sp.rho();
  if (sp.id.kind != SpaceKind::Nested && sp.id.kind != SpaceKind::Univ)
    throw Error(ErrorCode::SpaceMismatch, "pr_a starts on Nested or Univ");
  Space tgt = hilb(sp.id.kind == SpaceKind::Nested ? sp.id.n + 1 : sp.id.n, sp.surface);
  CurClass out = cur_zero(tgt);
  for (int i = 0; i < r; ++i) out.coords[i] = c.coords[i] + c.coords[r + i];
  out.coords[r] = c.coords[2 * r];  // Aa -> A, Ab -> 0
  return out;
}

CurClass pushforward_b(const CurClass& c) {
  const Space& sp = c.space;
  int r = sp.rho();
  if (sp.id.kind == SpaceKind::Univ || (sp.id.kind == SpaceKind::Nested && sp.id.n == 1)) {
    CurClass out = cur_zero(surface_space(sp.surface));
    for (int i = 0; i < r; ++i) out.coords[i] = c.coords[r + i];
    return out;
  }
  if (sp.id.kind != SpaceKind::Nested) throw Error(ErrorCode::SpaceMismatch, "pr_b starts on Nested or Univ");
  CurClass out = cur_zero(hilb(sp.id.n, sp.surface));
  for (int i = 0; i < r; ++i) out.coords[i] = c.coords[r + i];
  out.coords[r] = c.coords[2 * r + 1];  // Ab -> A, Aa -> 0
  return out;
}

}  // namespace nestcone
