#include "nestcone/spaces.hpp"

#include <cctype>

#include "nestcone/error.hpp"

namespace nestcone {

std::string SurfaceModel::name() const {
  switch (kind) {
    case SurfaceKind::P2: return "P2";
    case SurfaceKind::F: return index == 0 ? "P1xP1" : "F" + std::to_string(index);
    case SurfaceKind::K3: return "K3(g=" + std::to_string(index) + ")";
  }
  return "?";
}

SurfaceModel surface_model(SurfaceKind kind, int param) {
  SurfaceModel s;
  s.kind = kind;
  switch (kind) {
    case SurfaceKind::P2:
      s.rho = 1;
      s.generator_names = {"H"};
      s.gram = {from_ints({1})};
      s.canonical = from_ints({-3});
      break;
    case SurfaceKind::F:
      if (param < 0) throw Error(ErrorCode::InvalidIndex, "Hirzebruch index must be >= 0");
      s.index = param;
      s.rho = 2;
      if (param == 0) {
        s.generator_names = {"H1", "H2"};
        s.gram = {from_ints({0, 1}), from_ints({1, 0})};
        s.canonical = from_ints({-2, -2});
      } else {
        s.generator_names = {"H", "F"};
        s.gram = {from_ints({param, 1}), from_ints({1, 0})};
        s.canonical = from_ints({-2, param - 2});
      }
      break;
    case SurfaceKind::K3:
      if (param <= 2) throw Error(ErrorCode::InvalidGenus, "K3 genus must be > 2, got " + std::to_string(param));
      s.index = param;
      s.rho = 1;
      s.generator_names = {"H"};
      s.gram = {from_ints({2L * param - 2})};
      s.canonical = from_ints({0});
      s.genus = param;
      break;
  }
  return s;
}

SurfaceModel p2() { return surface_model(SurfaceKind::P2); }
SurfaceModel p1xp1() { return surface_model(SurfaceKind::F, 0); }
SurfaceModel hirzebruch(int i) { return surface_model(SurfaceKind::F, i); }
SurfaceModel k3(int g) { return surface_model(SurfaceKind::K3, g); }

SurfaceModel surface_from_name(const std::string& raw, int genus) {
  std::string name;
  for (char c : raw) name += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (name == "p2") return p2();
  if (name == "p1xp1" || name == "f0") return p1xp1();
  if (name == "k3") return k3(genus);
  if (name.size() > 1 && name[0] == 'f') {
    std::string rest = name.substr(1);
    bool digits = !rest.empty() && rest.size() < 6;
    for (char c : rest) digits = digits && std::isdigit(static_cast<unsigned char>(c));
    if (digits) return hirzebruch(std::stoi(rest));
  }
  throw Error(ErrorCode::InvalidInput, "unknown surface '" + raw + "' (expected p2, p1xp1, f<i>, k3)");
}

std::string SpaceId::name() const {
  switch (kind) {
    case SpaceKind::Surface: return "Surface";
    case SpaceKind::Hilb: return "Hilb(" + std::to_string(n) + ")";
    case SpaceKind::Nested: return "Nested(" + std::to_string(n) + ")";
    case SpaceKind::Univ: return "Univ(" + std::to_string(n) + ")";
  }
  return "?";
}

std::string Space::name() const { return id.name() + " over " + surface.name(); }

Space make_space(SpaceKind kind, int n, const SurfaceModel& s) {
  switch (kind) {
    case SpaceKind::Surface: n = 0; break;
    case SpaceKind::Hilb:
      if (n < 2) throw Error(ErrorCode::InvalidSpace, "Hilb requires n >= 2");
      break;
    case SpaceKind::Nested:
      if (n < 1) throw Error(ErrorCode::InvalidSpace, "Nested requires n >= 1");
      break;
    case SpaceKind::Univ:
      if (n < 2) throw Error(ErrorCode::InvalidSpace, "Univ requires n >= 2");
      break;
  }
  return Space{SpaceId{kind, n}, s};
}

Space surface_space(const SurfaceModel& s) { return make_space(SpaceKind::Surface, 0, s); }
Space hilb(int n, const SurfaceModel& s) { return make_space(SpaceKind::Hilb, n, s); }
Space nested(int n, const SurfaceModel& s) { return make_space(SpaceKind::Nested, n, s); }
Space univ(int n, const SurfaceModel& s) { return make_space(SpaceKind::Univ, n, s); }

int divisor_rank(const Space& sp) {
  int r = sp.rho();
  switch (sp.id.kind) {
    case SpaceKind::Surface: return r;
    case SpaceKind::Hilb: return r + 1;
    case SpaceKind::Nested: return 2 * r + 2;
    case SpaceKind::Univ: return 2 * r + 1;
  }
  return 0;
}

int curve_rank(const Space& sp) { return divisor_rank(sp); }

namespace {

// "H1" + "diff" -> "Hdiff1"; "F" + "b" -> "Fb"
std::string decorate(const std::string& gen, const std::string& tag) {
  size_t k = gen.size();
  while (k > 0 && std::isdigit(static_cast<unsigned char>(gen[k - 1]))) --k;
  return gen.substr(0, k) + tag + gen.substr(k);
}

std::string tex_decorate(const std::string& gen, const std::string& sup) {
  size_t k = gen.size();
  while (k > 0 && std::isdigit(static_cast<unsigned char>(gen[k - 1]))) --k;
  std::string sub = gen.substr(k);
  return gen.substr(0, k) + "^{" + sup + "}" + (sub.empty() ? "" : "_{" + sub + "}");
}

std::string suffix(const Space& sp, size_t i) {
  return sp.rho() == 1 ? "1" : std::to_string(i + 1);
}

void expect(const Space& sp, std::initializer_list<SpaceKind> kinds, const char* what) {
  for (auto k : kinds)
    if (sp.id.kind == k) return;
  throw Error(ErrorCode::SpaceMismatch, std::string(what) + " not defined on " + sp.name());
}

}  // namespace

std::vector<BasisElement> divisor_basis(const Space& sp) {
  std::vector<BasisElement> b;
  const auto& g = sp.surface.generator_names;
  switch (sp.id.kind) {
    case SpaceKind::Surface:
      for (const auto& x : g) b.push_back({x, x});
      break;
    case SpaceKind::Hilb:
      for (const auto& x : g) b.push_back({x, x + "[n]"});
      b.push_back({"B/2", "\\frac{1}{2}B"});
      break;
    case SpaceKind::Nested:
      for (const auto& x : g) b.push_back({decorate(x, "diff"), tex_decorate(x, "\\mathrm{diff}")});
      for (const auto& x : g) b.push_back({decorate(x, "b"), tex_decorate(x, "b")});
      b.push_back({"Bdiff/2", "\\frac{1}{2}B^{\\mathrm{diff}}"});
      b.push_back({"Bb/2", "\\frac{1}{2}B^{b}"});
      break;
    case SpaceKind::Univ:
      for (const auto& x : g) b.push_back({decorate(x, "diff"), tex_decorate(x, "\\mathrm{diff}")});
      for (const auto& x : g) b.push_back({decorate(x, "b"), tex_decorate(x, "b")});
      b.push_back({"B/2", "\\frac{1}{2}B"});
      break;
  }
  return b;
}

std::vector<BasisElement> curve_basis(const Space& sp) {
  std::vector<BasisElement> b;
  int r = sp.rho();
  switch (sp.id.kind) {
    case SpaceKind::Surface:
      for (const auto& x : sp.surface.generator_names) {
        std::string l = x;
        l[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(l[0])));
        b.push_back({l, l});
      }
      break;
    case SpaceKind::Hilb:
      for (int i = 0; i < r; ++i) b.push_back({"C" + suffix(sp, i), "C_{" + suffix(sp, i) + "}"});
      b.push_back({"A", "A"});
      break;
    case SpaceKind::Nested:
    case SpaceKind::Univ:
      for (int i = 0; i < r; ++i) b.push_back({"Ca" + suffix(sp, i), "C^{a}_{" + suffix(sp, i) + "}"});
      for (int i = 0; i < r; ++i) b.push_back({"Cb" + suffix(sp, i), "C^{b}_{" + suffix(sp, i) + "}"});
      b.push_back({"Aa", "A^{a}"});
      if (sp.id.kind == SpaceKind::Nested) b.push_back({"Ab", "A^{b}"});
      break;
  }
  return b;
}

DivClass div_zero(const Space& sp) { return {sp, zeros(divisor_rank(sp))}; }
CurClass cur_zero(const Space& sp) { return {sp, zeros(curve_rank(sp))}; }
DivClass div_basis(const Space& sp, size_t i) { return {sp, unit(divisor_rank(sp), i)}; }
CurClass cur_basis(const Space& sp, size_t i) { return {sp, unit(curve_rank(sp), i)}; }

namespace {
template <class C>
void same_space(const C& a, const C& b) {
  if (a.space != b.space)
    throw Error(ErrorCode::SpaceMismatch, a.space.name() + " vs " + b.space.name());
}
}  // namespace

DivClass operator+(const DivClass& a, const DivClass& b) { same_space(a, b); return {a.space, add(a.coords, b.coords)}; }
DivClass operator-(const DivClass& a, const DivClass& b) { same_space(a, b); return {a.space, sub(a.coords, b.coords)}; }
DivClass operator*(const Rat& s, const DivClass& a) { return {a.space, scale(s, a.coords)}; }
CurClass operator+(const CurClass& a, const CurClass& b) { same_space(a, b); return {a.space, add(a.coords, b.coords)}; }
CurClass operator-(const CurClass& a, const CurClass& b) { same_space(a, b); return {a.space, sub(a.coords, b.coords)}; }
CurClass operator*(const Rat& s, const CurClass& a) { return {a.space, scale(s, a.coords)}; }
bool operator==(const DivClass& a, const DivClass& b) { return a.space == b.space && a.coords == b.coords; }
bool operator==(const CurClass& a, const CurClass& b) { return a.space == b.space && a.coords == b.coords; }

DivClass H(const Space& sp, size_t i) {
  expect(sp, {SpaceKind::Surface, SpaceKind::Hilb}, "H_i");
  return div_basis(sp, i);
}
DivClass Hdiff(const Space& sp, size_t i) {
  expect(sp, {SpaceKind::Nested, SpaceKind::Univ}, "Hdiff");
  return div_basis(sp, i);
}
DivClass Hb(const Space& sp, size_t i) {
  expect(sp, {SpaceKind::Nested, SpaceKind::Univ}, "Hb");
  return div_basis(sp, sp.rho() + i);
}
DivClass half_B(const Space& sp) {
  expect(sp, {SpaceKind::Hilb, SpaceKind::Univ}, "B/2");
  return div_basis(sp, divisor_rank(sp) - 1);
}
DivClass half_Bdiff(const Space& sp) {
  expect(sp, {SpaceKind::Nested}, "Bdiff/2");
  return div_basis(sp, 2 * sp.rho());
}
DivClass half_Bb(const Space& sp) {
  expect(sp, {SpaceKind::Nested}, "Bb/2");
  return div_basis(sp, 2 * sp.rho() + 1);
}

namespace {
void need_source(const DivClass& d, SpaceKind kind, int n, const Space& target) {
  if (!(d.space.surface == target.surface) || d.space.id.kind != kind || d.space.id.n != n)
    throw Error(ErrorCode::SpaceMismatch,
                "pullback from " + d.space.name() + " to " + target.name() + " expects source " +
                    SpaceId{kind, n}.name());
}
}  // namespace

DivClass pull_a(const DivClass& d, const Space& target) {
  int r = target.rho();
  DivClass out = div_zero(target);
  if (target.id.kind == SpaceKind::Nested) {
    need_source(d, SpaceKind::Hilb, target.id.n + 1, target);
    for (int i = 0; i < r; ++i) {
      out.coords[i] += d.coords[i];
      out.coords[r + i] += d.coords[i];
    }
    out.coords[2 * r] += d.coords[r];
    out.coords[2 * r + 1] += d.coords[r];
    return out;
  }
  if (target.id.kind == SpaceKind::Univ) {
    need_source(d, SpaceKind::Hilb, target.id.n, target);
    for (int i = 0; i < r; ++i) {
      out.coords[i] += d.coords[i];
      out.coords[r + i] += d.coords[i];
    }
    out.coords[2 * r] += d.coords[r];
    return out;
  }
  throw Error(ErrorCode::SpaceMismatch, "pull_a targets Nested or Univ, got " + target.name());
}

DivClass pull_b(const DivClass& d, const Space& target) {
  int r = target.rho();
  DivClass out = div_zero(target);
  if (target.id.kind == SpaceKind::Nested) {
    if (target.id.n == 1) {
      // X^[1] = X: no B part
      need_source(d, SpaceKind::Surface, 0, target);
      for (int i = 0; i < r; ++i) out.coords[r + i] += d.coords[i];
      return out;
    }
    need_source(d, SpaceKind::Hilb, target.id.n, target);
    for (int i = 0; i < r; ++i) out.coords[r + i] += d.coords[i];
    out.coords[2 * r + 1] += d.coords[r];
    return out;
  }
  if (target.id.kind == SpaceKind::Univ) {
    need_source(d, SpaceKind::Surface, 0, target);
    for (int i = 0; i < r; ++i) out.coords[r + i] += d.coords[i];
    return out;
  }
  throw Error(ErrorCode::SpaceMismatch, "pull_b targets Nested or Univ, got " + target.name());
}

DivClass pull_res(const DivClass& d, const Space& target) {
  if (target.id.kind != SpaceKind::Nested && target.id.kind != SpaceKind::Univ)
    throw Error(ErrorCode::SpaceMismatch, "pull_res targets Nested or Univ, got " + target.name());
  need_source(d, SpaceKind::Surface, 0, target);
  DivClass out = div_zero(target);
  for (int i = 0; i < target.rho(); ++i) out.coords[i] += d.coords[i];
  return out;
}

DivClass tautological(const Space& sp, const Vec& m) {
  expect(sp, {SpaceKind::Hilb}, "tautological");
  if (static_cast<int>(m.size()) != sp.rho())
    throw Error(ErrorCode::DimensionMismatch, "tautological needs " + std::to_string(sp.rho()) + " coefficients");
  DivClass d = div_zero(sp);
  for (int i = 0; i < sp.rho(); ++i) d.coords[i] = m[i];
  d.coords[sp.rho()] = -1;
  return d;
}

DivClass taut_a(const Space& sp, const Vec& m) {
  expect(sp, {SpaceKind::Nested, SpaceKind::Univ}, "D^a");
  int src = sp.id.kind == SpaceKind::Nested ? sp.id.n + 1 : sp.id.n;
  return pull_a(tautological(hilb(src, sp.surface), m), sp);
}

DivClass taut_b(const Space& sp, const Vec& m) {
  expect(sp, {SpaceKind::Nested}, "D^b");
  return pull_b(tautological(hilb(sp.id.n, sp.surface), m), sp);
}

DivClass canonical_class(const Space& sp) {
  expect(sp, {SpaceKind::Nested}, "canonical_class");
  // K = pr_b^* K_{X^[n]} + res^* K_X + E, with K_{X^[n]} = K_X[n] (no B part) and E = Bdiff/2.
  // written out directly so n = 1 (where X^[1] = X) needs no special case
  int r = sp.rho();
  DivClass k = half_Bdiff(sp);
  for (int i = 0; i < r; ++i) {
    k.coords[i] += sp.surface.canonical[i];
    k.coords[r + i] += sp.surface.canonical[i];
  }
  return k;
}

Rat k3_slope(const SurfaceModel& s, int m) {
  if (s.kind != SurfaceKind::K3) throw Error(ErrorCode::NotK3, "f(m) needs a K3 surface");
  int g = s.index;
  return ratio(m - 1 + g, 2 * g - 2);
}

}  // namespace nestcone
