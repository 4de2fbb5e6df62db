#pragma once
#include <optional>
#include <string>
#include <vector>

#include "nestcone/rat.hpp"

namespace nestcone {

enum class SurfaceKind { P2, F, K3 };  // P1xP1 is F with index 0

struct SurfaceModel {
  SurfaceKind kind = SurfaceKind::P2;
  int index = 0;  // Hirzebruch index i, or the K3 genus g
  int rho = 1;
  std::vector<std::string> generator_names;
  Mat gram;
  Vec canonical;
  std::optional<int> genus;

  std::string name() const;  // "P2", "P1xP1", "F2", "K3(g=3)"
  bool operator==(const SurfaceModel& o) const { return kind == o.kind && index == o.index; }
};

SurfaceModel surface_model(SurfaceKind kind, int param = 0);
SurfaceModel p2();
SurfaceModel p1xp1();
SurfaceModel hirzebruch(int i);
SurfaceModel k3(int g);
// "p2", "p1xp1", "f<i>", "k3" (genus separately)
SurfaceModel surface_from_name(const std::string& name, int genus = 0);

enum class SpaceKind { Surface, Hilb, Nested, Univ };

struct SpaceId {
  SpaceKind kind = SpaceKind::Surface;
  int n = 0;
  bool operator==(const SpaceId& o) const { return kind == o.kind && n == o.n; }
  std::string name() const;  // "Hilb(3)", "Nested(2)", ...
};

struct Space {
  SpaceId id;
  SurfaceModel surface;
  bool operator==(const Space& o) const { return id == o.id && surface == o.surface; }
  bool operator!=(const Space& o) const { return !(*this == o); }
  std::string name() const;
  int rho() const { return surface.rho; }
};

Space make_space(SpaceKind kind, int n, const SurfaceModel& s);
Space surface_space(const SurfaceModel& s);
Space hilb(int n, const SurfaceModel& s);
Space nested(int n, const SurfaceModel& s);
Space univ(int n, const SurfaceModel& s);

int divisor_rank(const Space& sp);
int curve_rank(const Space& sp);

struct BasisElement {
  std::string label;  // ASCII wire label, e.g. "Hdiff", "Bb/2"
  std::string tex;
};

std::vector<BasisElement> divisor_basis(const Space& sp);
std::vector<BasisElement> curve_basis(const Space& sp);

struct DivClass {
  Space space;
  Vec coords;
};

struct CurClass {
  Space space;
  Vec coords;
};

DivClass div_zero(const Space& sp);
CurClass cur_zero(const Space& sp);
DivClass div_basis(const Space& sp, size_t i);
CurClass cur_basis(const Space& sp, size_t i);
DivClass operator+(const DivClass& a, const DivClass& b);
DivClass operator-(const DivClass& a, const DivClass& b);
DivClass operator*(const Rat& s, const DivClass& a);
CurClass operator+(const CurClass& a, const CurClass& b);
CurClass operator-(const CurClass& a, const CurClass& b);
CurClass operator*(const Rat& s, const CurClass& a);
bool operator==(const DivClass& a, const DivClass& b);
bool operator==(const CurClass& a, const CurClass& b);

// named basis pieces; i indexes surface generators
DivClass H(const Space& sp, size_t i = 0);       // Hilb H_i, Surface generator
DivClass Hdiff(const Space& sp, size_t i = 0);
DivClass Hb(const Space& sp, size_t i = 0);
DivClass half_B(const Space& sp);                // Hilb or Univ B/2
DivClass half_Bdiff(const Space& sp);
DivClass half_Bb(const Space& sp);

// pullbacks; the source space fixes the map
DivClass pull_a(const DivClass& d, const Space& target);
DivClass pull_b(const DivClass& d, const Space& target);
DivClass pull_res(const DivClass& d, const Space& target);

// D_L[n] = sum m_i H_i[n] - B[n]/2
DivClass tautological(const Space& hilb_space, const Vec& m);
// pull_a / pull_b of tautological classes on the appropriate Hilbert schemes
DivClass taut_a(const Space& sp, const Vec& m);
DivClass taut_b(const Space& sp, const Vec& m);

DivClass canonical_class(const Space& nested_space);

// K3 extremal nef slope f(m) = (m-1+g)/(2g-2)
Rat k3_slope(const SurfaceModel& s, int m);

}  // namespace nestcone
