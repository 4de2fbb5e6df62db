#pragma once
#include <optional>
#include <utility>

#include "nestcone/spaces.hpp"

namespace nestcone {

struct PairingTable {
  Space space;
  Mat matrix;  // row = curve basis element, column = divisor basis element
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
};

PairingTable pairing_table(const Space& sp);
std::string pairing_table_csv(const PairingTable& t);

Rat pair(const DivClass& d, const CurClass& c);
// c viewed as a linear functional on divisor coordinates
Vec functional(const CurClass& c);
// d viewed as a linear functional on curve coordinates
Vec functional(const DivClass& d);

using Gamma = std::vector<long>;

CurClass curve_family_a(const Space& sp, const Gamma& gamma, int r);
CurClass curve_family_b(const Space& sp, const Gamma& gamma, int r);
// the uncorrected nested expansion sum m_i Cb_i - Aa - (r-1) Ab; kept for regression checks
CurClass curve_family_b_printed(const Space& sp, const Gamma& gamma, int r);

// effective-cone chart notation: r-1 fixed points of z' on c, everything else general
CurClass chart_curve_a(const Space& sp, const Gamma& gamma, int r);
CurClass chart_curve_b(const Space& sp, const Gamma& gamma, int r);

// C0 = C1 - A, Ca0 = Ca1 - Aa, Cb0 = Cb1 - Ab - Aa
CurClass derived_c0(const Space& sp);
CurClass derived_ca0(const Space& sp);
CurClass derived_cb0(const Space& sp);

// Hilb: (C_nodal, none); Nested/Univ: (Ca_nodal, Cb_nodal)
std::pair<CurClass, std::optional<CurClass>> nodal_curves_k3(const Space& sp);
// g^1_n fibres on a K3 Hilbert scheme; same class as C_nodal
CurClass g1n_curve(const Space& sp);

struct DivisorRow {
  DivClass divisor;
  Rat value;
};
CurClass class_from_pairings(const Space& sp, const std::vector<DivisorRow>& rows);

struct CurveRow {
  CurClass curve;
  Rat value;
};
DivClass divisor_from_pairings(const Space& sp, const std::vector<CurveRow>& rows);

// pushforwards of curve classes along pr_a and pr_b
CurClass pushforward_a(const CurClass& c);
CurClass pushforward_b(const CurClass& c);

}  // namespace nestcone
