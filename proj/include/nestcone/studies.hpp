#pragma once
#include <string>
#include <vector>

#include "nestcone/cone.hpp"
#include "nestcone/spaces.hpp"

namespace nestcone {

// ---- projective normality on F_i[2,1] ----

struct ButlerInput {
  int i = 1;  // Hirzebruch index; 0 is P1xP1
  long a = 1, b = 1;  // A = aH + bF
  int n = 4;
  int k_min = 1, k_max = 1;
  bool swap_factors = false;  // add pull_res(L) per step instead of pull_b(L)
};

void validate(const ButlerInput& in);

Space butler_space(const ButlerInput& in);  // Univ(2) over F_i
// Nef(F_i[2,1]) rays in the order H^b, F^b, H^diff, F^diff, D^a_{1,1}
std::vector<DivClass> butler_nef_rays(const Space& sp);
DivClass butler_class(const ButlerInput& in, int k);
// coordinates of a class on the five nef rays
Vec butler_coefficients(const DivClass& d);

struct ButlerRow {
  int k;
  DivClass cls;
  Vec coefficients;
  Position position;
};
struct ButlerReport {
  ButlerInput input;
  bool claimed;  // n >= 4: every row should be Interior
  std::vector<ButlerRow> rows;
  bool ok() const;
};
ButlerReport butler_check(const ButlerInput& in);

// (H+F)^b + (H+F)^diff - D^a_{1,1} - B^a/2 on F_i[2,1]; zero when the expansion holds
DivClass half_Ba_residual(int i);

// ---- asymptotic effective cones of P2[n+1,n] ----

// frame (H1, H2, B1, B2) = (Hdiff, Hb, Bdiff, Bb)
long a_k(int k);        // binom(k+2,2) - 1
long a_prime_k(int k);  // binom(k+2,2)
std::vector<Vec> asymptotic_moving_curves(int k);
// the two k-dependent facet normals H1 - c B1 and H2 - c' B2
std::pair<Vec, Vec> asymptotic_normals(int k);
Cone asymptotic_cone(int k);  // E_k
Cone asymptotic_limit_cone();

struct AsymptoticRow {
  int k;
  long ak, apk;
  Rat dev1, dev2;
  bool nested_next;  // E_{k+1} inside E_k
  Rat distance;      // max-coordinate Hausdorff distance of cross-section vertices to the limit square
  bool within_bound;
};
struct AsymptoticReport {
  int k_max;
  std::vector<AsymptoticRow> rows;
  bool deviations_exact;
  bool deviations_decreasing;
  bool limit_is_orthant;
  bool ok() const;
};
AsymptoticReport asymptotic_report(int k_max);

}  // namespace nestcone
