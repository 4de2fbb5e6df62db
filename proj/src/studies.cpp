#include "nestcone/studies.hpp"

#include "nestcone/error.hpp"
#include "nestcone/linalg.hpp"

namespace nestcone {

void validate(const ButlerInput& in) {
  if (in.i < 0) throw Error(ErrorCode::InvalidInput, "Hirzebruch index must be >= 0");
  // A.F = a and A.E = b on F_i, so ampleness is a > 0 and b > 0
  if (in.a < 1 || in.b < 1) throw Error(ErrorCode::InvalidInput, "A = aH + bF is ample only for a >= 1 and b >= 1");
  if (in.n < 1) throw Error(ErrorCode::InvalidInput, "n must be >= 1");
  if (in.k_min < 1 || in.k_max < in.k_min) throw Error(ErrorCode::InvalidInput, "k range must satisfy 1 <= kmin <= kmax");
}

Space butler_space(const ButlerInput& in) { return univ(2, hirzebruch(in.i)); }

std::vector<DivClass> butler_nef_rays(const Space& sp) {
  return {Hb(sp, 0), Hb(sp, 1), Hdiff(sp, 0), Hdiff(sp, 1), taut_a(sp, from_ints({1, 1}))};
}

namespace {
DivClass L_class(const ButlerInput& in) {
  Space s = surface_space(hirzebruch(in.i));
  DivClass L = div_zero(s);
  L.coords = {Rat(in.n * in.a), Rat(in.n * in.b)};
  return L;
}
}  // namespace

DivClass butler_class(const ButlerInput& in, int k) {
  validate(in);
  if (k < 1) throw Error(ErrorCode::InvalidInput, "k must be >= 1");
  Space sp = butler_space(in);
  auto rays = butler_nef_rays(sp);
  Rat na(in.n * in.a), nb(in.n * in.b);
  DivClass d = (na - 2) * rays[0] + (nb - 2) * rays[1] + (na - 2) * rays[2] + (nb - 2) * rays[3] + Rat(2) * rays[4];
  DivClass step = in.swap_factors ? pull_res(L_class(in), sp) : pull_b(L_class(in), sp);
  for (int j = 1; j < k; ++j) d = d + step;
  return d;
}

Vec butler_coefficients(const DivClass& d) {
  auto rays = butler_nef_rays(d.space);
  Mat a(d.coords.size(), Vec(rays.size()));
  for (size_t j = 0; j < rays.size(); ++j)
    for (size_t r = 0; r < d.coords.size(); ++r) a[r][j] = rays[j].coords[r];
  auto s = solve(a, d.coords, rays.size());
  if (s.status != SolveStatus::Unique) throw Error(ErrorCode::Inconsistent, "class is not in the span of the nef rays");
  return s.x;
}

bool ButlerReport::ok() const {
  if (!claimed) return true;
  for (const auto& r : rows)
    if (r.position != Position::Interior) return false;
  return true;
}

ButlerReport butler_check(const ButlerInput& in) {
  validate(in);
  ButlerReport rep{in, in.n >= 4, {}};
  Space sp = butler_space(in);
  Mat m;
  for (const auto& r : butler_nef_rays(sp)) m.push_back(r.coords);
  Cone nef(divisor_rank(sp), m);
  for (int k = in.k_min; k <= in.k_max; ++k) {
    DivClass d = butler_class(in, k);
    rep.rows.push_back({k, d, butler_coefficients(d), position(nef, d.coords)});
  }
  return rep;
}

DivClass half_Ba_residual(int i) {
  Space sp = univ(2, hirzebruch(i));
  DivClass hf_b = Hb(sp, 0) + Hb(sp, 1), hf_d = Hdiff(sp, 0) + Hdiff(sp, 1);
  return hf_b + hf_d - taut_a(sp, from_ints({1, 1})) - half_B(sp);
}

long a_prime_k(int k) { return static_cast<long>(k + 2) * (k + 1) / 2; }
long a_k(int k) { return a_prime_k(k) - 1; }

std::pair<Vec, Vec> asymptotic_normals(int k) {
  if (k < 1) throw Error(ErrorCode::RangeError, "k must be >= 1");
  Rat c(k, 2 * a_k(k)), cp(k, 2 * (a_prime_k(k) - 1));
  c.canonicalize();
  cp.canonicalize();
  return {Vec{1, 0, -c, 0}, Vec{0, 1, 0, -cp}};
}

std::vector<Vec> asymptotic_moving_curves(int k) {
  if (k < 1) throw Error(ErrorCode::RangeError, "k must be >= 1");
  Rat c(k, 2 * a_k(k)), cp(k, 2 * (a_prime_k(k) - 1));
  c.canonicalize();
  cp.canonicalize();
  return {Vec{1, 0, 0, 0}, Vec{0, 1, 0, 0}, Vec{c, 0, 1, 0}, Vec{0, cp, 0, 1}};
}

Cone asymptotic_cone(int k) { return dual(Cone(4, asymptotic_moving_curves(k))); }

Cone asymptotic_limit_cone() {
  return Cone(4, {from_ints({1, 0, 0, 0}), from_ints({0, 1, 0, 0}), from_ints({0, 0, 1, 0}), from_ints({0, 0, 0, 1})});
}

namespace {
Rat max_dist(const Vec& a, const Vec& b) {
  Rat m = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    Rat d = abs(a[i] - b[i]);
    if (d > m) m = d;
  }
  return m;
}

Rat hausdorff(const Mat& x, const Mat& y) {
  auto one_side = [](const Mat& p, const Mat& q) {
    Rat worst = 0;
    for (const auto& v : p) {
      Rat best = max_dist(v, q.front());
      for (const auto& w : q) best = std::min(best, max_dist(v, w));
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(one_side(x, y), one_side(y, x));
}
}  // namespace

bool AsymptoticReport::ok() const {
  if (!deviations_exact || !deviations_decreasing || !limit_is_orthant) return false;
  for (const auto& r : rows)
    if (!r.nested_next || !r.within_bound) return false;
  return true;
}

AsymptoticReport asymptotic_report(int k_max) {
  if (k_max < 2) throw Error(ErrorCode::RangeError, "k_max must be >= 2");
  AsymptoticReport rep{k_max, {}, true, true, false};
  Polytope limit = cross_section(asymptotic_limit_cone(), Normalization::CoordSum());
  // the k-dependent normals tend to H1 and H2, so the limit functionals are the coordinate ones
  Mat limit_functionals;
  for (const auto& f : asymptotic_moving_curves(1)) {
    Vec g = f;
    if (g[2] == 1) g[0] = 0;
    if (g[3] == 1) g[1] = 0;
    limit_functionals.push_back(g);
  }
  rep.limit_is_orthant = cone_equal(dual(Cone(4, limit_functionals)), asymptotic_limit_cone());
  Cone cur = asymptotic_cone(2);
  Rat prev1 = -1, prev2 = -1;
  for (int k = 2; k <= k_max; ++k) {
    Cone next = asymptotic_cone(k + 1);
    AsymptoticRow row;
    row.k = k;
    row.ak = a_k(k);
    row.apk = a_prime_k(k);
    auto [n1, n2] = asymptotic_normals(k);
    row.dev1 = -n1[2];
    row.dev2 = -n2[3];
    Rat want1(k, 2 * row.ak), want2(k, 2 * (row.apk - 1));
    want1.canonicalize();
    want2.canonicalize();
    if (row.dev1 != want1 || row.dev2 != want2) rep.deviations_exact = false;
    if (prev1 >= 0 && (row.dev1 >= prev1 || row.dev2 >= prev2)) rep.deviations_decreasing = false;
    prev1 = row.dev1;
    prev2 = row.dev2;
    row.nested_next = cone_contains(cur, next);
    Polytope p = cross_section(cur, Normalization::CoordSum());
    row.distance = hausdorff(p.vertices, limit.vertices);
    row.within_bound = row.distance <= ratio(1, k);
    rep.rows.push_back(row);
    cur = next;
  }
  return rep;
}

}  // namespace nestcone
