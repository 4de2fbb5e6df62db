#include "nestcone/cone.hpp"

#include <algorithm>
#include <optional>

#include "nestcone/error.hpp"
#include "nestcone/linalg.hpp"

namespace nestcone {

namespace {

void sort_unique(Mat& m) {
  std::sort(m.begin(), m.end(), lex_less);
  m.erase(std::unique(m.begin(), m.end()), m.end());
}

}  // namespace

VRep double_description(const Mat& inequalities, size_t dim) {
  Mat lin;
  for (size_t i = 0; i < dim; ++i) lin.push_back(unit(dim, i));
  // each ray carries its zero set: z[k] is set when seen[k] . ray == 0
  struct Gen {
    Vec v;
    std::vector<char> z;
  };
  std::vector<Gen> rays;
  Mat seen;  // constraints processed so far

  for (const auto& a : inequalities) {
    if (a.size() != dim) throw Error(ErrorCode::DimensionMismatch, "inequality length");
    if (is_zero(a)) continue;
    seen.push_back(a);

    auto it = std::find_if(lin.begin(), lin.end(), [&](const Vec& l) { return sgn(dot(a, l)) != 0; });
    if (it != lin.end()) {
      Vec l0 = *it;
      lin.erase(it);
      Rat al0 = dot(a, l0);
      if (sgn(al0) < 0) {
        l0 = scale(-1, l0);
        al0 = -al0;
      }
      // move everything else into ker(a) along the line l0; earlier constraints vanish on l0
      for (auto& l : lin) l = sub(l, scale(dot(a, l) / al0, l0));
      for (auto& r : rays) {
        r.v = sub(r.v, scale(dot(a, r.v) / al0, l0));
        r.z.push_back(1);
      }
      std::vector<char> z(seen.size() - 1, 1);
      z.push_back(0);
      rays.push_back({l0, z});
      continue;
    }

    std::vector<Gen> pos, zero, neg;
    std::vector<Rat> apos, aneg;
    for (auto& r : rays) {
      Rat ar = dot(a, r.v);
      int s = sgn(ar);
      r.z.push_back(s == 0);
      if (s > 0) {
        pos.push_back(std::move(r));
        apos.push_back(ar);
      } else if (s < 0) {
        neg.push_back(std::move(r));
        aneg.push_back(ar);
      } else {
        zero.push_back(std::move(r));
      }
    }
    std::vector<Gen> next;
    if (!neg.empty() && !pos.empty()) {
      size_t np = seen.size() - 1;  // constraints before a
      Mat prev(seen.begin(), seen.end() - 1);
      size_t rk = rank(prev);
      size_t target = rk >= 2 ? rk - 2 : 0;
      std::vector<const std::vector<char>*> zall;
      for (const auto* g : {&pos, &neg, &zero})
        for (const auto& r : *g) zall.push_back(&r.z);
      std::vector<char> both(np);
      for (size_t i = 0; i < pos.size(); ++i)
        for (size_t j = 0; j < neg.size(); ++j) {
          size_t count = 0;
          for (size_t k = 0; k < np; ++k) count += (both[k] = pos[i].z[k] && neg[j].z[k]);
          if (count < target) continue;
          // a third ray tight on the same constraints means p and q are not adjacent
          bool covered = false;
          for (size_t m = 0; m < zall.size() && !covered; ++m) {
            if (m == i || m == pos.size() + j) continue;
            const auto& zm = *zall[m];
            bool sup = true;
            for (size_t k = 0; k < np && sup; ++k) sup = !both[k] || zm[k];
            covered = sup;
          }
          if (covered) continue;
          Mat tight;
          for (size_t k = 0; k < np; ++k)
            if (both[k]) tight.push_back(prev[k]);
          if (rank(tight) != target) continue;
          // (a.p) q - (a.q) p lies on a . y = 0
          Gen g{primitive(sub(scale(apos[i], neg[j].v), scale(aneg[j], pos[i].v))), both};
          g.z.push_back(1);
          next.push_back(std::move(g));
        }
    }
    for (auto* g : {&pos, &zero})
      for (auto& r : *g) next.push_back(std::move(r));
    for (auto& r : next) r.v = primitive(r.v);
    std::sort(next.begin(), next.end(), [](const Gen& x, const Gen& y) { return lex_less(x.v, y.v); });
    next.erase(std::unique(next.begin(), next.end(), [](const Gen& x, const Gen& y) { return x.v == y.v; }), next.end());
    rays = std::move(next);
  }

  VRep out;
  // lineality basis in reduced echelon form so the output is canonical
  if (!lin.empty()) {
    Mat w = lin;
    auto piv = rref(w);
    for (size_t k = 0; k < piv.size(); ++k) out.lineality.push_back(primitive(w[k]));
    sort_unique(out.lineality);
  }
  // rays are only defined modulo lineality: keep the representative orthogonal to it
  const Mat& L = out.lineality;
  std::optional<Mat> ginv;
  if (!L.empty()) {
    Mat gram(L.size(), Vec(L.size()));
    for (size_t i = 0; i < L.size(); ++i)
      for (size_t j = 0; j < L.size(); ++j) gram[i][j] = dot(L[i], L[j]);
    ginv = inverse(gram);
  }
  for (auto& g : rays) {
    Vec r = g.v;
    if (ginv) {
      Vec coef = mat_vec(*ginv, mat_vec(L, r));
      for (size_t i = 0; i < L.size(); ++i) r = sub(r, scale(coef[i], L[i]));
    }
    if (!is_zero(r)) out.rays.push_back(primitive(r));
  }
  sort_unique(out.rays);
  return out;
}

Cone::Cone(size_t dim, Mat rays) : dim_(dim), cache_(std::make_shared<Cache>()) {
  if (dim == 0) throw Error(ErrorCode::DimensionMismatch, "cone dimension must be positive");
  for (auto& r : rays) {
    if (r.size() != dim) throw Error(ErrorCode::DimensionMismatch, "ray length " + std::to_string(r.size()) + " != " + std::to_string(dim));
    if (!is_zero(r)) rays_.push_back(primitive(r));
  }
  sort_unique(rays_);
}

void Cone::ensure() const {
  std::call_once(cache_->once, [this] {
    cache_->dual = double_description(rays_, dim_);
    // lineality of the cone itself = vectors orthogonal to all of the dual
    Mat dual_gens = cache_->dual.rays;
    for (const auto& l : cache_->dual.lineality) dual_gens.push_back(l);
    Mat ns = nullspace(dual_gens, dim_);
    for (auto& v : ns) v = primitive(v);
    sort_unique(ns);
    cache_->lineality = ns;
  });
}

const Mat& Cone::facets() const {
  ensure();
  return cache_->dual.rays;
}

const Mat& Cone::equalities() const {
  ensure();
  return cache_->dual.lineality;
}

bool Cone::is_pointed() const {
  ensure();
  return cache_->lineality.empty();
}

bool Cone::is_full_dimensional() const { return equalities().empty(); }

Cone cone_from_rays(size_t dim, const Mat& rays) {
  if (rays.empty()) throw Error(ErrorCode::EmptyInput, "no rays given");
  Cone c(dim, rays);
  if (c.rays().empty()) throw Error(ErrorCode::EmptyInput, "all rays are zero");
  return c;
}

namespace {
Mat with_negatives(const VRep& v) {
  Mat g = v.rays;
  for (const auto& l : v.lineality) {
    g.push_back(l);
    g.push_back(scale(-1, l));
  }
  return g;
}
}  // namespace

Cone dual(const Cone& c) {
  VRep v{c.facets(), c.equalities()};
  Mat g = with_negatives(v);
  return Cone(c.dim(), g);  // empty g: the dual of the whole space is {0}
}

Cone extremal_rays(const Cone& c) {
  // generators of the dual of the dual are minimal
  Mat ineq = c.facets();
  for (const auto& e : c.equalities()) {
    ineq.push_back(e);
    ineq.push_back(scale(-1, e));
  }
  return Cone(c.dim(), with_negatives(double_description(ineq, c.dim())));
}

const char* position_name(Position p) {
  switch (p) {
    case Position::Outside: return "Outside";
    case Position::Boundary: return "Boundary";
    case Position::Interior: return "Interior";
  }
  return "?";
}

Position position(const Cone& c, const Vec& v) {
  if (v.size() != c.dim()) throw Error(ErrorCode::DimensionMismatch, "point length");
  for (const auto& e : c.equalities())
    if (sgn(dot(e, v)) != 0) return Position::Outside;
  bool strict = c.equalities().empty();
  for (const auto& f : c.facets()) {
    int s = sgn(dot(f, v));
    if (s < 0) return Position::Outside;
    if (s == 0) strict = false;
  }
  return strict ? Position::Interior : Position::Boundary;
}

bool contains_point(const Cone& c, const Vec& v) { return position(c, v) != Position::Outside; }

bool cone_contains(const Cone& big, const Cone& small) {
  if (big.dim() != small.dim()) throw Error(ErrorCode::DimensionMismatch, "cone dimensions differ");
  for (const auto& r : small.rays())
    if (!contains_point(big, r)) return false;
  return true;
}

bool cone_equal(const Cone& a, const Cone& b) { return cone_contains(a, b) && cone_contains(b, a); }

Polytope cross_section(const Cone& c, const Normalization& norm) {
  if (!c.is_pointed()) throw Error(ErrorCode::NotPointed, "cross sections need a pointed cone");
  Vec f = norm.coord_sum ? Vec(c.dim(), Rat(1)) : norm.functional;
  if (f.size() != c.dim()) throw Error(ErrorCode::DimensionMismatch, "normalizing functional length");
  Cone e = extremal_rays(c);

  std::vector<std::pair<Vec, Vec>> vs;  // (vertex, ray)
  for (const auto& r : e.rays()) {
    Rat fr = dot(f, r);
    if (sgn(fr) <= 0) throw Error(ErrorCode::FunctionalNotPositive, "normalizing functional is not positive on every extremal ray");
    vs.emplace_back(scale(1 / fr, r), r);
  }
  std::sort(vs.begin(), vs.end(), [](const auto& x, const auto& y) { return lex_less(x.first, y.first); });

  Polytope p;
  for (auto& [v, r] : vs) {
    p.vertices.push_back(v);
    p.source_rays.push_back(r);
  }
  if (p.vertices.size() < 2) return p;
  size_t target = c.dim() - 2;
  for (size_t i = 0; i < p.vertices.size(); ++i)
    for (size_t j = i + 1; j < p.vertices.size(); ++j) {
      Mat tight = c.equalities();
      for (const auto& fac : c.facets())
        if (sgn(dot(fac, p.source_rays[i])) == 0 && sgn(dot(fac, p.source_rays[j])) == 0) tight.push_back(fac);
      if (rank(tight) == target) p.edges.emplace_back(i, j);
    }
  return p;
}

}  // namespace nestcone
