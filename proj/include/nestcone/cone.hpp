#pragma once
#include <memory>
#include <mutex>
#include <string>

#include "nestcone/rat.hpp"

namespace nestcone {

// generators of {y : a . y >= 0 for every row a}
struct VRep {
  Mat rays;       // pointed part, primitive, sorted
  Mat lineality;  // basis of the lineality space, primitive, sorted
};
VRep double_description(const Mat& inequalities, size_t dim);

class Cone {
 public:
  Cone(size_t dim, Mat rays);  // normalizes and dedups; no extremal reduction

  size_t dim() const { return dim_; }
  const Mat& rays() const { return rays_; }

  // outer description: x in cone iff f.x >= 0 for all facets and e.x = 0 for all equalities
  const Mat& facets() const;
  const Mat& equalities() const;

  bool is_pointed() const;
  bool is_full_dimensional() const;

 private:
  struct Cache {
    std::once_flag once;
    VRep dual;  // generators of the dual cone
    Mat lineality;
  };
  void ensure() const;

  size_t dim_;
  Mat rays_;
  std::shared_ptr<Cache> cache_;
};

Cone cone_from_rays(size_t dim, const Mat& rays);
Cone dual(const Cone& c);
Cone extremal_rays(const Cone& c);

enum class Position { Outside, Boundary, Interior };
const char* position_name(Position p);
Position position(const Cone& c, const Vec& v);
bool contains_point(const Cone& c, const Vec& v);

bool cone_contains(const Cone& big, const Cone& small);
bool cone_equal(const Cone& a, const Cone& b);

struct Polytope {
  Mat vertices;  // exact, one per extremal ray, lexicographically sorted
  Mat source_rays;  // the primitive extremal ray behind each vertex
  std::vector<std::pair<size_t, size_t>> edges;
};

struct Normalization {
  bool coord_sum = true;
  Vec functional;  // used when coord_sum is false
  static Normalization CoordSum() { return {}; }
  static Normalization Given(Vec f) { return {false, std::move(f)}; }
};

Polytope cross_section(const Cone& c, const Normalization& norm);

}  // namespace nestcone
