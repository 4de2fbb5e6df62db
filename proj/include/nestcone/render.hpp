#pragma once
#include <string>
#include <vector>

#include "nestcone/cone.hpp"
#include "nestcone/verify.hpp"

namespace nestcone {

struct RayLabel {
  Vec ray;
  std::string label;  // ASCII
  std::string tex;
};

struct Figure {
  std::string title;
  Polytope section;
  std::vector<std::string> labels;      // one per vertex
  std::vector<std::string> tex_labels;  // one per vertex
  std::vector<std::string> basis;       // coordinate names for csv
};

// matches vertices to labels by ray direction; unmatched vertices get v<i>
Figure make_figure(std::string title, Polytope section, const std::vector<RayLabel>& labels,
                   std::vector<std::string> basis);

// planar layout in a 400x400 box; sections of dimension 3 use a fixed oblique projection
std::vector<std::pair<double, double>> layout(const Polytope& p);

enum class SectionNorm { Auto, CoordSum, Witness };

// Auto uses the coordinate sum when it is positive on every ray, else the sum of the witness curves
Figure table_figure(const std::string& id, const TableParams& p, SectionNorm norm = SectionNorm::Auto);

std::string render_svg(const Figure& f);
std::string render_tikz(const Figure& f);
std::string render_csv(const Figure& f);

}  // namespace nestcone
