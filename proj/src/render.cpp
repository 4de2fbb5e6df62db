#include "nestcone/render.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "nestcone/error.hpp"
#include "nestcone/pairing.hpp"

namespace nestcone {

namespace {

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '&') out += "&amp;";
    else if (c == '"') out += "&quot;";
    else out += c;
  }
  return out;
}

constexpr double kBox = 400.0;
constexpr double kMargin = 40.0;

}  // namespace

Figure make_figure(std::string title, Polytope section, const std::vector<RayLabel>& labels,
                   std::vector<std::string> basis) {
  Figure f{std::move(title), std::move(section), {}, {}, std::move(basis)};
  for (size_t v = 0; v < f.section.vertices.size(); ++v) {
    Vec dir = primitive(f.section.source_rays[v]);
    std::string l = "v" + std::to_string(v), t = l;
    for (const auto& rl : labels)
      if (!is_zero(rl.ray) && primitive(rl.ray) == dir) {
        l = rl.label;
        t = rl.tex;
        break;
      }
    f.labels.push_back(l);
    f.tex_labels.push_back(t);
  }
  return f;
}

std::vector<std::pair<double, double>> layout(const Polytope& p) {
  size_t m = p.vertices.size();
  std::vector<std::pair<double, double>> out(m, {kBox / 2, kBox / 2});
  if (m == 0) return out;
  size_t d = p.vertices[0].size();
  std::vector<std::vector<double>> v(m, std::vector<double>(d));
  std::vector<double> c(d, 0.0);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < d; ++j) {
      v[i][j] = p.vertices[i][j].get_d();
      c[j] += v[i][j] / m;
    }
  // orthonormal basis of the affine hull, Gram-Schmidt in vertex order
  std::vector<std::vector<double>> basis;
  for (size_t i = 0; i < m && basis.size() < 3; ++i) {
    std::vector<double> w(d);
    for (size_t j = 0; j < d; ++j) w[j] = v[i][j] - c[j];
    for (const auto& b : basis) {
      double t = 0;
      for (size_t j = 0; j < d; ++j) t += w[j] * b[j];
      for (size_t j = 0; j < d; ++j) w[j] -= t * b[j];
    }
    double norm = 0;
    for (double x : w) norm += x * x;
    norm = std::sqrt(norm);
    if (norm < 1e-9) continue;
    for (double& x : w) x /= norm;
    basis.push_back(w);
  }
  std::vector<std::pair<double, double>> xy(m, {0.0, 0.0});
  for (size_t i = 0; i < m; ++i) {
    double q[3] = {0, 0, 0};
    for (size_t b = 0; b < basis.size(); ++b)
      for (size_t j = 0; j < d; ++j) q[b] += (v[i][j] - c[j]) * basis[b][j];
    // oblique: third axis drawn at 30 degrees, half length
    xy[i] = {q[0] + 0.5 * 0.8660254037844386 * q[2], q[1] + 0.5 * 0.5 * q[2]};
  }
  double lo_x = xy[0].first, hi_x = lo_x, lo_y = xy[0].second, hi_y = lo_y;
  for (auto [x, y] : xy) {
    lo_x = std::min(lo_x, x);
    hi_x = std::max(hi_x, x);
    lo_y = std::min(lo_y, y);
    hi_y = std::max(hi_y, y);
  }
  double span = std::max(hi_x - lo_x, hi_y - lo_y);
  double s = span > 1e-12 ? (kBox - 2 * kMargin) / span : 1.0;
  for (size_t i = 0; i < m; ++i) {
    double x = (xy[i].first - (lo_x + hi_x) / 2) * s + kBox / 2;
    double y = kBox / 2 - (xy[i].second - (lo_y + hi_y) / 2) * s;
    out[i] = {x, y};
  }
  return out;
}

std::string render_svg(const Figure& f) {
  auto xy = layout(f.section);
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"400\" viewBox=\"0 0 400 400\">\n";
  os << "<title>" << xml_escape(f.title) << "</title>\n";
  os << "<g stroke=\"black\" stroke-width=\"1.5\">\n";
  for (auto [a, b] : f.section.edges)
    os << "<line x1=\"" << fmt(xy[a].first) << "\" y1=\"" << fmt(xy[a].second) << "\" x2=\"" << fmt(xy[b].first)
       << "\" y2=\"" << fmt(xy[b].second) << "\"/>\n";
  os << "</g>\n<g fill=\"black\" font-family=\"serif\" font-size=\"14\">\n";
  for (size_t i = 0; i < xy.size(); ++i) {
    os << "<circle cx=\"" << fmt(xy[i].first) << "\" cy=\"" << fmt(xy[i].second) << "\" r=\"3\"/>\n";
    os << "<text x=\"" << fmt(xy[i].first + 6) << "\" y=\"" << fmt(xy[i].second - 6) << "\">"
       << xml_escape(f.labels[i]) << "</text>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

std::string render_tikz(const Figure& f) {
  auto xy = layout(f.section);
  std::ostringstream os;
  os << "% " << f.title << "\n\\begin{tikzpicture}\n";
  // 80 px per cm, y axis flipped back
  for (size_t i = 0; i < xy.size(); ++i)
    os << "\\coordinate (v" << i << ") at (" << fmt(xy[i].first / 80) << "," << fmt((kBox - xy[i].second) / 80)
       << ");\n";
  for (auto [a, b] : f.section.edges) os << "\\draw (v" << a << ") -- (v" << b << ");\n";
  for (size_t i = 0; i < xy.size(); ++i) {
    os << "\\fill (v" << i << ") circle (1.5pt);\n";
    os << "\\node[above right] at (v" << i << ") {$" << f.tex_labels[i] << "$};\n";
  }
  os << "\\end{tikzpicture}\n";
  return os.str();
}

std::string render_csv(const Figure& f) {
  std::ostringstream os;
  os << "kind,i,j,label";
  for (const auto& b : f.basis) os << ',' << b;
  os << '\n';
  for (size_t i = 0; i < f.section.vertices.size(); ++i) {
    os << "vertex," << i << ",," << f.labels[i];
    for (const auto& x : f.section.vertices[i]) os << ',' << to_string(x);
    os << '\n';
  }
  for (auto [a, b] : f.section.edges) {
    os << "edge," << a << ',' << b << ',';
    for (size_t k = 0; k < f.basis.size(); ++k) os << ',';
    os << '\n';
  }
  return os.str();
}

}  // namespace nestcone

namespace nestcone {

Figure table_figure(const std::string& id, const TableParams& p, SectionNorm mode) {
  const TableSpec& t = find_table(id);
  if (t.kind != TableKind::Nef && t.kind != TableKind::Eff)
    throw Error(ErrorCode::InvalidInput, id + " has no single cone to section");
  Space sp = table_space(t, p);
  auto rays = table_rays(t, sp);
  Cone c = cone_of(rays, sp);
  Vec wsum = zeros(divisor_rank(sp));
  for (const auto& w : table_curves(t, sp)) wsum = add(wsum, functional(w.cls));
  bool sums_positive = true;
  for (const auto& r : c.rays()) {
    Rat s = 0;
    for (const auto& x : r) s += x;
    sums_positive = sums_positive && sgn(s) > 0;
  }
  Normalization norm = Normalization::CoordSum();
  if (mode == SectionNorm::Witness || (mode == SectionNorm::Auto && !sums_positive)) norm = Normalization::Given(wsum);
  std::vector<RayLabel> labels;
  for (size_t j = 0; j < rays.size(); ++j) labels.push_back({rays[j].cls.coords, t.cols[j].label, t.cols[j].tex});
  std::vector<std::string> basis;
  for (const auto& b : divisor_basis(sp)) basis.push_back(b.label);
  return make_figure(t.title + " on " + sp.name(), cross_section(c, norm), labels, basis);
}

}  // namespace nestcone
