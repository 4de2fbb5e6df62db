#include "nestcone/cli.hpp"

#include <unistd.h>

#include <CLI11.hpp>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "nestcone/error.hpp"
#include "nestcone/expr.hpp"
#include "nestcone/io.hpp"
#include "nestcone/render.hpp"
#include "nestcone/studies.hpp"
#include "nestcone/verify.hpp"

namespace nestcone {

namespace {

struct SpaceOpts {
  std::string surface = "p2";
  int genus = 3;
  std::string space = "hilb";
  int n = 2;
};

void add_space_opts(CLI::App* sc, SpaceOpts& o) {
  sc->add_option("--surface", o.surface, "p2, p1xp1, f<i> or k3")->capture_default_str();
  sc->add_option("--genus", o.genus, "K3 genus (Pic = ZH, H^2 = 2g-2)")->capture_default_str();
  sc->add_option("--space", o.space, "surface, hilb, nested or univ")->capture_default_str();
  sc->add_option("--n", o.n, "number of points")->capture_default_str();
}

Space build_space(const SpaceOpts& o) {
  SurfaceModel s = surface_from_name(o.surface, o.genus);
  if (o.space == "surface") return surface_space(s);
  if (o.space == "hilb") return hilb(o.n, s);
  if (o.space == "nested") return nested(o.n, s);
  if (o.space == "univ") return univ(o.n, s);
  throw Error(ErrorCode::InvalidSpace, "unknown space '" + o.space + "' (surface, hilb, nested, univ)");
}

struct Palette {
  bool on = false;
  std::string green(const std::string& s) const { return on ? "\x1b[32m" + s + "\x1b[0m" : s; }
  std::string red(const std::string& s) const { return on ? "\x1b[31m" + s + "\x1b[0m" : s; }
};

std::string grid(const std::vector<std::string>& rows, const std::vector<std::string>& cols,
                 const std::vector<std::vector<std::string>>& cells) {
  std::vector<size_t> w(cols.size() + 1, 0);
  for (const auto& r : rows) w[0] = std::max(w[0], r.size());
  for (size_t j = 0; j < cols.size(); ++j) {
    w[j + 1] = cols[j].size();
    for (const auto& row : cells) w[j + 1] = std::max(w[j + 1], row[j].size());
  }
  std::ostringstream os;
  auto pad = [](const std::string& s, size_t n) { return std::string(n - s.size(), ' ') + s; };
  os << std::string(w[0], ' ');
  for (size_t j = 0; j < cols.size(); ++j) os << "  " << pad(cols[j], w[j + 1]);
  os << '\n';
  for (size_t i = 0; i < rows.size(); ++i) {
    os << rows[i] << std::string(w[0] - rows[i].size(), ' ');
    for (size_t j = 0; j < cols.size(); ++j) os << "  " << pad(cells[i][j], w[j + 1]);
    os << '\n';
  }
  return os.str();
}

std::string matrix_text(const Mat& m, const std::vector<std::string>& rows, const std::vector<std::string>& cols) {
  std::vector<std::vector<std::string>> cells;
  for (const auto& r : m) {
    std::vector<std::string> c;
    for (const auto& x : r) c.push_back(to_string(x));
    cells.push_back(c);
  }
  return grid(rows, cols, cells);
}

std::string certificate_text(const Certificate& c, const Palette& pal) {
  std::ostringstream os;
  os << (c.kind == CertKind::NefDual ? "nef" : "effective") << " certificate on " << c.space.name() << ": "
     << (c.certified ? pal.green("Certified") : pal.red("Failed (" + c.reason + ")")) << '\n';
  std::vector<std::string> rl, cl;
  for (const auto& r : c.rays) {
    cl.push_back(r.label);
    os << "  ray " << r.label << " = " << format_div(r.cls) << "  [" << ray_tag_name(r.tag);
    if (!r.citation.empty()) os << ": " << r.citation;
    os << "]\n";
  }
  for (const auto& w : c.witnesses) {
    rl.push_back(w.label);
    os << "  curve " << w.label << " = " << format_cur(w.cls) << '\n';
  }
  os << matrix_text(c.matrix, rl, cl);
  return os.str();
}

std::string report_text(const TableReport& r, const Palette& pal, bool detail) {
  std::ostringstream os;
  std::string p = params_string(r.params);
  os << (r.ok() ? pal.green("PASS") : pal.red("FAIL")) << ' ' << r.id << (p.empty() ? "" : " " + p)
     << "  match " << r.count(CellStatus::Match) << "  diff " << r.count(CellStatus::Diff) << "  skipped "
     << r.count(CellStatus::Skipped);
  for (const auto& c : r.certificates) os << "  " << (c.certified ? "Certified" : "Failed: " + c.reason);
  os << '\n';
  for (const auto& c : r.cells)
    if (c.status == CellStatus::Diff)
      os << "  DIFF " << c.row << " x " << c.col << ": printed " << (c.printed ? to_string(*c.printed) : "-")
         << ", computed " << (c.computed ? to_string(*c.computed) : "-") << '\n';
  for (const auto& [name, pass] : r.checks)
    if (detail || !pass) os << "  " << (pass ? "ok   " : "FAIL ") << name << '\n';
  if (!detail) return os.str();
  if (!r.row_labels.empty()) {
    std::vector<std::vector<std::string>> cells(r.row_labels.size());
    for (size_t i = 0; i < r.row_labels.size(); ++i)
      for (size_t j = 0; j < r.col_labels.size(); ++j) {
        const auto& c = r.cells[i * r.col_labels.size() + j];
        cells[i].push_back(to_string(*c.computed));
      }
    os << grid(r.row_labels, r.col_labels, cells);
  } else {
    for (const auto& c : r.cells)
      if (c.status == CellStatus::Skipped) os << "  SKIPPED " << c.row << " x " << c.col << ": " << c.note << '\n';
  }
  for (const auto& n : r.notes) os << "  note: " << n << '\n';
  return os.str();
}

std::string report_csv(const TableReport& r) {
  std::ostringstream os;
  os << "row,col,printed,computed,status\n";
  for (const auto& c : r.cells)
    os << c.row << ',' << c.col << ',' << (c.printed ? to_string(*c.printed) : "") << ','
       << (c.computed ? to_string(*c.computed) : "") << ',' << cell_status_name(c.status) << '\n';
  return os.str();
}

TableParams params_from(const CLI::App* sc, int n, int g, int i) {
  TableParams p;
  if (sc->count("--n")) p.n = n;
  if (sc->count("--g")) p.g = g;
  if (sc->count("--i")) p.i = i;
  return p;
}

struct Job {
  std::string id;
  TableParams params;
};

std::vector<TableReport> run_jobs(const std::vector<Job>& jobs, int n_threads) {
  std::vector<TableReport> out(jobs.size());
  std::vector<std::exception_ptr> errs(jobs.size());
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t k; (k = next++) < jobs.size();) {
      try {
        out[k] = reproduce_table(jobs[k].id, jobs[k].params);
      } catch (...) {
        errs[k] = std::current_exception();
      }
    }
  };
  n_threads = std::max(1, std::min<int>(n_threads, static_cast<int>(jobs.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < n_threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);
  return out;
}

std::string nef_table_id(const Space& sp) {
  const auto& s = sp.surface;
  std::string surf = s.kind == SurfaceKind::P2   ? "p2"
                     : s.kind == SurfaceKind::K3 ? "k3"
                     : s.index == 0              ? "f0"
                                                 : "fi";
  switch (sp.id.kind) {
    case SpaceKind::Hilb:
      if (surf == "p2") return "hilb_p2_nef";
      if (surf == "k3") return "k3_g1n";
      break;
    case SpaceKind::Nested: return "nef_" + surf + "_nested";
    case SpaceKind::Univ: return "nef_" + surf + "_univ";
    default: break;
  }
  throw Error(ErrorCode::InvalidInput, "no nef cone in the catalog for " + sp.name());
}

TableParams params_for(const Space& sp) {
  TableParams p;
  p.n = sp.id.n;
  if (sp.surface.kind == SurfaceKind::K3) p.g = sp.surface.index;
  if (sp.surface.kind == SurfaceKind::F && sp.surface.index > 0) p.i = sp.surface.index;
  return p;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Palette pal;
  pal.on = std::getenv("NESTCONE_NO_COLOR") == nullptr && &out == &std::cout && isatty(STDOUT_FILENO);

  CLI::App app{"Exact divisor and curve computations on nested Hilbert schemes of points"};
  app.require_subcommand(1);
  std::string out_path;
  app.add_option("--out", out_path, "write output to PATH instead of stdout");
  app.fallthrough();  // --out may follow the subcommand

  // pair
  SpaceOpts pair_o;
  std::vector<std::string> pair_args;
  auto* pair_c = app.add_subcommand("pair", "intersection number of a divisor and a curve");
  add_space_opts(pair_c, pair_o);
  pair_c->add_option("classes", pair_args, "a divisor and a curve expression, either order")->expected(2)->required();

  // table
  SpaceOpts tab_o;
  std::string tab_fmt = "text", tab_id;
  int tab_g = 3, tab_i = 1;
  auto* tab_c = app.add_subcommand("table", "pairing table of a space, or a recomputed catalog table");
  add_space_opts(tab_c, tab_o);
  tab_c->add_option("--format", tab_fmt, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));
  auto* tab_id_o = tab_c->add_option("--table", tab_id, "catalog id");
  tab_c->add_option("--g", tab_g, "K3 genus for --table");
  tab_c->add_option("--i", tab_i, "Hirzebruch index for --table");

  // nef
  SpaceOpts nef_o;
  std::string nef_fmt = "text";
  auto* nef_c = app.add_subcommand("nef", "certified nef cone of a space");
  add_space_opts(nef_c, nef_o);
  nef_c->add_option("--format", nef_fmt, "text or json")->check(CLI::IsMember({"text", "json"}));

  // eff
  std::string eff_id = "eff_p2_2_1", eff_fmt = "text";
  auto* eff_c = app.add_subcommand("eff", "effective cone certificate");
  eff_c->add_option("--table", eff_id, "eff_p2_2_1 or eff_p2_3_2")->capture_default_str();
  eff_c->add_option("--format", eff_fmt, "text or json")->check(CLI::IsMember({"text", "json"}));

  // verify
  std::string ver_id, ver_fmt = "text";
  int ver_n = 0, ver_g = 0, ver_i = 0, ver_jobs = 1;
  bool ver_all = false;
  auto* ver_c = app.add_subcommand("verify", "reproduce catalog tables and certificates");
  auto* ver_id_o = ver_c->add_option("--table", ver_id, "catalog id");
  ver_c->add_option("--n", ver_n, "number of points");
  ver_c->add_option("--g", ver_g, "K3 genus");
  ver_c->add_option("--i", ver_i, "Hirzebruch index");
  auto* ver_all_o = ver_c->add_flag("--all", ver_all, "every table over its full parameter range");
  ver_c->add_option("--jobs", ver_jobs, "parallel workers")->check(CLI::PositiveNumber);
  ver_c->add_option("--format", ver_fmt, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  ver_id_o->excludes(ver_all_o);

  // cross-section
  std::string cs_id, cs_fmt = "svg", cs_norm = "auto";
  int cs_n = 0, cs_g = 0, cs_i = 0;
  auto* cs_c = app.add_subcommand("cross-section", "planar section of a catalog cone");
  cs_c->add_option("--table", cs_id, "catalog id of a nef or effective table")->required();
  cs_c->add_option("--n", cs_n, "number of points");
  cs_c->add_option("--g", cs_g, "K3 genus");
  cs_c->add_option("--i", cs_i, "Hirzebruch index");
  cs_c->add_option("--format", cs_fmt, "svg, tikz, csv or json")->check(CLI::IsMember({"svg", "tikz", "csv", "json"}));
  cs_c->add_option("--normalize", cs_norm, "auto, coordsum or witness")
      ->check(CLI::IsMember({"auto", "coordsum", "witness"}));

  // butler
  ButlerInput bi;
  std::string bu_fmt = "text";
  auto* bu_c = app.add_subcommand("butler", "nef-interior test for projective normality on F_i[2,1]");
  bu_c->add_option("--i", bi.i, "Hirzebruch index")->capture_default_str();
  bu_c->add_option("--a", bi.a, "A = aH + bF")->capture_default_str();
  bu_c->add_option("--b", bi.b, "A = aH + bF")->capture_default_str();
  bu_c->add_option("--n", bi.n, "L = nA")->capture_default_str();
  bu_c->add_option("--kmin", bi.k_min)->capture_default_str();
  bu_c->add_option("--kmax", bi.k_max)->capture_default_str();
  bu_c->add_flag("--swap-factors", bi.swap_factors, "add pull_res(L) per step instead of pull_b(L)");
  bu_c->add_option("--format", bu_fmt, "text or json")->check(CLI::IsMember({"text", "json"}));

  // asymptotic
  int as_kmax = 30, as_section = 0;
  std::string as_fmt = "text";
  auto* as_c = app.add_subcommand("asymptotic", "limit of Eff(P2[n+1,n]) in the (H1,H2,B1,B2) frame");
  as_c->add_option("--kmax", as_kmax)->capture_default_str();
  as_c->add_option("--section", as_section, "emit the cross-section of E_k for this k");
  as_c->add_option("--format", as_fmt, "text, json, svg, tikz or csv")
      ->check(CLI::IsMember({"text", "json", "svg", "tikz", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  std::ostringstream buf;
  int status = 0;
  try {
    if (*pair_c) {
      Space sp = build_space(pair_o);
      Value a = evaluate(pair_args[0], sp), b = evaluate(pair_args[1], sp);
      using K = Value::Kind;
      if (a.kind == K::Cur && b.kind == K::Div) std::swap(a, b);
      if (a.kind != K::Div || b.kind != K::Cur)
        throw Error(ErrorCode::InvalidInput, "pair needs one divisor and one curve class");
      buf << to_string(pair(DivClass{sp, a.coords}, CurClass{sp, b.coords})) << '\n';
    } else if (*tab_c) {
      if (*tab_id_o) {
        TableParams p;
        if (tab_c->count("--n")) p.n = tab_o.n;
        if (tab_c->count("--g")) p.g = tab_g;
        if (tab_c->count("--i")) p.i = tab_i;
        TableReport r = reproduce_table(tab_id, p);
        if (tab_fmt == "json") buf << dump(to_json(r));
        else if (tab_fmt == "csv") buf << report_csv(r);
        else buf << report_text(r, pal, true);
        status = r.ok() ? 0 : 1;
      } else {
        PairingTable t = pairing_table(build_space(tab_o));
        if (tab_fmt == "json") buf << dump(to_json(t));
        else if (tab_fmt == "csv") buf << pairing_table_csv(t);
        else buf << t.space.name() << '\n' << matrix_text(t.matrix, t.row_labels, t.col_labels);
      }
    } else if (*nef_c) {
      Space sp = build_space(nef_o);
      TableReport r = reproduce_table(nef_table_id(sp), params_for(sp));
      const Certificate& c = r.certificates.at(0);
      if (nef_fmt == "json") buf << dump(to_json(c));
      else buf << certificate_text(c, pal);
      status = c.certified ? 0 : 1;
    } else if (*eff_c) {
      const TableSpec& t = find_table(eff_id);
      if (t.kind != TableKind::Eff) throw Error(ErrorCode::InvalidInput, eff_id + " is not an effective-cone table");
      TableReport r = reproduce_table(eff_id, {});
      const Certificate& c = r.certificates.at(0);
      if (eff_fmt == "json") buf << dump(to_json(c));
      else {
        buf << certificate_text(c, pal);
        for (const auto& [name, pass] : r.checks) buf << (pass ? "ok   " : "FAIL ") << name << '\n';
      }
      status = c.certified ? 0 : 1;
      for (const auto& [name, pass] : r.checks) status = pass ? status : 1;
    } else if (*ver_c) {
      std::vector<Job> jobs;
      if (ver_all) {
        for (const auto& t : catalog())
          for (const auto& p : acceptance_params(t)) jobs.push_back({t.id, p});
      } else if (*ver_id_o) {
        jobs.push_back({ver_id, params_from(ver_c, ver_n, ver_g, ver_i)});
      } else {
        throw Error(ErrorCode::InvalidInput, "verify needs --table ID or --all");
      }
      auto reports = run_jobs(jobs, ver_jobs);
      size_t failed = 0;
      Json all = Json::array();
      for (const auto& r : reports) {
        failed += !r.ok();
        if (ver_fmt == "json") all.push_back(to_json(r));
        else if (ver_fmt == "csv") buf << report_csv(r);
        else buf << report_text(r, pal, !ver_all);
      }
      if (ver_fmt == "json") buf << dump(ver_all ? all : all.at(0));
      if (ver_fmt == "text" && ver_all)
        buf << reports.size() - failed << " of " << reports.size() << " table instances pass\n";
      status = failed ? 1 : 0;
    } else if (*cs_c) {
      SectionNorm norm = cs_norm == "witness" ? SectionNorm::Witness
                         : cs_norm == "coordsum" ? SectionNorm::CoordSum
                                                 : SectionNorm::Auto;
      Figure f = table_figure(cs_id, params_from(cs_c, cs_n, cs_g, cs_i), norm);
      if (cs_fmt == "svg") buf << render_svg(f);
      else if (cs_fmt == "tikz") buf << render_tikz(f);
      else if (cs_fmt == "csv") buf << render_csv(f);
      else buf << dump(to_json(f.section));
    } else if (*bu_c) {
      ButlerReport r = butler_check(bi);
      if (bu_fmt == "json") buf << dump(to_json(r));
      else {
        buf << "F_" << bi.i << "[2,1], A = " << bi.a << "H + " << bi.b << "F, n = " << bi.n
            << (bi.swap_factors ? ", steps add pull_res(L)" : "") << '\n';
        buf << "coefficients on (Hb, Fb, Hdiff, Fdiff, Da[1,1])\n";
        for (const auto& row : r.rows) {
          buf << "  k=" << row.k << "  (";
          for (size_t j = 0; j < row.coefficients.size(); ++j)
            buf << (j ? ", " : "") << to_string(row.coefficients[j]);
          buf << ")  " << position_name(row.position) << '\n';
        }
        if (!r.claimed) buf << "n < 4: positions reported without a claim\n";
      }
      status = r.ok() ? 0 : 1;
    } else if (*as_c) {
      if (as_section > 0) {
        Polytope p = cross_section(asymptotic_cone(as_section), Normalization::CoordSum());
        std::vector<RayLabel> labels = {{from_ints({0, 0, 1, 0}), "B1", "B_1"}, {from_ints({0, 0, 0, 1}), "B2", "B_2"}};
        Figure f = make_figure("E_" + std::to_string(as_section), p, labels, {"H1", "H2", "B1", "B2"});
        if (as_fmt == "svg") buf << render_svg(f);
        else if (as_fmt == "tikz") buf << render_tikz(f);
        else if (as_fmt == "csv") buf << render_csv(f);
        else buf << dump(to_json(p));
      } else {
        AsymptoticReport r = asymptotic_report(as_kmax);
        if (as_fmt == "json") buf << dump(to_json(r));
        else if (as_fmt != "text") throw Error(ErrorCode::InvalidInput, "figures need --section K");
        else {
          buf << "k  a_k  a'_k  k/(2a_k)  k/(2(a'_k-1))  nested  distance\n";
          for (const auto& row : r.rows)
            buf << row.k << "  " << row.ak << "  " << row.apk << "  " << to_string(row.dev1) << "  "
                << to_string(row.dev2) << "  " << (row.nested_next ? "yes" : "NO") << "  " << to_string(row.distance)
                << (row.within_bound ? "" : " (over 1/k)") << '\n';
          buf << "deviations exact: " << (r.deviations_exact ? "yes" : "NO")
              << ", strictly decreasing: " << (r.deviations_decreasing ? "yes" : "NO")
              << ", limit cone = cone(H1,H2,B1,B2): " << (r.limit_is_orthant ? "yes" : "NO") << '\n';
        }
        status = r.ok() ? 0 : 1;
      }
    }
  } catch (const Error& e) {
    err << "nestcone: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "nestcone: internal error: " << e.what() << '\n';
    return 2;
  }

  if (out_path.empty()) {
    out << buf.str();
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      err << "nestcone: cannot write " << out_path << '\n';
      return 2;
    }
    f << buf.str();
  }
  return status;
}

}  // namespace nestcone
