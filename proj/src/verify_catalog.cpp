#include "nestcone/error.hpp"
#include "nestcone/verify.hpp"

namespace nestcone {

namespace {

using R = RayTag;

LabelDef lab(std::string label, std::string tex, std::string expr, RayTag tag = R::None, std::string citation = "",
             std::string source = "") {
  return LabelDef{std::move(label), std::move(tex), std::move(expr), tag, std::move(citation), std::move(source)};
}
LabelDef unresolved(std::string label, std::string tex) { return lab(std::move(label), std::move(tex), ""); }

std::vector<std::vector<std::string>> identity(size_t k) {
  std::vector<std::vector<std::string>> m(k, std::vector<std::string>(k, "0"));
  for (size_t i = 0; i < k; ++i) m[i][i] = "1";
  return m;
}

std::vector<std::vector<std::string>> diagonal(const std::vector<std::string>& d) {
  auto m = identity(d.size());
  for (size_t i = 0; i < d.size(); ++i) m[i][i] = d[i];
  return m;
}

TableSpec pairing_p2_hilb() {
  TableSpec t;
  t.id = "pairing_p2_hilb";
  t.title = "Intersection pairing on P2[n]";
  t.kind = TableKind::Pairing;
  t.surface = "p2";
  t.space = SpaceKind::Hilb;
  t.rows = {lab("C0", "C_0", "C0"), lab("C1", "C_1", "C1"), lab("A", "A", "A")};
  t.cols = {lab("H", "H", "H"), lab("B", "B", "B")};
  t.cells = {{"1", "2"}, {"1", "0"}, {"0", "-2"}};
  t.provenance = "pairing of C0, C1, A against H, B on P2[n]";
  return t;
}

TableSpec pairing_p2_nested() {
  TableSpec t;
  t.id = "pairing_p2_nested";
  t.title = "Intersection pairing on P2[n+1,n]";
  t.kind = TableKind::Pairing;
  t.surface = "p2";
  t.space = SpaceKind::Nested;
  t.rows = {lab("Ca0", "C^a_0", "Ca0"), lab("Ca1", "C^a_1", "Ca1"), lab("Aa", "A^a", "Aa"),
            lab("Cb0", "C^b_0", "Cb0"), lab("Cb1", "C^b_1", "Cb1"), lab("Ab", "A^b", "Ab")};
  t.cols = {lab("Hdiff", "H^{diff}", "Hdiff"), lab("Bdiff", "B^{diff}", "Bdiff"), lab("Hb", "H^b", "Hb"),
            lab("Bb", "B^b", "Bb")};
  t.cells = {{"1", "2", "0", "0"}, {"1", "0", "0", "0"}, {"0", "-2", "0", "0"},
             {"0", "0", "1", "2"}, {"0", "0", "1", "0"}, {"0", "2", "0", "-2"}};
  t.provenance = "pairing of the nested curve basis against Hdiff, Bdiff, Hb, Bb";
  return t;
}

TableSpec hilb_p2_nef() {
  TableSpec t;
  t.id = "hilb_p2_nef";
  t.title = "Nef(P2[n])";
  t.kind = TableKind::Nef;
  t.surface = "p2";
  t.space = SpaceKind::Hilb;
  t.rows = {lab("C[l,n]", "C_{l,n}", "C(1,n)"), lab("A", "A", "A")};
  t.cols = {lab("H", "H", "H", R::Asserted, "H is base point free on P2[n]"),
            lab("D[n-1]", "D_{n-1}", "D(n-1)", R::Asserted, "D_{n-1} is base point free on P2[n]")};
  t.cells = identity(2);
  t.provenance = "Nef(P2[n]) spanned by H and D_{n-1}";
  return t;
}

TableSpec nef_p2_nested() {
  TableSpec t;
  t.id = "nef_p2_nested";
  t.title = "Nef(P2[n+1,n])";
  t.kind = TableKind::Nef;
  t.surface = "p2";
  t.space = SpaceKind::Nested;
  t.rows = {lab("Cb[l,n]", "C^b_{l,n}", "Cb(1,n)"), lab("Ab", "A^b", "Ab"),
            lab("Ca[l,n+1]", "C^a_{l,n+1}", "Ca(1,n+1)"), lab("Aa", "A^a", "Aa")};
  t.cols = {lab("Hb", "H^b", "Hb", R::PullbackOfNef, "H nef on P2[n]", "b:H"),
            lab("Db[n-1]", "D^b_{n-1}", "Db(n-1)", R::PullbackOfNef, "D_{n-1} nef on P2[n]", "b:D(n-1)"),
            lab("Hdiff", "H^{diff}", "Hdiff", R::ResidueOfNef, "H nef on P2", "res:H"),
            lab("Da[n]", "D^a_n", "Da(n)", R::PullbackOfNef, "D_n nef on P2[n+1]", "a:D(n)")};
  t.cells = identity(4);
  t.provenance = "Nef(P2[n+1,n]) spanned by H^b, D^b_{n-1}, H^diff, D^a_n";
  return t;
}

TableSpec nef_f0_nested() {
  TableSpec t;
  t.id = "nef_f0_nested";
  t.title = "Nef((P1xP1)[n+1,n])";
  t.kind = TableKind::Nef;
  t.surface = "p1xp1";
  t.space = SpaceKind::Nested;
  t.rows = {lab("Cb[H2,n]", "C^b_{H_2,n}", "Cb(0,1,n)"), lab("Cb[H1,n]", "C^b_{H_1,n}", "Cb(1,0,n)"),
            lab("Ab", "A^b", "Ab"),
            lab("Ca[H2,n+1]", "C^a_{H_2,n+1}", "Ca(0,1,n+1)"), lab("Ca[H1,n+1]", "C^a_{H_1,n+1}", "Ca(1,0,n+1)"),
            lab("Aa", "A^a", "Aa")};
  t.cols = {lab("Hb1", "H_1^b", "Hb1", R::PullbackOfNef, "H1 nef on P1xP1[n]", "b:H1"),
            lab("Hb2", "H_2^b", "Hb2", R::PullbackOfNef, "H2 nef on P1xP1[n]", "b:H2"),
            lab("Db[n-1,n-1]", "D^b_{n-1,n-1}", "Db(n-1,n-1)", R::PullbackOfNef, "D_{n-1,n-1} nef on P1xP1[n]",
                "b:D(n-1,n-1)"),
            lab("Hdiff1", "H_1^{diff}", "Hdiff1", R::ResidueOfNef, "H1 nef on P1xP1", "res:H1"),
            lab("Hdiff2", "H_2^{diff}", "Hdiff2", R::ResidueOfNef, "H2 nef on P1xP1", "res:H2"),
            lab("Da[n,n]", "D^a_{n,n}", "Da(n,n)", R::PullbackOfNef, "D_{n,n} nef on P1xP1[n+1]", "a:D(n,n)")};
  t.cells = identity(6);
  t.provenance = "Nef((P1xP1)[n+1,n]) dual to lines of each ruling and the A classes";
  return t;
}

TableSpec nef_fi_nested() {
  TableSpec t;
  t.id = "nef_fi_nested";
  t.title = "Nef(F_i[n+1,n])";
  t.kind = TableKind::Nef;
  t.surface = "fi";
  t.space = SpaceKind::Nested;
  // E = H - iF is the negative section
  t.rows = {lab("Ca[F,n+1]", "C^a_{F,n+1}", "Ca(0,1,n+1)"), lab("Ca[E,n+1]", "C^a_{E,n+1}", "Ca(1,-i,n+1)"),
            lab("Cb[F,n]", "C^b_{F,n}", "Cb(0,1,n)"), lab("Cb[E,n]", "C^b_{E,n}", "Cb(1,-i,n)"),
            lab("Ab", "A^b", "Ab"), lab("Aa", "A^a", "Aa")};
  t.cols = {lab("Hdiff", "H^{diff}", "Hdiff", R::ResidueOfNef, "H nef on F_i", "res:H"),
            lab("Fdiff", "F^{diff}", "Fdiff", R::ResidueOfNef, "F nef on F_i", "res:F"),
            lab("Hb", "H^b", "Hb", R::PullbackOfNef, "H nef on F_i[n]", "b:H"),
            lab("Fb", "F^b", "Fb", R::PullbackOfNef, "F nef on F_i[n]", "b:F"),
            lab("Db[n-1,n-1]", "D^b_{n-1,n-1}", "Db(n-1,n-1)", R::PullbackOfNef, "D_{n-1,n-1} nef on F_i[n]",
                "b:D(n-1,n-1)"),
            lab("Da[n,n]", "D^a_{n,n}", "Da(n,n)", R::PullbackOfNef, "D_{n,n} nef on F_i[n+1]", "a:D(n,n)")};
  t.cells = identity(6);
  t.provenance = "Nef(F_i[n+1,n]) from hyperplane sections and the tautological classes";
  return t;
}

TableSpec nef_k3_nested() {
  TableSpec t;
  t.id = "nef_k3_nested";
  t.title = "Nef(K3[n+1,n]), Pic = ZH";
  t.kind = TableKind::Nef;
  t.surface = "k3";
  t.space = SpaceKind::Nested;
  t.rows = {lab("Cb_nodal", "C^b_{nodal}", "CbNodal()"), lab("Ab", "A^b", "Ab"),
            lab("Ca_nodal", "C^a_{nodal}", "CaNodal()"), lab("Aa", "A^a", "Aa")};
  t.cols = {lab("Hb", "H^b", "Hb", R::PullbackOfNef, "H nef on K3[n]", "b:H"),
            lab("Db[f(n)]", "D^b_{f(n)}", "Db(f(n))", R::PullbackOfNef, "D_{f(n)} nef on K3[n], n >= g+1",
                "b:D(f(n))"),
            lab("Hdiff", "H^{diff}", "Hdiff", R::ResidueOfNef, "H nef on the K3", "res:H"),
            lab("Da[f(n+1)]", "D^a_{f(n+1)}", "Da(f(n+1))", R::PullbackOfNef, "D_{f(n+1)} nef on K3[n+1]",
                "a:D(f(n+1))")};
  t.cells = diagonal({"2g-2", "1", "2g-2", "1"});
  t.provenance = "Nef(K3[n+1,n]) for n >= g+1, dual to nodal rational curves";
  return t;
}

TableSpec nef_p2_univ() {
  TableSpec t;
  t.id = "nef_p2_univ";
  t.title = "Nef(P2[n,1])";
  t.kind = TableKind::Nef;
  t.surface = "p2";
  t.space = SpaceKind::Univ;
  t.rows = {lab("Ca[l,n-1]", "C^a_{l,n-1}", "Ca(1,n-1)"), lab("Cb[l,n]", "C^b_{l,n}", "Cb(1,n)"),
            lab("Aa", "A^a", "Aa")};
  t.cols = {lab("Hdiff", "H^{diff}", "Hdiff", R::ResidueOfNef, "H nef on P2", "res:H"),
            lab("Hb", "H^b", "Hb", R::PullbackOfNef, "H nef on P2", "b:H"),
            lab("Da[n-1]", "D^a_{n-1}", "Da(n-1)", R::PullbackOfNef, "D_{n-1} nef on P2[n]", "a:D(n-1)")};
  t.cells = identity(3);
  t.provenance = "Nef(P2[n,1]) from pullbacks along the two projections";
  return t;
}

TableSpec nef_f0_univ() {
  TableSpec t;
  t.id = "nef_f0_univ";
  t.title = "Nef((P1xP1)[n,1])";
  t.kind = TableKind::Nef;
  t.surface = "p1xp1";
  t.space = SpaceKind::Univ;
  t.rows = {lab("Ca[H2,n-1]", "C^a_{H_2,n-1}", "Ca(0,1,n-1)"), lab("Ca[H1,n-1]", "C^a_{H_1,n-1}", "Ca(1,0,n-1)"),
            lab("Cb[H2,n]", "C^b_{H_2,n}", "Cb(0,1,n)"), lab("Cb[H1,n]", "C^b_{H_1,n}", "Cb(1,0,n)"),
            lab("Aa", "A^a", "Aa")};
  t.cols = {lab("Hdiff1", "H_1^{diff}", "Hdiff1", R::ResidueOfNef, "H1 nef on P1xP1", "res:H1"),
            lab("Hdiff2", "H_2^{diff}", "Hdiff2", R::ResidueOfNef, "H2 nef on P1xP1", "res:H2"),
            lab("Hb1", "H_1^b", "Hb1", R::PullbackOfNef, "H1 nef on P1xP1", "b:H1"),
            lab("Hb2", "H_2^b", "Hb2", R::PullbackOfNef, "H2 nef on P1xP1", "b:H2"),
            lab("Da[n-1,n-1]", "D^a_{n-1,n-1}", "Da(n-1,n-1)", R::PullbackOfNef, "D_{n-1,n-1} nef on P1xP1[n]",
                "a:D(n-1,n-1)")};
  t.cells = identity(5);
  t.provenance = "Nef((P1xP1)[n,1]) from pullbacks along the two projections";
  return t;
}

TableSpec nef_fi_univ() {
  TableSpec t;
  t.id = "nef_fi_univ";
  t.title = "Nef(F_i[n,1])";
  t.kind = TableKind::Nef;
  t.surface = "fi";
  t.space = SpaceKind::Univ;
  t.rows = {lab("Ca[F,n-1]", "C^a_{F,n-1}", "Ca(0,1,n-1)"), lab("Ca[E,n-1]", "C^a_{E,n-1}", "Ca(1,-i,n-1)"),
            lab("Cb[F,n]", "C^b_{F,n}", "Cb(0,1,n)"), lab("Cb[E,n]", "C^b_{E,n}", "Cb(1,-i,n)"),
            lab("Aa", "A^a", "Aa")};
  t.cols = {lab("Hdiff", "H^{diff}", "Hdiff", R::ResidueOfNef, "H nef on F_i", "res:H"),
            lab("Fdiff", "F^{diff}", "Fdiff", R::ResidueOfNef, "F nef on F_i", "res:F"),
            lab("Hb", "H^b", "Hb", R::PullbackOfNef, "H nef on F_i", "b:H"),
            lab("Fb", "F^b", "Fb", R::PullbackOfNef, "F nef on F_i", "b:F"),
            lab("Da[n-1,n-1]", "D^a_{n-1,n-1}", "Da(n-1,n-1)", R::PullbackOfNef, "D_{n-1,n-1} nef on F_i[n]",
                "a:D(n-1,n-1)")};
  t.cells = identity(5);
  t.provenance = "Nef(F_i[n,1]) from pullbacks along the two projections";
  return t;
}

TableSpec nef_k3_univ() {
  TableSpec t;
  t.id = "nef_k3_univ";
  t.title = "Nef(K3[n,1]), Pic = ZH";
  t.kind = TableKind::Nef;
  t.surface = "k3";
  t.space = SpaceKind::Univ;
  t.rows = {lab("Ca_nodal", "C^a_{nodal}", "CaNodal()"), lab("Cb_nodal", "C^b_{nodal}", "CbNodal()"),
            lab("Aa", "A^a", "Aa")};
  t.cols = {lab("Hdiff", "H^{diff}", "Hdiff", R::ResidueOfNef, "H nef on the K3", "res:H"),
            lab("Hb", "H^b", "Hb", R::PullbackOfNef, "H nef on the K3", "b:H"),
            lab("Da[f(n)]", "D^a_{f(n)}", "Da(f(n))", R::PullbackOfNef, "D_{f(n)} nef on K3[n], n >= g+1",
                "a:D(f(n))")};
  t.cells = diagonal({"2g-2", "2g-2", "1"});
  t.provenance = "Nef(K3[n,1]) for n >= g+1, dual to nodal rational curves";
  return t;
}

TableSpec k3_g1n() {
  TableSpec t;
  t.id = "k3_g1n";
  t.title = "Nef(K3[n]) via the g1n curve";
  t.kind = TableKind::Nef;
  t.surface = "k3";
  t.space = SpaceKind::Hilb;
  t.rows = {lab("g1n", "C_{g^1_n}", "g1n()"), lab("A", "A", "A")};
  t.cols = {lab("H", "H", "H", R::Asserted, "H nef on K3[n]"),
            lab("D[f(n)]", "D_{f(n)}", "D(f(n))", R::Asserted, "D_{f(n)} nef on K3[n] for n >= g+1")};
  t.cells = diagonal({"2g-2", "1"});
  t.provenance = "Nef(K3[n]) spanned by H and D_{f(n)} for n >= g+1";
  return t;
}

TableSpec eff_p2_2_1() {
  TableSpec t;
  t.id = "eff_p2_2_1";
  t.title = "Eff(P2[2,1])";
  t.kind = TableKind::Eff;
  t.surface = "p2";
  t.space = SpaceKind::Univ;
  t.fixed_n = 2;
  const std::string mv = "moving curve family";
  t.rows = {lab("C211", "C_{2,1,1}", "Ca1-Aa", R::Asserted, mv), lab("C112", "C_{1,1,2}", "Cb1-Aa", R::Asserted, mv),
            lab("C11", "C_{1,1}", "Ca1", R::Asserted, mv), lab("C21", "C_{2,1}", "Cb1", R::Asserted, mv)};
  t.cols = {lab("H1", "H_1", "Hdiff", R::PullbackOfEffective, "residual point on a line", "res:H"),
            lab("H2", "H_2", "Hb", R::PullbackOfEffective, "marked point on a line", "b:H"),
            lab("B", "B", "B", R::PullbackOfEffective, "nonreduced locus of P2[2]", "a:B"),
            lab("D11", "D_{1,1}", "Hdiff+Hb-B/2", R::PullbackOfEffective, "D_1 effective on P2[2]", "a:D(1)")};
  t.cells = {{"1", "0", "2", "0"}, {"0", "1", "2", "0"}, {"1", "0", "0", "1"}, {"0", "1", "0", "1"}};
  t.provenance = "Eff(P2[2,1]) spanned by H1, H2, B, D11";
  return t;
}

TableSpec eff_p2_3_2() {
  TableSpec t;
  t.id = "eff_p2_3_2";
  t.title = "Eff(P2[3,2])";
  t.kind = TableKind::Eff;
  t.surface = "p2";
  t.space = SpaceKind::Nested;
  t.fixed_n = 2;
  const std::string mv = "moving curve family";
  t.rows = {lab("C11", "C_{1,1}", "Ca1", R::Asserted, mv), lab("C21", "C_{2,1}", "Cb1", R::Asserted, mv),
            lab("C10", "C_{1,0}", "Ca1-Aa", R::Asserted, mv), lab("C20", "C_{2,0}", "Cb1-Aa-Ab", R::Asserted, mv),
            lab("C111", "C_{1,1,1}", "Cb1-Aa", R::Asserted, mv)};
  t.cols = {lab("H1", "H_1", "Hdiff", R::PullbackOfEffective, "residual point on a line", "res:H"),
            lab("B1", "B_1", "Bdiff", R::Asserted, "residual point in the support of z'"),
            lab("B2", "B_2", "Bb", R::PullbackOfEffective, "nonreduced locus of P2[2]", "b:B"),
            lab("D11", "D_{1,1}", "Da(1)", R::PullbackOfEffective, "D_1 effective on P2[3]", "a:D(1)"),
            lab("D21", "D_{2,1}", "Db(1)", R::PullbackOfEffective, "D_1 effective on P2[2]", "b:D(1)")};
  t.cells = {{"1", "0", "0", "1", "0"},
             {"0", "0", "0", "1", "1"},
             {"1", "0", "2", "0", "0"},
             {"0", "0", "2", "0", "0"},
             {"0", "2", "0", "0", "1"}};
  t.provenance = "Eff(P2[3,2]) spanned by H1, B1, B2, D11, D21";
  return t;
}

TableSpec eff_summary() {
  TableSpec t;
  t.id = "eff_summary";
  t.title = "Effective cones of small nested Hilbert schemes of P2";
  t.kind = TableKind::Chart;
  t.surface = "p2";
  t.provenance = "summary chart of effective cones";

  auto Hd = lab("Hdiff", "H^{diff}", "Hdiff", R::PullbackOfEffective, "residual point on a line", "res:H");
  auto Hb = lab("Hb", "H^b", "Hb", R::PullbackOfEffective, "a point of z' on a line", "b:H");
  auto B = lab("B", "B", "B", R::PullbackOfEffective, "nonreduced locus", "a:B");
  auto Bd = lab("Bdiff", "B^a", "Bdiff", R::Asserted, "residual point in the support of z'");
  auto Bb = lab("Bb", "B^b", "Bb", R::PullbackOfEffective, "z' nonreduced", "b:B");
  auto Da = [](const std::string& k) {
    return lab("Da[" + k + "]", "D^a_{" + k + "}", "Da(" + k + ")", R::PullbackOfEffective, "D_" + k + " effective",
               "a:D(" + k + ")");
  };
  auto Db = [](const std::string& k) {
    return lab("Db[" + k + "]", "D^b_{" + k + "}", "Db(" + k + ")", R::PullbackOfEffective, "D_" + k + " effective",
               "b:D(" + k + ")");
  };
  auto ca = [](const std::string& d, const std::string& r) {
    std::string g = d == "1" ? "l" : d == "2" ? "q" : d;
    return lab("Ca[" + g + "," + r + "]", "C^a_{" + g + "," + r + "}", "Cac(" + d + "," + r + ")", R::Asserted,
               "moving curve family");
  };
  auto cb = [](const std::string& d, const std::string& r) {
    std::string g = d == "1" ? "l" : d == "2" ? "q" : d;
    return lab("Cb[" + g + "," + r + "]", "C^b_{" + g + "," + r + "}", "Cbc(" + d + "," + r + ")", R::Asserted,
               "moving curve family");
  };
  auto cc_l2 = unresolved("Cc[l,2]", "C^c_{l,2}");
  auto e1 = unresolved("E1", "E_1");

  t.chart.push_back({"P2[3,1]", SpaceKind::Univ, 3, {Hd, B, Hb, Da("1")}, {ca("1", "1"), cb("1", "1"), ca("1", "2"), cb("1", "2")}, "", {}});
  t.chart.push_back({"P2[4,1]", SpaceKind::Univ, 4, {Hd, B, Hb, unresolved("2Da[3/2]", "2D^a_{3/2}")},
                     {ca("1", "1"), cb("1", "1"), ca("2", "4"), cb("2", "4")}, "", {}});
  t.chart.push_back({"P2[5,1]", SpaceKind::Univ, 5, {Hd, B, Hb, Da("2")}, {ca("1", "1"), cb("1", "1"), ca("2", "5"), cb("2", "5")}, "", {}});
  t.chart.push_back({"P2[6,1]", SpaceKind::Univ, 6, {Hd, B, Hb, Da("2")}, {ca("1", "1"), cb("1", "1"), ca("2", "5"), cb("2", "5")}, "", {}});
  t.chart.push_back({"P2[3,2]", SpaceKind::Nested, 2, {Hd, Bd, Bb, Da("1"), Db("1")},
                     {ca("1", "1"), cb("1", "1"), ca("1", "2"), cb("1", "2"), cc_l2}, "", {}});
  // E1: two points of z' and the residual point collinear; rebuilt from its pairings with the row's curves
  t.chart.push_back({"P2[4,3]", SpaceKind::Nested, 3, {Hd, Bd, Bb, Db("1"), e1},
                     {ca("1", "1"), cb("1", "1"), cb("1", "2"), cc_l2, ca("2", "4"), cb("2", "3")},
                     "E1",
                     {{"Ca1", "3"}, {"Cb1", "2"}, {"Cbc(1,2)", "1"}, {"Cac(2,4)", "0"}}});
  t.chart.push_back({"P2[5,4]", SpaceKind::Nested, 4, {Hd, Bd, Bb, unresolved("2Db[3/2]", "2D^b_{3/2}"), e1},
                     {ca("1", "1"), cb("1", "1"), cc_l2, ca("2", "5"), cb("2", "4"), unresolved("Cc[q,4]", "C^c_{q,4}")},
                     "E1",
                     {{"Ca1", "6"}, {"Cb1", "3"}, {"Cbc(1,2)", "2"}, {"Cac(2,5)", "0"}}});
  return t;
}

}  // namespace

const std::vector<TableSpec>& catalog() {
  static const std::vector<TableSpec> tables = {
      hilb_p2_nef(), nef_p2_nested(), nef_f0_nested(), nef_fi_nested(), nef_k3_nested(), nef_p2_univ(),
      nef_f0_univ(), nef_fi_univ(),   nef_k3_univ(),   pairing_p2_hilb(), pairing_p2_nested(), eff_p2_2_1(),
      eff_p2_3_2(),  eff_summary(),   k3_g1n()};
  return tables;
}

const TableSpec& find_table(const std::string& id) {
  for (const auto& t : catalog())
    if (t.id == id) return t;
  throw Error(ErrorCode::UnknownTable, "no table '" + id + "'");
}

std::vector<TableParams> acceptance_params(const TableSpec& t) {
  std::vector<TableParams> out;
  if (t.kind == TableKind::Chart || t.fixed_n) return {TableParams{}};
  if (t.surface == "k3") {
    for (int g = 3; g <= 5; ++g)
      for (int n = g + 1; n <= g + 4; ++n) out.push_back({n, g, std::nullopt});
    return out;
  }
  int hi = t.surface == "p2" ? 10 : 8;
  if (t.surface == "fi") {
    for (int i = 1; i <= 3; ++i)
      for (int n = 2; n <= hi; ++n) out.push_back({n, std::nullopt, i});
    return out;
  }
  for (int n = 2; n <= hi; ++n) out.push_back({n, std::nullopt, std::nullopt});
  return out;
}

TableParams default_params(const TableSpec& t) { return acceptance_params(t).front(); }

std::string params_string(const TableParams& p) {
  std::string s;
  auto add = [&](const char* k, const std::optional<int>& v) {
    if (!v) return;
    if (!s.empty()) s += ' ';
    s += std::string(k) + "=" + std::to_string(*v);
  };
  add("n", p.n);
  add("g", p.g);
  add("i", p.i);
  return s;
}

Space table_space(const TableSpec& t, const TableParams& p) {
  if (t.kind == TableKind::Chart) {
    if (p.n || p.g || p.i) throw Error(ErrorCode::InvalidInput, t.id + " takes no parameters");
    return univ(3, p2());
  }
  if (p.g && t.surface != "k3") throw Error(ErrorCode::InvalidInput, t.id + " takes no genus");
  if (p.i && t.surface != "fi") throw Error(ErrorCode::InvalidInput, t.id + " takes no Hirzebruch index");
  SurfaceModel s;
  if (t.surface == "p2") s = p2();
  else if (t.surface == "p1xp1") s = p1xp1();
  else if (t.surface == "fi") {
    int i = p.i.value_or(1);
    if (i < 1) throw Error(ErrorCode::RangeError, t.id + " needs i >= 1 (use the f0 table for i = 0)");
    s = hirzebruch(i);
  } else {
    s = k3(p.g.value_or(3));
  }
  int n;
  if (t.fixed_n) {
    if (p.n && *p.n != *t.fixed_n)
      throw Error(ErrorCode::RangeError, t.id + " is fixed at n=" + std::to_string(*t.fixed_n));
    n = *t.fixed_n;
  } else {
    int lo = 2;
    if (t.surface == "k3") lo = s.index + 1;
    n = p.n.value_or(lo);
    if (n < lo) throw Error(ErrorCode::RangeError, t.id + " needs n >= " + std::to_string(lo));
  }
  return make_space(t.space, n, s);
}

}  // namespace nestcone
