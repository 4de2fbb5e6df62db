#include "nestcone/expr.hpp"

#include <cctype>
#include <functional>
#include <sstream>

#include "nestcone/error.hpp"
#include "nestcone/pairing.hpp"

namespace nestcone {

namespace {

using Kind = Value::Kind;

Value scalar(Rat r) { return Value{Kind::Scalar, std::move(r), {}}; }
Value of(const DivClass& d) { return Value{Kind::Div, 0, d.coords}; }
Value of(const CurClass& c) { return Value{Kind::Cur, 0, c.coords}; }

std::string strip_label(const std::string& s) {
  std::string out;
  for (char c : s)
    if (c != '^' && c != '_') out += c;
  return out;
}

// label -> class, built once per evaluation
struct Symbols {
  std::map<std::string, Value> names;
  std::map<std::string, Rat> vars;
};

Symbols symbols_for(const Space& sp, const std::map<std::string, Rat>& extra) {
  Symbols s;
  auto db = divisor_basis(sp);
  for (size_t i = 0; i < db.size(); ++i) {
    const std::string& l = db[i].label;
    DivClass d = div_basis(sp, i);
    if (l.size() > 2 && l.substr(l.size() - 2) == "/2")
      s.names[strip_label(l.substr(0, l.size() - 2))] = of(Rat(2) * d);
    else
      s.names[strip_label(l)] = of(d);
  }
  auto cb = curve_basis(sp);
  for (size_t i = 0; i < cb.size(); ++i) s.names[strip_label(cb[i].label)] = of(cur_basis(sp, i));
  switch (sp.id.kind) {
    case SpaceKind::Hilb: s.names["C0"] = of(derived_c0(sp)); break;
    case SpaceKind::Nested:
      s.names["Ca0"] = of(derived_ca0(sp));
      s.names["Cb0"] = of(derived_cb0(sp));
      s.names["Ba"] = of(Rat(2) * (half_Bdiff(sp) + half_Bb(sp)));
      break;
    case SpaceKind::Univ: s.names["Ca0"] = of(derived_ca0(sp)); break;
    default: break;
  }
  if (sp.id.kind != SpaceKind::Surface) s.vars["n"] = sp.id.n;
  if (sp.surface.kind == SurfaceKind::K3) s.vars["g"] = sp.surface.index;
  if (sp.surface.kind == SurfaceKind::F) s.vars["i"] = sp.surface.index;
  for (const auto& [k, v] : extra) s.vars[k] = v;
  return s;
}

class Parser {
 public:
  Parser(const std::string& text, const Space& sp, const Symbols& sym) : t_(text), sp_(sp), sym_(sym) {}

  Value run() {
    Value v = expr();
    skip_ws();
    if (pos_ < t_.size()) fail(pos_, std::string("unexpected '") + t_[pos_] + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(size_t at, const std::string& msg) { throw ParseError(at, msg); }

  void skip_ws() {
    while (pos_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < t_.size() && t_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Value combine(char op, const Value& a, const Value& b, size_t at) {
    if (op == '+' || op == '-') {
      if (a.kind != b.kind) fail(at, "cannot add a scalar, divisor or curve to a different kind");
      if (a.kind == Kind::Scalar) return scalar(op == '+' ? Rat(a.scalar + b.scalar) : Rat(a.scalar - b.scalar));
      return Value{a.kind, 0, op == '+' ? add(a.coords, b.coords) : sub(a.coords, b.coords)};
    }
    if (op == '*') {
      if (a.kind == Kind::Scalar && b.kind == Kind::Scalar) return scalar(a.scalar * b.scalar);
      if (a.kind == Kind::Scalar) return Value{b.kind, 0, scale(a.scalar, b.coords)};
      if (b.kind == Kind::Scalar) return Value{a.kind, 0, scale(b.scalar, a.coords)};
      fail(at, "product of two classes is not a class");
    }
    // '/'
    if (b.kind != Kind::Scalar) fail(at, "can only divide by a scalar");
    if (sgn(b.scalar) == 0) fail(at, "division by zero");
    if (a.kind == Kind::Scalar) return scalar(a.scalar / b.scalar);
    return Value{a.kind, 0, scale(1 / b.scalar, a.coords)};
  }

  Value expr() {
    Value v = term();
    for (;;) {
      skip_ws();
      size_t at = pos_;
      if (accept('+')) v = combine('+', v, term(), at);
      else if (accept('-')) v = combine('-', v, term(), at);
      else return v;
    }
  }

  Value term() {
    Value v = unary();
    for (;;) {
      skip_ws();
      size_t at = pos_;
      if (accept('*')) v = combine('*', v, unary(), at);
      else if (accept('/')) v = combine('/', v, unary(), at);
      else if (pos_ < t_.size() && v.kind == Kind::Scalar &&
               (std::isalpha(static_cast<unsigned char>(t_[pos_])) || t_[pos_] == '('))
        v = combine('*', v, unary(), at);  // implicit product: "2Hdiff", "3(Hb - Aa)"
      else return v;
    }
  }

  Value unary() {
    skip_ws();
    size_t at = pos_;
    if (accept('-')) {
      Value v = unary();
      return combine('*', scalar(-1), v, at);
    }
    if (accept('+')) return unary();
    return primary();
  }

  Value primary() {
    skip_ws();
    if (pos_ >= t_.size()) fail(pos_, "unexpected end of expression");
    size_t at = pos_;
    char c = t_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[pos_]))) ++pos_;
      return scalar(Rat(mpz_class(t_.substr(at, pos_ - at))));
    }
    if (accept('(')) {
      Value v = expr();
      if (!accept(')')) fail(pos_, "expected ')'");
      return v;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (pos_ < t_.size() && (std::isalnum(static_cast<unsigned char>(t_[pos_])) || t_[pos_] == '_' || t_[pos_] == '^'))
        ++pos_;
      std::string raw = t_.substr(at, pos_ - at);
      std::string name = strip_label(raw);
      skip_ws();
      if (pos_ < t_.size() && t_[pos_] == '(') {
        ++pos_;
        std::vector<std::pair<Value, size_t>> args;
        skip_ws();
        if (!accept(')')) {
          for (;;) {
            skip_ws();
            size_t a_at = pos_;
            args.emplace_back(expr(), a_at);
            if (accept(')')) break;
            if (!accept(',')) fail(pos_, "expected ',' or ')'");
          }
        }
        return call(name, args, at);
      }
      if (auto it = sym_.vars.find(name); it != sym_.vars.end()) return scalar(it->second);
      if (auto it = sym_.names.find(name); it != sym_.names.end()) return it->second;
      fail(at, "unknown name '" + raw + "' on " + sp_.name());
    }
    fail(at, std::string("unexpected '") + c + "'");
  }

  long as_int(const std::pair<Value, size_t>& a) {
    if (a.first.kind != Kind::Scalar) fail(a.second, "expected a number");
    if (a.first.scalar.get_den() != 1) fail(a.second, "expected an integer");
    if (!a.first.scalar.get_num().fits_slong_p()) fail(a.second, "integer out of range");
    return a.first.scalar.get_num().get_si();
  }

  Rat as_rat(const std::pair<Value, size_t>& a) {
    if (a.first.kind != Kind::Scalar) fail(a.second, "expected a number");
    return a.first.scalar;
  }

  Value call(const std::string& name, const std::vector<std::pair<Value, size_t>>& args, size_t at) {
    size_t rho = sp_.rho();
    auto need = [&](size_t k) {
      if (args.size() != k)
        fail(at, name + " takes " + std::to_string(k) + " argument" + (k == 1 ? "" : "s") + " on " + sp_.name());
    };
    auto coeffs = [&]() {
      need(rho);
      Vec m;
      for (const auto& a : args) m.push_back(as_rat(a));
      return m;
    };
    auto family = [&](const std::function<CurClass(const Space&, const Gamma&, int)>& f) {
      need(rho + 1);
      Gamma g;
      for (size_t k = 0; k < rho; ++k) g.push_back(as_int(args[k]));
      return of(f(sp_, g, static_cast<int>(as_int(args[rho]))));
    };
    try {
      if (name == "f") {
        need(1);
        return scalar(k3_slope(sp_.surface, static_cast<int>(as_int(args[0]))));
      }
      if (name == "D") return of(tautological(sp_, coeffs()));
      if (name == "Da") return of(taut_a(sp_, coeffs()));
      if (name == "Db") return of(taut_b(sp_, coeffs()));
      if (name == "C" || name == "Ca") return family(curve_family_a);
      if (name == "Cb") return family(curve_family_b);
      if (name == "Cbp") return family(curve_family_b_printed);
      if (name == "Cac") return family(chart_curve_a);
      if (name == "Cbc") return family(chart_curve_b);
      if (name == "Cnodal" || name == "g1n") {
        need(0);
        return of(g1n_curve(sp_));
      }
      if (name == "CaNodal" || name == "CbNodal") {
        need(0);
        auto pr = nodal_curves_k3(sp_);
        if (name == "CaNodal") return of(pr.first);
        if (!pr.second) fail(at, "no C^b nodal curve on " + sp_.name());
        return of(*pr.second);
      }
      if (name == "K") {
        need(0);
        return of(canonical_class(sp_));
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      fail(at, e.what());
    }
    fail(at, "unknown function '" + name + "'");
  }

  const std::string& t_;
  const Space& sp_;
  const Symbols& sym_;
  size_t pos_ = 0;
};

template <class T>
std::string format_terms(const Vec& coords, const std::vector<BasisElement>& basis) {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coords.size(); ++i) {
    const Rat& c = coords[i];
    if (sgn(c) == 0) continue;
    Rat a = abs(c);
    if (first) os << (sgn(c) < 0 ? "-" : "");
    else os << (sgn(c) < 0 ? " - " : " + ");
    if (a != 1) os << to_string(a) << '*';
    os << basis[i].label;
    first = false;
  }
  return first ? "0" : os.str();
}

}  // namespace

Value evaluate(const std::string& text, const Space& sp, const std::map<std::string, Rat>& extra) {
  Symbols sym = symbols_for(sp, extra);
  return Parser(text, sp, sym).run();
}

DivClass parse_div(const std::string& text, const Space& sp, const std::map<std::string, Rat>& extra) {
  Value v = evaluate(text, sp, extra);
  if (v.kind == Kind::Scalar && sgn(v.scalar) == 0) return div_zero(sp);
  if (v.kind != Kind::Div) throw ParseError(0, "'" + text + "' is not a divisor class");
  return DivClass{sp, v.coords};
}

CurClass parse_cur(const std::string& text, const Space& sp, const std::map<std::string, Rat>& extra) {
  Value v = evaluate(text, sp, extra);
  if (v.kind == Kind::Scalar && sgn(v.scalar) == 0) return cur_zero(sp);
  if (v.kind != Kind::Cur) throw ParseError(0, "'" + text + "' is not a curve class");
  return CurClass{sp, v.coords};
}

Rat parse_scalar(const std::string& text, const Space& sp, const std::map<std::string, Rat>& extra) {
  Value v = evaluate(text, sp, extra);
  if (v.kind != Kind::Scalar) throw ParseError(0, "'" + text + "' is not a number");
  return v.scalar;
}

std::string format_div(const DivClass& d) { return format_terms<DivClass>(d.coords, divisor_basis(d.space)); }
std::string format_cur(const CurClass& c) { return format_terms<CurClass>(c.coords, curve_basis(c.space)); }

}  // namespace nestcone
