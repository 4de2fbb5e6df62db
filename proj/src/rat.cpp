#include "nestcone/rat.hpp"

#include <algorithm>

#include "nestcone/error.hpp"

namespace nestcone {

const char* error_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidGenus: return "InvalidGenus";
    case ErrorCode::InvalidIndex: return "InvalidIndex";
    case ErrorCode::InvalidSpace: return "InvalidSpace";
    case ErrorCode::SpaceMismatch: return "SpaceMismatch";
    case ErrorCode::RangeError: return "RangeError";
    case ErrorCode::UnderDetermined: return "UnderDetermined";
    case ErrorCode::Inconsistent: return "Inconsistent";
    case ErrorCode::NotK3: return "NotK3";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::NotPointed: return "NotPointed";
    case ErrorCode::FunctionalNotPositive: return "FunctionalNotPositive";
    case ErrorCode::UnknownTable: return "UnknownTable";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Error";
}

std::string to_string(const Rat& r) {
  Rat c = r;
  c.canonicalize();
  return c.get_str();
}

Rat ratio(long p, long q) {
  if (q == 0) throw Error(ErrorCode::InvalidInput, "zero denominator");
  Rat r(p, q);
  r.canonicalize();
  return r;
}

Rat parse_rat(const std::string& s) {
  auto bad = [&] { return Error(ErrorCode::InvalidInput, "not a rational: '" + s + "'"); };
  if (s.empty()) throw bad();
  size_t slash = s.find('/');
  auto digits_ok = [](const std::string& t) {
    size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    return std::all_of(t.begin() + i, t.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!digits_ok(num) || !digits_ok(den) || den[0] == '-' || den[0] == '+') throw bad();
  mpz_class p(num), q(den);
  if (q == 0) throw Error(ErrorCode::InvalidInput, "zero denominator in '" + s + "'");
  Rat r(p, q);
  r.canonicalize();
  return r;
}

Rat dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "dot of unequal lengths");
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  return s;
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "add of unequal lengths");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "sub of unequal lengths");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec scale(const Rat& s, const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

bool is_zero(const Vec& a) {
  return std::all_of(a.begin(), a.end(), [](const Rat& x) { return sgn(x) == 0; });
}

Vec zeros(size_t n) { return Vec(n, Rat(0)); }

Vec unit(size_t n, size_t i) {
  Vec v = zeros(n);
  v.at(i) = 1;
  return v;
}

Vec from_ints(std::initializer_list<long> xs) {
  Vec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

Vec primitive(const Vec& a) {
  mpz_class l = 1;
  for (const auto& x : a) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::vector<mpz_class> ints(a.size());
  mpz_class g = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    ints[i] = a[i].get_num() * (l / a[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
  }
  Vec r(a.size());
  if (g == 0) return zeros(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = Rat(ints[i] / g);
  return r;
}

bool lex_less(const Vec& a, const Vec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](const Rat& x, const Rat& y) { return cmp(x, y) < 0; });
}

Mat transpose(const Mat& m) {
  if (m.empty()) return {};
  Mat t(m[0].size(), Vec(m.size()));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

Vec mat_vec(const Mat& m, const Vec& v) {
  Vec r(m.size());
  for (size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], v);
  return r;
}

Vec vec_mat(const Vec& v, const Mat& m) {
  if (v.size() != m.size()) throw Error(ErrorCode::DimensionMismatch, "vec_mat shape");
  size_t cols = m.empty() ? 0 : m[0].size();
  Vec r = zeros(cols);
  for (size_t i = 0; i < m.size(); ++i) {
    if (sgn(v[i]) == 0) continue;
    for (size_t j = 0; j < cols; ++j) r[j] += v[i] * m[i][j];
  }
  return r;
}

}  // namespace nestcone
