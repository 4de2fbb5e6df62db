#pragma once
#include <gmpxx.h>

#include <string>
#include <vector>

namespace nestcone {

using Rat = mpq_class;
using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>;

// "p/q", or "p" when the denominator is 1
std::string to_string(const Rat& r);
Rat parse_rat(const std::string& s);

// p/q in lowest terms; mpq_class(p, q) alone does not canonicalize
Rat ratio(long p, long q);

Rat dot(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Rat& s, const Vec& a);
bool is_zero(const Vec& a);
Vec zeros(size_t n);
Vec unit(size_t n, size_t i);
Vec from_ints(std::initializer_list<long> xs);

// scaled to a primitive integer vector; direction preserved
Vec primitive(const Vec& a);

// lexicographic on entries
bool lex_less(const Vec& a, const Vec& b);

Mat transpose(const Mat& m);
Vec mat_vec(const Mat& m, const Vec& v);   // m * v
Vec vec_mat(const Vec& v, const Mat& m);   // v^T * m

}  // namespace nestcone
