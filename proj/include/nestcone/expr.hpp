#pragma once
#include <map>
#include <string>

#include "nestcone/spaces.hpp"

namespace nestcone {

struct Value {
  enum class Kind { Scalar, Div, Cur } kind = Kind::Scalar;
  Rat scalar;
  Vec coords;
};

// Grammar: integers, + - * /, parentheses, basis labels (Hdiff, Hb1, Bdiff, B, Aa, Ca1, ...),
// derived names (C0, Ca0, Cb0, Ba), parameters (n, g, i), and catalog constructors
// such as Da(n), Db(n-1), Ca(1, n+1), Cb(0, 1, n), CaNodal(), K(), f(m).
// '^' and '_' inside names are ignored, so "A^b" == "Ab" and "Hdiff_1" == "Hdiff1".
Value evaluate(const std::string& text, const Space& sp, const std::map<std::string, Rat>& extra = {});

DivClass parse_div(const std::string& text, const Space& sp, const std::map<std::string, Rat>& extra = {});
CurClass parse_cur(const std::string& text, const Space& sp, const std::map<std::string, Rat>& extra = {});
Rat parse_scalar(const std::string& text, const Space& sp, const std::map<std::string, Rat>& extra = {});

// printed forms re-parse to the same coordinates
std::string format_div(const DivClass& d);
std::string format_cur(const CurClass& c);

}  // namespace nestcone
