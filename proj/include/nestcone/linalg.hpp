#pragma once
#include <optional>

#include "nestcone/rat.hpp"

namespace nestcone {

// reduced row echelon form; returns pivot columns
std::vector<size_t> rref(Mat& m);
size_t rank(const Mat& m);

// basis of {x : m x = 0}; cols is needed when m has no rows
Mat nullspace(const Mat& m, size_t cols);

enum class SolveStatus { Unique, UnderDetermined, Inconsistent };
struct SolveResult {
  SolveStatus status;
  Vec x;  // a solution when status != Inconsistent
};
// solves a x = b
SolveResult solve(const Mat& a, const Vec& b, size_t cols);

std::optional<Mat> inverse(const Mat& m);

}  // namespace nestcone
