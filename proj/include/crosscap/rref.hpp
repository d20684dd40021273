#pragma once
// Exact reduced row echelon form over Q. The parallel kernel and the serial
// reference compute the identical canonical result (RREF is unique per row
// space); tests compare them, the bench target times them.

#include <vector>

#include "crosscap/algebra.hpp"

namespace crosscap {

using RatRow = std::vector<Rat>;

// in place; drops zero rows; returns pivot columns (ascending)
std::vector<int> rref_serial(std::vector<RatRow>& rows);
std::vector<int> rref_parallel(std::vector<RatRow>& rows);
std::vector<int> rref(std::vector<RatRow>& rows);  // default dispatch

// subtract multiples of `rows` (echelon, monic pivots) from v
RatRow reduce_row(const std::vector<RatRow>& rows, const std::vector<int>& pivots,
                  RatRow v);
bool row_is_zero(const RatRow& v);

}  // namespace crosscap
