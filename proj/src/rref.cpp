#include "crosscap/rref.hpp"

#include <cstddef>

namespace crosscap {

bool row_is_zero(const RatRow& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

namespace {

// r -= r[col] * prow, where prow is monic at col and zero before it
inline void eliminate(RatRow& r, const RatRow& prow, int col, int n) {
  if (r[col] == 0) return;
  Rat f = r[col];
  for (int j = col; j < n; ++j)
    if (prow[j] != 0) r[j] -= f * prow[j];
}

template <typename Eliminator>
std::vector<int> rref_impl(std::vector<RatRow>& rows, Eliminator eliminate_all) {
  std::vector<int> pivots;
  if (rows.empty()) return pivots;
  const int n = static_cast<int>(rows.front().size());
  for (const auto& r : rows)
    if (static_cast<int>(r.size()) != n)
      throw std::invalid_argument("rref: ragged rows");
  std::size_t rank = 0;
  for (int col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t sel = rank;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[rank], rows[sel]);
    if (rows[rank][col] != 1) {
      Rat inv = 1 / rows[rank][col];
      for (int j = col; j < n; ++j)
        if (rows[rank][j] != 0) rows[rank][j] *= inv;
    }
    eliminate_all(rows, rank, col, n);
    pivots.push_back(col);
    ++rank;
  }
  rows.resize(rank);  // Gauss-Jordan leaves rows past `rank` identically zero
  return pivots;
}

}  // namespace

std::vector<int> rref_serial(std::vector<RatRow>& rows) {
  return rref_impl(rows, [](std::vector<RatRow>& rs, std::size_t rank, int col,
                            int n) {
    for (std::size_t i = 0; i < rs.size(); ++i)
      if (i != rank) eliminate(rs[i], rs[rank], col, n);
  });
}

std::vector<int> rref_parallel(std::vector<RatRow>& rows) {
  return rref_impl(rows, [](std::vector<RatRow>& rs, std::size_t rank, int col,
                            int n) {
    const std::ptrdiff_t m = static_cast<std::ptrdiff_t>(rs.size());
    const RatRow& prow = rs[rank];
#pragma omp parallel for schedule(dynamic, 8)
    for (std::ptrdiff_t i = 0; i < m; ++i) {
      if (static_cast<std::size_t>(i) == rank) continue;
      eliminate(rs[i], prow, col, n);
    }
  });
}

std::vector<int> rref(std::vector<RatRow>& rows) {
#ifdef _OPENMP
  return rref_parallel(rows);
#else
  return rref_serial(rows);
#endif
}

RatRow reduce_row(const std::vector<RatRow>& rows, const std::vector<int>& pivots,
                  RatRow v) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (v[pivots[i]] == 0) continue;
    Rat f = v[pivots[i]];  // copy: the loop below overwrites v[pivots[i]]
    const RatRow& r = rows[i];
    for (std::size_t j = 0; j < v.size(); ++j)
      if (r[j] != 0) v[j] -= f * r[j];
  }
  return v;
}

}  // namespace crosscap
