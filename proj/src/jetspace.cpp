#include "crosscap/jetspace.hpp"

#include <algorithm>
#include <cstdlib>

namespace crosscap {

namespace {

void enumerate_monomials(int nvars, int maxdeg, int var, Monomial& cur, int used,
                         std::vector<Monomial>& out) {
  if (var == nvars) {
    out.push_back(cur);
    return;
  }
  for (int e = 0; e + used <= maxdeg; ++e) {
    cur.e[var] = e;
    enumerate_monomials(nvars, maxdeg, var + 1, cur, used + e, out);
  }
  cur.e[var] = 0;
}

}  // namespace

int JetBasis::column(const Monomial& m, int comp) const {
  auto it = index.find(m);
  if (it == index.end())
    throw std::invalid_argument("JetBasis::column: monomial out of range");
  if (comp < 0 || comp >= q)
    throw std::invalid_argument("JetBasis::column: component out of range");
  return it->second * q + comp;
}

std::pair<Monomial, int> JetBasis::column_info(int col) const {
  if (col < 0 || col >= dim())
    throw std::invalid_argument("JetBasis::column_info: out of range");
  return {monomials[col / q], col % q};
}

PolyVec JetBasis::unit_vector(int col) const {
  auto [m, comp] = column_info(col);
  PolyVec v = PolyVec::zero(space, q);
  v.c[comp].terms[m] = 1;
  return v;
}

JetBasis make_jet_basis(SpacePtr space, int q, int degree) {
  if (q < 1) throw std::invalid_argument("make_jet_basis: need q >= 1");
  if (degree < 0) throw std::invalid_argument("make_jet_basis: need degree >= 0");
  JetBasis jb;
  jb.space = std::move(space);
  jb.q = q;
  jb.degree = degree;
  // refuse absurd enumerations up front instead of exhausting memory
  constexpr unsigned long long max_monomials = 400000;
  unsigned long long count = 1;
  for (int i = 1; i <= degree && count <= 100 * max_monomials; ++i)
    count = count * static_cast<unsigned long long>(jb.space->size() + i) / i;
  if (count > max_monomials)
    throw std::runtime_error(
        "truncated jet module needs more than " +
        std::to_string(max_monomials) +
        " monomials; lower the truncation degree or the variable count");
  Monomial cur{std::vector<int>(jb.space->size(), 0)};
  enumerate_monomials(jb.space->size(), degree, 0, cur, 0, jb.monomials);
  std::sort(jb.monomials.begin(), jb.monomials.end());
  for (std::size_t i = 0; i < jb.monomials.size(); ++i)
    jb.index[jb.monomials[i]] = static_cast<int>(i);
  return jb;
}

bool same_basis(const JetBasis& a, const JetBasis& b) {
  return same_space(a.space, b.space) && a.q == b.q && a.degree == b.degree;
}

RatRow vectorize(const JetBasis& jb, const PolyVec& v) {
  if (v.size() != jb.q)
    throw std::invalid_argument("vectorize: component count mismatch");
  if (!same_space(v.space(), jb.space))
    throw std::invalid_argument("vectorize: variable-space mismatch");
  RatRow row(jb.dim(), Rat(0));
  for (int comp = 0; comp < jb.q; ++comp)
    for (const auto& [m, c] : v.c[comp].terms) {
      if (m.degree() > jb.degree) continue;  // truncation is implicit
      row[jb.column(m, comp)] = c;
    }
  return row;
}

PolyVec devectorize(const JetBasis& jb, const RatRow& row) {
  if (static_cast<int>(row.size()) != jb.dim())
    throw std::invalid_argument("devectorize: dimension mismatch");
  PolyVec v = PolyVec::zero(jb.space, jb.q);
  for (int col = 0; col < jb.dim(); ++col)
    if (row[col] != 0) {
      auto [m, comp] = jb.column_info(col);
      v.c[comp].terms[m] = row[col];
    }
  return v;
}

Subspace span_rows(JetBasis basis, std::vector<RatRow> raw) {
  Subspace s{std::move(basis), std::move(raw), {}};
  s.pivots = rref(s.rows);
  return s;
}

Subspace module_span(const std::vector<PolyVec>& gens,
                     const std::vector<PolyVec>& extras,
                     const JetBasis& ambient) {
  // multiples with |m| > degree - ord(g) vanish after truncation; skip them
  struct Job {
    const PolyVec* gen;
    int max_mult_degree;
  };
  std::vector<Job> jobs;
  for (const auto& g : gens) {
    if (g.size() != ambient.q)
      throw std::invalid_argument("module_span: generator length mismatch");
    if (g.is_zero()) continue;
    jobs.push_back({&g, ambient.degree - g.order().value_or(0)});
  }
  // monomials are graded-sorted, so a prefix count per degree suffices
  std::vector<unsigned long long> upto(ambient.degree + 1, 0);
  for (const auto& m : ambient.monomials)
    if (m.degree() <= ambient.degree) ++upto[m.degree()];
  for (int d = 1; d <= ambient.degree; ++d) upto[d] += upto[d - 1];
  unsigned long long nrows = extras.size();
  for (const auto& job : jobs)
    if (job.max_mult_degree >= 0)
      nrows += upto[std::min(job.max_mult_degree, ambient.degree)];
  // dense rows: refuse matrices past the exact-arithmetic budget cleanly
  // (default sized for a ~6 GB machine; CROSSCAP_SPAN_BUDGET overrides)
  static const unsigned long long max_entries = [] {
    if (const char* s = std::getenv("CROSSCAP_SPAN_BUDGET")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(s, &end, 10);
      if (end && *end == '\0' && v > 0) return v;
    }
    return 60000000ULL;
  }();
  if (nrows * static_cast<unsigned long long>(ambient.dim()) > max_entries)
    throw std::runtime_error(
        "span matrix would need " + std::to_string(nrows) + " x " +
        std::to_string(ambient.dim()) +
        " exact entries, past the budget of " + std::to_string(max_entries) +
        "; lower the truncation degree or raise CROSSCAP_SPAN_BUDGET");
  std::vector<std::pair<const Job*, const Monomial*>> products;
  for (const auto& job : jobs)
    for (const auto& m : ambient.monomials) {
      if (m.degree() > job.max_mult_degree) continue;
      products.emplace_back(&job, &m);
    }
  std::vector<RatRow> rows(products.size() + extras.size());
  const std::ptrdiff_t np = static_cast<std::ptrdiff_t>(products.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < np; ++i) {
    Poly mono{ambient.space, {}};
    mono.terms[*products[i].second] = 1;
    rows[i] = vectorize(ambient, mono * *products[i].first->gen);
  }
  for (std::size_t i = 0; i < extras.size(); ++i)
    rows[products.size() + i] = vectorize(ambient, extras[i]);
  return span_rows(ambient, std::move(rows));
}

bool contains(const Subspace& s, const PolyVec& v) {
  return row_is_zero(reduce_row(s.rows, s.pivots, vectorize(s.basis, v)));
}

std::pair<int, std::vector<PolyVec>> quotient_dim(const Subspace& s) {
  std::vector<PolyVec> basis;
  std::size_t next = 0;
  for (int col = 0; col < s.basis.dim(); ++col) {
    if (next < s.pivots.size() && s.pivots[next] == col) {
      ++next;
      continue;
    }
    basis.push_back(s.basis.unit_vector(col));
  }
  return {static_cast<int>(basis.size()), std::move(basis)};
}

std::vector<PolyVec> degree_slice(const JetBasis& jb, int d) {
  if (d > jb.degree)
    throw std::invalid_argument("degree_slice: d exceeds basis degree");
  std::vector<PolyVec> out;
  for (int col = 0; col < jb.dim(); ++col)
    if (jb.column_info(col).first.degree() == d) out.push_back(jb.unit_vector(col));
  return out;
}

std::vector<PolyVec> homogeneous_complement(const Subspace& s,
                                            const Subspace& m) {
  if (!same_basis(s.basis, m.basis))
    throw std::invalid_argument("homogeneous_complement: ambient mismatch");
  // working reducer: pairwise-reduced rows with distinct monic pivots
  std::vector<RatRow> work = s.rows;
  std::vector<int> pivots = s.pivots;
  std::vector<PolyVec> out;
  for (const auto& row : m.rows) {
    RatRow res = reduce_row(work, pivots, row);
    int lead = -1;
    for (std::size_t j = 0; j < res.size(); ++j)
      if (res[j] != 0) {
        lead = static_cast<int>(j);
        break;
      }
    if (lead < 0) continue;
    Rat inv = 1 / res[lead];
    for (auto& x : res)
      if (x != 0) x *= inv;
    // keep the reducer pairwise-reduced so one reduce_row pass stays exact
    for (auto& w : work) {
      if (w[lead] == 0) continue;
      Rat f = w[lead];
      for (std::size_t j = 0; j < w.size(); ++j)
        if (res[j] != 0) w[j] -= f * res[j];
    }
    out.push_back(devectorize(m.basis, row));
    work.push_back(std::move(res));
    pivots.push_back(lead);
  }
  return out;
}

}  // namespace crosscap
