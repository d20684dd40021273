#pragma once
// Finite-dimensional truncated jet modules: the free module E^q modulo terms
// of standard degree > d, with exact linear algebra on coordinate vectors.

#include <map>
#include <utility>
#include <vector>

#include "crosscap/algebra.hpp"
#include "crosscap/rref.hpp"

namespace crosscap {

// Basis of the degree-<=d jet module over `space` with q components.
// Columns: monomials in graded-lex ascending order, component index varying
// fastest (column = monomial_index * q + component).
struct JetBasis {
  SpacePtr space;
  int q = 1;
  int degree = 0;
  std::vector<Monomial> monomials;
  std::map<Monomial, int> index;

  int dim() const { return static_cast<int>(monomials.size()) * q; }
  int column(const Monomial& m, int comp) const;
  std::pair<Monomial, int> column_info(int col) const;  // (monomial, component)
  PolyVec unit_vector(int col) const;
};

JetBasis make_jet_basis(SpacePtr space, int q, int degree);
bool same_basis(const JetBasis&, const JetBasis&);

// terms of standard degree > basis.degree are dropped
RatRow vectorize(const JetBasis&, const PolyVec&);
PolyVec devectorize(const JetBasis&, const RatRow&);

struct Subspace {
  JetBasis basis;
  std::vector<RatRow> rows;  // canonical RREF, monic, pivots ascending
  std::vector<int> pivots;

  int dim() const { return static_cast<int>(rows.size()); }
};

Subspace span_rows(JetBasis basis, std::vector<RatRow> raw);

// span over E of m*g (all monomials m with |m| <= degree) plus the extra
// vectors as-is, inside the truncated jet module
Subspace module_span(const std::vector<PolyVec>& gens,
                     const std::vector<PolyVec>& extras, const JetBasis& ambient);

bool contains(const Subspace&, const PolyVec&);
// quotient dimension and the monomial-vector basis of the complement
std::pair<int, std::vector<PolyVec>> quotient_dim(const Subspace&);

// all monomial-vectors of standard degree exactly d, in column order
std::vector<PolyVec> degree_slice(const JetBasis&, int d);

// minimal subset of rows of m lifting a basis of m/(m cap s); greedy in row
// order of m, so for a monomial-spanned m the result is monomial-vectors
std::vector<PolyVec> homogeneous_complement(const Subspace& s, const Subspace& m);

}  // namespace crosscap
