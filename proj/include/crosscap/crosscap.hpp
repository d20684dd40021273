#pragma once
// Minimal cross caps phi_k, the finite family of liftable vector fields on
// their image variety, exact lift verification, and restriction of transverse
// germs to the source ("sharp pullback").

#include <optional>
#include <string>

#include "crosscap/algebra.hpp"

namespace crosscap {

// Weighted coordinates:
//   source  u1..u_{k-2} (weight k-i), v1..v_{k-1} (weight k-i), y (weight 1)
//   target  U1..U_{k-2}, V1..V_{k-1} (weight k-i), W1, W2 (weight k)
// phi_k = (u, v, y^k + sum u_i y^i, sum v_i y^i).
struct CrossCapContext {
  int k = 0;
  SpacePtr source;
  SpacePtr target;
  GermMap phi;                    // 2k-1 components over source
  PolyVec euler;                  // weighted Euler field, over target
  std::vector<PolyVec> families;  // 3(k-1) fields, ordered (family, j)

  std::vector<PolyVec> theta() const;  // Euler first, then families
};

CrossCapContext minimal_crosscap(int k);  // k >= 2

// family in 1..3, j in 1..k-1; components are polynomials of standard degree
// <= 2 (index conventions collapse some quadratic terms to linear ones)
PolyVec family_field(const CrossCapContext&, int family, int j);

struct LiftResult {
  std::optional<PolyVec> lift;  // eta over source with d(phi)(eta) = xi o phi
  std::string failure;          // nonempty iff lift is absent
  std::optional<int> obstruction_degree;  // order of the residual on failure

  bool ok() const { return lift.has_value(); }
};

// Decides solvability of d(phi)(eta) = xi o phi exactly. The first 2k-3 rows
// force eta on the u,v coordinates; the W1 row determines eta_y by division
// by d(W1 o phi)/dy, whose y-leading coefficient k is a unit, so polynomial
// solvability here coincides with formal solvability; the W2 row is then a
// pure identity check. Lifts are unique when they exist.
LiftResult verify_liftable(const CrossCapContext&, const PolyVec& xi);

struct PullbackError : std::runtime_error {
  explicit PullbackError(const std::string& msg) : std::runtime_error(msg) {}
};

// Restricts phi_k to phi_k^{-1}(h^{-1}(0)) for a germ h over the target whose
// zero set is eliminable: each component must expose a U/V coordinate that
// occurs in it only as a lone linear term and whose source counterpart does
// not reappear in the composite of the rest. Throws PullbackError when the
// composite h o phi_k fails to have full linear rank (non-transverse germ) or
// when no component pivot exists.
GermMap sharp_pullback(const CrossCapContext&, const GermMap& h);

// weighted shift of a quasihomogeneous field over its space (term weight
// minus coordinate weight, constant across the field); nullopt otherwise
std::optional<int> quasi_shift(const PolyVec& field);

}  // namespace crosscap
