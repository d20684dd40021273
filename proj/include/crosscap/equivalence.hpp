#pragma once
// Tangent spaces to the variety-preserving contact orbits of germs over the
// cross-cap target, Nakayama-certified codimension, determinacy bounds and
// complete transversals — all inside truncated jet modules.

#include "crosscap/crosscap.hpp"
#include "crosscap/jetspace.hpp"

namespace crosscap {

// Generator bundle for the tangent recipes: the ambient variables and the
// derivations tangent to the variety (for a cross cap: the scaling field plus
// the three families).
struct TangentContext {
  SpacePtr vars;
  std::vector<PolyVec> fields;
};

TangentContext tangent_context(const CrossCapContext&);
TangentContext user_context(SpacePtr vars, std::vector<PolyVec> fields);

enum class TangentVariant { extended, one_jet_identity };

// extended:        span_E{ xi(h) : xi in fields } + <h_i e_j>_E
// one_jet_identity: span_E{ x_a * xi(h) } + <x_a h_i e_j>_E — only products
//                   with a variable enter, because the fields themselves may
//                   carry linear parts and so need not fix one-jets
Subspace tangent_space(const TangentContext&, const GermMap& h, TangentVariant,
                       int trunc);

struct CodimReport {
  bool finite = false;  // false: not certified finite up to max_degree
  int codim = -1;
  std::vector<PolyVec> normal_basis;   // monomial-vectors, graded-lex order
  int stabilization_degree = -1;       // least d with M_d inside T_e at trunc d
  std::optional<int> determinacy;      // equals the stabilization degree
  int max_degree = 0;
};

CodimReport codimension(const TangentContext&, const GermMap& h,
                        int max_degree = 12);

enum class DeterminacyMode { via_Ke, via_K1 };

// least l <= max_degree with M_l inside T_e(trunc l) (via_Ke), or with
// M_{l+1} inside T_1(trunc l+1) (via_K1); nullopt when none certifies
std::optional<int> determinacy_bound(const TangentContext&, const GermMap& h,
                                     DeterminacyMode, int max_degree = 12);

// minimal monic set G of degree-d monomial-vectors with
// M_d inside T_1(jet, trunc d) + span(G); jet must have degree <= d-1
std::vector<PolyVec> complete_transversal(const TangentContext&,
                                          const GermMap& jet, int d);

}  // namespace crosscap
