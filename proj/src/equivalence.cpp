#include "crosscap/equivalence.hpp"

namespace crosscap {

TangentContext tangent_context(const CrossCapContext& ctx) {
  return TangentContext{ctx.target, ctx.theta()};
}

TangentContext user_context(SpacePtr vars, std::vector<PolyVec> fields) {
  for (const auto& f : fields) {
    if (!same_space(f.space(), vars))
      throw std::invalid_argument("user_context: field space mismatch");
    if (f.size() != vars->size())
      throw std::invalid_argument("user_context: field length != #variables");
  }
  return TangentContext{std::move(vars), std::move(fields)};
}

namespace {

void validate(const TangentContext& tc, const GermMap& h) {
  if (!same_space(h.source, tc.vars))
    throw std::invalid_argument("tangent_space: germ not over the context vars");
  for (const auto& comp : h.components)
    if (comp.constant_term() != 0)
      throw std::invalid_argument("tangent_space: germ must vanish at 0");
}

bool fields_vanish_at_origin(const TangentContext& tc) {
  for (const auto& f : tc.fields)
    for (const auto& p : f.c)
      if (p.constant_term() != 0) return false;
  return true;
}

std::vector<PolyVec> ideal_times_basis(const GermMap& h) {
  std::vector<PolyVec> out;
  const int q = h.q();
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) {
      PolyVec v = PolyVec::zero(h.source, q);
      v.c[j] = h.components[i];
      out.push_back(std::move(v));
    }
  return out;
}

std::vector<PolyVec> times_variables(const std::vector<PolyVec>& vecs,
                                     const SpacePtr& vars) {
  std::vector<PolyVec> out;
  for (const auto& v : vecs)
    for (int a = 0; a < vars->size(); ++a)
      out.push_back(Poly::variable(vars, a) * v);
  return out;
}

}  // namespace

Subspace tangent_space(const TangentContext& tc, const GermMap& h,
                       TangentVariant variant, int trunc) {
  validate(tc, h);
  JetBasis jb = make_jet_basis(tc.vars, h.q(), trunc);
  std::vector<PolyVec> gens;
  for (const auto& f : tc.fields) gens.push_back(apply_derivation(f, h));
  for (auto& v : ideal_times_basis(h)) gens.push_back(std::move(v));
  if (variant == TangentVariant::one_jet_identity)
    gens = times_variables(gens, tc.vars);
  return module_span(gens, {}, jb);
}

namespace {

// is every degree-d monomial-vector inside s?
bool slice_contained(const Subspace& s, int d) {
  for (const auto& mv : degree_slice(s.basis, d))
    if (!contains(s, mv)) return false;
  return true;
}

}  // namespace

CodimReport codimension(const TangentContext& tc, const GermMap& h,
                        int max_degree) {
  if (max_degree < 2)
    throw std::invalid_argument("codimension: need max_degree >= 2");
  CodimReport rep;
  rep.max_degree = max_degree;
  const bool vanishing = fields_vanish_at_origin(tc);
  for (int d = 1; d <= max_degree; ++d) {
    Subspace s = tangent_space(tc, h, TangentVariant::extended, d);
    if (!slice_contained(s, d)) continue;
    // Nakayama: M_d inside T + m^{d+1} theta pins the quotient at degree d
    auto [dim, basis] = quotient_dim(s);
    rep.finite = true;
    rep.codim = dim;
    rep.normal_basis = std::move(basis);
    rep.stabilization_degree = d;
    // the same inclusion certifies d-determinacy, provided the fields vanish
    if (vanishing) rep.determinacy = d;
    return rep;
  }
  return rep;
}

std::optional<int> determinacy_bound(const TangentContext& tc, const GermMap& h,
                                     DeterminacyMode mode, int max_degree) {
  if (max_degree < 1)
    throw std::invalid_argument("determinacy_bound: need max_degree >= 1");
  if (mode == DeterminacyMode::via_Ke && !fields_vanish_at_origin(tc))
    throw std::invalid_argument(
        "determinacy_bound: via_Ke needs fields vanishing at 0");
  for (int l = 1; l <= max_degree; ++l) {
    Subspace s =
        mode == DeterminacyMode::via_Ke
            ? tangent_space(tc, h, TangentVariant::extended, l)
            : tangent_space(tc, h, TangentVariant::one_jet_identity, l + 1);
    if (slice_contained(s, mode == DeterminacyMode::via_Ke ? l : l + 1))
      return l;
  }
  return std::nullopt;
}

std::vector<PolyVec> complete_transversal(const TangentContext& tc,
                                          const GermMap& jet, int d) {
  if (d < 2) throw std::invalid_argument("complete_transversal: need d >= 2");
  if (jet.components.empty())
    throw std::invalid_argument("complete_transversal: empty jet");
  if (auto deg = PolyVec{jet.components}.degree(); deg && *deg > d - 1)
    throw std::invalid_argument(
        "complete_transversal: jet degree must be <= d-1");
  Subspace t1 = tangent_space(tc, jet, TangentVariant::one_jet_identity, d);
  Subspace slice = module_span({}, degree_slice(t1.basis, d), t1.basis);
  return homogeneous_complement(t1, slice);
}

}  // namespace crosscap
