#include "crosscap/crosscap.hpp"

#include <algorithm>
#include <set>

#include "crosscap/rref.hpp"

namespace crosscap {

namespace {

// index layout shared by source and target: U/u block 0..k-3,
// V/v block k-2..2k-4, then W1,W2 on the target / y on the source
int uv_index(int k, bool v_block, int i) { return (v_block ? k - 2 : 0) + i - 1; }

// doubled-symbol conventions: U_k = 1, U_{k-1} = 0, anything out of range = 0
struct Symbols {
  SpacePtr target;
  int k;

  Poly U(int i) const {
    if (i == k) return Poly::constant(target, 1);
    if (i >= 1 && i <= k - 2) return Poly::variable(target, uv_index(k, false, i));
    return Poly::zero(target);
  }
  Poly V(int i) const {
    if (i >= 1 && i <= k - 1) return Poly::variable(target, uv_index(k, true, i));
    return Poly::zero(target);
  }
  Poly W1() const { return Poly::variable(target, 2 * k - 3); }
  Poly W2() const { return Poly::variable(target, 2 * k - 2); }
  Poly c(long n) const { return Poly::constant(target, Rat(n)); }
};

}  // namespace

std::vector<PolyVec> CrossCapContext::theta() const {
  std::vector<PolyVec> out{euler};
  out.insert(out.end(), families.begin(), families.end());
  return out;
}

CrossCapContext minimal_crosscap(int k) {
  if (k < 2) throw std::invalid_argument("minimal_crosscap: need k >= 2");
  std::vector<std::string> src_names, tgt_names;
  std::vector<int> src_w, tgt_w;
  for (int i = 1; i <= k - 2; ++i) {
    src_names.push_back("u" + std::to_string(i));
    tgt_names.push_back("U" + std::to_string(i));
    src_w.push_back(k - i);
    tgt_w.push_back(k - i);
  }
  for (int i = 1; i <= k - 1; ++i) {
    src_names.push_back("v" + std::to_string(i));
    tgt_names.push_back("V" + std::to_string(i));
    src_w.push_back(k - i);
    tgt_w.push_back(k - i);
  }
  src_names.push_back("y");
  src_w.push_back(1);
  tgt_names.push_back("W1");
  tgt_names.push_back("W2");
  tgt_w.push_back(k);
  tgt_w.push_back(k);

  CrossCapContext ctx;
  ctx.k = k;
  ctx.source = make_space(std::move(src_names), std::move(src_w));
  ctx.target = make_space(std::move(tgt_names), std::move(tgt_w));

  const int y = 2 * k - 3;
  std::vector<Poly> comps;
  for (int i = 1; i <= k - 2; ++i)
    comps.push_back(Poly::variable(ctx.source, uv_index(k, false, i)));
  for (int i = 1; i <= k - 1; ++i)
    comps.push_back(Poly::variable(ctx.source, uv_index(k, true, i)));
  Poly w1 = Poly::variable(ctx.source, y, k);
  for (int i = 1; i <= k - 2; ++i)
    w1 += Poly::variable(ctx.source, uv_index(k, false, i)) *
          Poly::variable(ctx.source, y, i);
  Poly w2 = Poly::zero(ctx.source);
  for (int i = 1; i <= k - 1; ++i)
    w2 += Poly::variable(ctx.source, uv_index(k, true, i)) *
          Poly::variable(ctx.source, y, i);
  comps.push_back(std::move(w1));
  comps.push_back(std::move(w2));
  ctx.phi = make_germ(ctx.source, std::move(comps));

  PolyVec euler;
  for (int m = 0; m < ctx.target->size(); ++m)
    euler.c.push_back(Rat(ctx.target->weights[m]) *
                      Poly::variable(ctx.target, m));
  ctx.euler = std::move(euler);

  for (int f = 1; f <= 3; ++f)
    for (int j = 1; j <= k - 1; ++j)
      ctx.families.push_back(family_field(ctx, f, j));
  return ctx;
}

PolyVec family_field(const CrossCapContext& ctx, int family, int j) {
  const int k = ctx.k;
  if (family < 1 || family > 3)
    throw std::invalid_argument("family_field: family must be 1..3");
  if (j < 1 || j > k - 1)
    throw std::invalid_argument("family_field: j must be 1..k-1");
  Symbols s{ctx.target, k};
  PolyVec out = PolyVec::zero(ctx.target, 2 * k - 1);

  auto& comp = out.c;
  const int w1_idx = 2 * k - 3, w2_idx = 2 * k - 2;

  if (family == 1) {
    for (int i = 1; i <= k - 2; ++i)
      comp[uv_index(k, false, i)] =
          s.c(static_cast<long>(k - i) * (k - j)) * s.U(i) * s.U(j);
    for (int i = 1; i <= k - 1; ++i) {
      Poly b = Poly::zero(ctx.target);
      for (int r = 1; r <= i - 1; ++r) b += s.c(k) * s.U(i + j - r) * s.V(r);
      for (int r = 1; r <= i; ++r) b -= s.c(k) * s.U(r) * s.V(i + j - r);
      b -= s.c(static_cast<long>(i - 1) * (k - j)) * s.U(j) * s.V(i);
      b += s.c(k) * s.V(i + j) * s.W1();
      b -= s.c(k) * s.U(i + j) * s.W2();
      comp[uv_index(k, true, i)] = std::move(b);
    }
    comp[w1_idx] = s.c(static_cast<long>(k) * (k - j)) * s.U(j) * s.W1();
    comp[w2_idx] = -(s.c(k) * s.V(j) * s.W1()) + s.c(k - j) * s.U(j) * s.W2();
    return out;
  }

  if (family == 2) {
    for (int i = 1; i <= k - 2; ++i) {
      Poly a = -(s.c(static_cast<long>(k) * (k + i - j + 1)) *
                 s.U(k + i - j + 1) * s.W1());
      for (int r = 1; r <= i; ++r)
        a += s.c(static_cast<long>(k) * (k + i - j - 2 * r + 1)) * s.U(r) *
             s.U(k + i - j - r + 1);
      a -= s.c(static_cast<long>(j) * (i + 1)) * s.U(i + 1) * s.U(k - j);
      comp[uv_index(k, false, i)] = std::move(a);
    }
    for (int i = 1; i <= k - 1; ++i) {
      Poly b = -(s.c(static_cast<long>(k) * (k + i - j + 1)) *
                 s.V(k + i - j + 1) * s.W1());
      for (int r = 1; r <= i; ++r)
        b += s.c(static_cast<long>(k) * (k + i - j - r + 1)) * s.U(r) *
             s.V(k + i - j - r + 1);
      for (int r = 1; r <= i; ++r)
        b -= s.c(static_cast<long>(k) * r) * s.U(k + i - j - r + 1) * s.V(r);
      b -= s.c(static_cast<long>(j) * (i + 1)) * s.U(k - j) * s.V(i + 1);
      comp[uv_index(k, true, i)] = std::move(b);
    }
    comp[w1_idx] = s.c(static_cast<long>(k) * (k - j + 1)) * s.U(k - j + 1) *
                       s.W1() +
                   s.c(j) * s.U(1) * s.U(k - j);
    comp[w2_idx] = s.c(static_cast<long>(k) * (k - j + 1)) * s.V(k - j + 1) *
                       s.W1() +
                   s.c(j) * s.V(1) * s.U(k - j);
    return out;
  }

  for (int i = 1; i <= k - 2; ++i) {
    Poly a = -(s.c(static_cast<long>(k) * (k + i - j + 1)) * s.U(k + i - j + 1) *
               s.W2());
    for (int r = 1; r <= i; ++r)
      a += s.c(static_cast<long>(k) * (k + i - j - r + 1)) *
           s.U(k + i - j - r + 1) * s.V(r);
    for (int r = 1; r <= i; ++r)
      a -= s.c(static_cast<long>(k) * r) * s.U(r) * s.V(k + i - j - r + 1);
    a -= s.c(static_cast<long>(k) * (i + 1)) * s.U(i + 1) * s.V(k - j);
    comp[uv_index(k, false, i)] = std::move(a);
  }
  for (int i = 1; i <= k - 1; ++i) {
    Poly b = -(s.c(static_cast<long>(k) * (k + i - j + 1)) * s.V(k + i - j + 1) *
               s.W2());
    for (int r = 1; r <= i; ++r)
      b += s.c(static_cast<long>(k) * (k + i - j - 2 * r + 1)) * s.V(r) *
           s.V(k + i - j - r + 1);
    b -= s.c(static_cast<long>(k) * (i + 1)) * s.V(i + 1) * s.V(k - j);
    comp[uv_index(k, true, i)] = std::move(b);
  }
  comp[w1_idx] = s.c(static_cast<long>(k) * (k - j + 1)) * s.U(k - j + 1) *
                     s.W2() +
                 s.c(k) * s.U(1) * s.V(k - j);
  comp[w2_idx] = s.c(static_cast<long>(k) * (k - j + 1)) * s.V(k - j + 1) *
                     s.W2() +
                 s.c(k) * s.V(1) * s.V(k - j);
  return out;
}

namespace {

int y_degree(const Poly& p, int y) {
  int d = -1;
  for (const auto& [m, c] : p.terms) d = std::max(d, m.e[y]);
  return d;
}

// coefficient of y^d, as a polynomial with the y-exponent stripped
Poly y_coefficient(const Poly& p, int y, int d) {
  Poly out = Poly::zero(p.space);
  for (const auto& [m, c] : p.terms)
    if (m.e[y] == d) {
      Monomial stripped = m;
      stripped.e[y] = 0;
      out.terms.emplace(std::move(stripped), c);
    }
  return out;
}

}  // namespace

LiftResult verify_liftable(const CrossCapContext& ctx, const PolyVec& xi) {
  const int k = ctx.k;
  if (xi.size() != 2 * k - 1)
    throw std::invalid_argument("verify_liftable: field length != 2k-1");
  if (!same_space(xi.space(), ctx.target))
    throw std::invalid_argument("verify_liftable: field not over the target");

  const int y = 2 * k - 3;
  PolyVec composed = PolyVec::zero(ctx.source, 2 * k - 1);
  for (int m = 0; m < 2 * k - 1; ++m)
    composed.c[m] = substitute(xi.c[m], ctx.source, ctx.phi.components);

  // rows for the u,v coordinates force eta there
  PolyVec eta = PolyVec::zero(ctx.source, 2 * k - 2);
  for (int a = 0; a < 2 * k - 3; ++a) eta.c[a] = composed.c[a];

  // W1 row: sum_i eta_u_i y^i + eta_y * d(W1 o phi)/dy = composed_W1
  Poly residual = composed.c[2 * k - 3];
  for (int i = 1; i <= k - 2; ++i)
    residual -= eta.c[uv_index(k, false, i)] * Poly::variable(ctx.source, y, i);
  Poly g = partial(ctx.phi.components[2 * k - 3], y);  // monic*k in y^{k-1}
  Poly eta_y = Poly::zero(ctx.source);
  while (!residual.is_zero() && y_degree(residual, y) >= k - 1) {
    int d = y_degree(residual, y);
    Poly qt = Rat(1, k) * y_coefficient(residual, y, d) *
              Poly::variable(ctx.source, y, d - (k - 1));
    eta_y += qt;
    residual -= qt * g;
  }
  if (!residual.is_zero()) {
    LiftResult r;
    r.failure = "W1 row not divisible: remainder " + poly_str(residual);
    r.obstruction_degree = residual.order();
    return r;
  }
  eta.c[y] = std::move(eta_y);

  // W2 row is now a pure check
  Poly w2 = Poly::zero(ctx.source);
  for (int i = 1; i <= k - 1; ++i)
    w2 += eta.c[uv_index(k, true, i)] * Poly::variable(ctx.source, y, i);
  w2 += eta.c[y] * partial(ctx.phi.components[2 * k - 2], y);
  if (!(w2 == composed.c[2 * k - 2])) {
    Poly diff = composed.c[2 * k - 2] - w2;
    LiftResult r;
    r.failure = "W2 row mismatch: residual " + poly_str(diff);
    r.obstruction_degree = diff.order();
    return r;
  }

  // defining identity, re-verified end to end
  if (!(apply_derivation(eta, ctx.phi) == composed))
    throw std::logic_error("verify_liftable: internal identity check failed");
  LiftResult r;
  r.lift = std::move(eta);
  return r;
}

std::optional<int> quasi_shift(const PolyVec& field) {
  const auto& sp = *field.space();
  std::optional<int> shift;
  for (int m = 0; m < field.size(); ++m)
    for (const auto& [mono, c] : field.c[m].terms) {
      int s = mono.weighted_degree(sp) - sp.weights[m];
      if (shift && *shift != s) return std::nullopt;
      shift = s;
    }
  return shift ? shift : std::optional<int>(0);
}

namespace {

bool poly_uses_var(const Poly& p, int var) {
  for (const auto& [m, c] : p.terms)
    if (m.e[var] > 0) return true;
  return false;
}

}  // namespace

GermMap sharp_pullback(const CrossCapContext& ctx, const GermMap& h) {
  if (!same_space(h.source, ctx.target))
    throw std::invalid_argument("sharp_pullback: germ not over the target");
  const int k = ctx.k;
  const int nsrc = ctx.source->size(), ntgt = ctx.target->size();
  const int q = h.q();

  std::vector<Poly> hphi;
  for (const auto& comp : h.components)
    hphi.push_back(substitute(comp, ctx.source, ctx.phi.components));

  // transversality <=> the composite has full linear rank
  std::vector<RatRow> lin(q, RatRow(nsrc, Rat(0)));
  for (int i = 0; i < q; ++i)
    for (const auto& [m, c] : hphi[i].terms)
      if (m.degree() == 1)
        for (int a = 0; a < nsrc; ++a)
          if (m.e[a] == 1) lin[i][a] = c;
  {
    std::vector<RatRow> copy = lin;
    rref_serial(copy);
    if (static_cast<int>(copy.size()) < q)
      throw PullbackError(
          "germ is not transverse to the cross cap: composite linear rank " +
          std::to_string(copy.size()) + " < " + std::to_string(q));
  }

  // pivot per component: the last U/V coordinate occurring only as a lone
  // linear term whose source counterpart stays out of the rest's composite
  struct Pivot {
    int target_var;
    int source_var;
    Poly expr;  // eliminated source variable = expr
  };
  std::vector<Pivot> pivots;
  std::set<int> used_targets;
  for (int i = 0; i < q; ++i) {
    std::optional<Pivot> best;
    for (int t = 0; t < 2 * k - 3; ++t) {  // U/V block only
      if (used_targets.count(t)) continue;
      Monomial lone{std::vector<int>(ntgt, 0)};
      lone.e[t] = 1;
      Rat c = h.components[i].coeff(lone);
      if (c == 0) continue;
      bool lone_occurrence = true;
      for (const auto& [m, cc] : h.components[i].terms)
        if (m.e[t] > 0 && !(m == lone)) lone_occurrence = false;
      if (!lone_occurrence) continue;
      Poly rest = h.components[i] - c * Poly::variable(ctx.target, t);
      Poly rest_phi = substitute(rest, ctx.source, ctx.phi.components);
      if (poly_uses_var(rest_phi, t)) continue;  // entangled via W1/W2 rows
      best = Pivot{t, t, Rat(-1) / c * rest_phi};
    }
    if (!best)
      throw PullbackError("component " + std::to_string(i + 1) +
                          " has no eliminable coordinate");
    used_targets.insert(best->target_var);
    pivots.push_back(std::move(*best));
  }

  // cascade substitutions until no eliminated variable remains
  auto identity_images = [&] {
    std::vector<Poly> images;
    for (int a = 0; a < nsrc; ++a)
      images.push_back(Poly::variable(ctx.source, a));
    return images;
  };
  for (int pass = 0; pass <= q; ++pass) {
    bool dirty = false;
    for (auto& p : pivots)
      for (const auto& other : pivots) {
        if (&other == &p) continue;
        if (!poly_uses_var(p.expr, other.source_var)) continue;
        auto images = identity_images();
        images[other.source_var] = other.expr;
        p.expr = substitute(p.expr, ctx.source, images);
        dirty = true;
      }
    if (!dirty) break;
    if (pass == q) throw PullbackError("cyclic elimination between components");
  }
  for (const auto& p : pivots)
    for (const auto& other : pivots)
      if (poly_uses_var(p.expr, other.source_var))
        throw PullbackError("cyclic elimination between components");

  auto images = identity_images();
  for (const auto& p : pivots) images[p.source_var] = p.expr;

  std::vector<bool> drop_src(nsrc, false), drop_tgt(ntgt, false);
  for (const auto& p : pivots) {
    drop_src[p.source_var] = true;
    drop_tgt[p.target_var] = true;
  }
  std::vector<std::string> names;
  std::vector<int> weights, keep;
  for (int a = 0; a < nsrc; ++a)
    if (!drop_src[a]) {
      names.push_back(ctx.source->names[a]);
      weights.push_back(ctx.source->weights[a]);
      keep.push_back(a);
    }
  SpacePtr restricted = make_space(std::move(names), std::move(weights));
  std::vector<Poly> restricted_images;
  {
    int pos = 0;
    std::vector<Poly> to_restricted(nsrc, Poly::zero(restricted));
    for (int a = 0; a < nsrc; ++a)
      if (!drop_src[a]) to_restricted[a] = Poly::variable(restricted, pos++);
    restricted_images = std::move(to_restricted);
  }

  std::vector<Poly> comps;
  for (int t = 0; t < ntgt; ++t) {
    if (drop_tgt[t]) continue;
    Poly full = substitute(ctx.phi.components[t], ctx.source, images);
    comps.push_back(substitute(full, restricted, restricted_images));
  }
  return make_germ(restricted, std::move(comps));
}

}  // namespace crosscap
