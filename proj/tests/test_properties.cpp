#include "doctest.h"

#include <algorithm>
#include <random>

#include "crosscap/classify.hpp"

using namespace crosscap;

namespace {

// Random germs over the target of a cross cap: sparse integer combinations
// of monomials of degree 1..2 in a handful of components.
GermMap random_germ(std::mt19937& rng, const SpacePtr& target, int q) {
  JetBasis jb = make_jet_basis(target, 1, 2);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> pick(1, static_cast<int>(
                                                 jb.monomials.size()) -
                                                 1);
  std::vector<Poly> comps;
  for (int j = 0; j < q; ++j) {
    Poly p = Poly::zero(target);
    int terms = 1 + static_cast<int>(rng() % 3);
    for (int t = 0; t < terms; ++t) {
      int c = coeff(rng);
      if (c == 0) c = 1;
      p += rat(c) * devectorize(jb, [&] {
             RatRow row(jb.dim(), rat(0));
             row[pick(rng)] = rat(1);
             return row;
           }()).c[0];
    }
    if (p.is_zero()) p = Poly::variable(target, 0);
    comps.push_back(std::move(p));
  }
  return make_germ(target, std::move(comps));
}

// Germs whose linear parts have full rank: every variable appears with a
// nonzero coefficient in some component. These certify a finite codimension
// at a low degree cap, which the certification properties below need.
GermMap random_submersive_germ(std::mt19937& rng, const SpacePtr& target,
                               int q) {
  std::uniform_int_distribution<int> coeff(1, 5);
  std::uniform_int_distribution<int> sign(0, 1);
  std::vector<Poly> comps(q, Poly::zero(target));
  for (int v = 0; v < target->size(); ++v) {
    int c = coeff(rng) * (sign(rng) ? 1 : -1);
    comps[v % q] += rat(c) * Poly::variable(target, v);
  }
  // sprinkle quadratic noise
  for (int j = 0; j < q; ++j) {
    int a = static_cast<int>(rng() % target->size());
    int b = static_cast<int>(rng() % target->size());
    comps[j] += rat(coeff(rng) - 3) * Poly::variable(target, a) *
                Poly::variable(target, b);
  }
  return make_germ(target, std::move(comps));
}

}  // namespace

TEST_CASE("the one-jet-fixing tangent space embeds in the extended one") {
  std::mt19937 rng(4257);
  int instances = 0;
  for (int k = 2; k <= 4; ++k) {
    CrossCapContext ctx = minimal_crosscap(k);
    TangentContext tc = tangent_context(ctx);
    for (int trial = 0; trial < 12; ++trial) {
      int q = 1 + static_cast<int>(rng() % 2);
      GermMap h = random_germ(rng, ctx.target, q);
      int trunc = 2 + static_cast<int>(rng() % 2);
      Subspace full = tangent_space(tc, h, TangentVariant::extended, trunc);
      Subspace small =
          tangent_space(tc, h, TangentVariant::one_jet_identity, trunc);
      for (const auto& row : small.rows)
        CHECK(row_is_zero(reduce_row(full.rows, full.pivots, row)));
      ++instances;
    }
  }
  CHECK(instances == 36);
}

TEST_CASE("certified reports do not change when the degree cap grows") {
  std::mt19937 rng(91819);
  int certified = 0;
  for (int k = 2; k <= 3; ++k) {
    CrossCapContext ctx = minimal_crosscap(k);
    TangentContext tc = tangent_context(ctx);
    for (int trial = 0; trial < 14; ++trial) {
      GermMap h = trial % 2 ? random_submersive_germ(rng, ctx.target, 1)
                            : random_germ(rng, ctx.target, 1);
      CodimReport low = codimension(tc, h, 4);
      if (!low.finite) continue;  // not every random germ certifies by 4
      ++certified;
      CodimReport high = codimension(tc, h, 6);
      REQUIRE(high.finite);
      CHECK(high.codim == low.codim);
      CHECK(high.stabilization_degree == low.stabilization_degree);
      CHECK(high.normal_basis == low.normal_basis);
      CHECK(high.determinacy == low.determinacy);
    }
  }
  CHECK(certified >= 10);  // the sample must actually exercise the property
}

TEST_CASE("codimension counts the normal basis and fills the jet module") {
  std::mt19937 rng(5150);
  int certified = 0;
  for (int k = 2; k <= 3; ++k) {
    CrossCapContext ctx = minimal_crosscap(k);
    TangentContext tc = tangent_context(ctx);
    for (int trial = 0; trial < 12; ++trial) {
      int q = 1 + static_cast<int>(rng() % 2);
      GermMap h = trial % 2 ? random_submersive_germ(rng, ctx.target, q)
                            : random_germ(rng, ctx.target, q);
      CodimReport rep = codimension(tc, h, 4);
      if (!rep.finite) continue;
      ++certified;
      CHECK(rep.codim == static_cast<int>(rep.normal_basis.size()));
      // at the stabilization degree, tangent rows + normal basis span the
      // whole truncated module
      int d = rep.stabilization_degree;
      Subspace s = tangent_space(tc, h, TangentVariant::extended, d);
      CHECK(s.dim() + rep.codim == s.basis.dim());
      for (const auto& v : rep.normal_basis)
        CHECK_FALSE(contains(s, v));
      // the components' count is a hard floor: constants are never tangent
      CHECK(rep.codim >= q);
    }
  }
  CHECK(certified >= 8);
}

TEST_CASE("constant vectors never lie in a tangent space") {
  std::mt19937 rng(777);
  int instances = 0;
  for (int k = 2; k <= 4; ++k) {
    CrossCapContext ctx = minimal_crosscap(k);
    TangentContext tc = tangent_context(ctx);
    JetBasis unit = make_jet_basis(ctx.target, 2, 0);
    for (int trial = 0; trial < 8; ++trial) {
      GermMap h = random_germ(rng, ctx.target, 2);
      Subspace s = tangent_space(tc, h, TangentVariant::extended, 3);
      for (int col = 0; col < unit.dim(); ++col) {
        PolyVec e = unit.unit_vector(col);
        CHECK_FALSE(contains(s, e));
      }
      ++instances;
    }
  }
  CHECK(instances == 24);
}

TEST_CASE("module spans are canonical under generator shuffling and scaling") {
  std::mt19937 rng(31337);
  SpacePtr s = generic_space(3);
  JetBasis jb = make_jet_basis(s, 2, 3);
  std::uniform_int_distribution<int> coeff(-4, 4);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<PolyVec> gens;
    int n = 2 + static_cast<int>(rng() % 3);
    for (int i = 0; i < n; ++i) {
      Poly a = Poly::zero(s), b = Poly::zero(s);
      for (int v = 0; v < 3; ++v) {
        a += rat(coeff(rng)) * Poly::variable(s, v);
        b += rat(coeff(rng)) * Poly::variable(s, v, 2);
      }
      gens.push_back(PolyVec{{a, b}});
    }
    Subspace base = module_span(gens, {}, jb);
    std::shuffle(gens.begin(), gens.end(), rng);
    for (auto& g : gens) {
      Rat factor = rat(2 + static_cast<int>(rng() % 3), 3);
      for (auto& comp : g.c) comp *= factor;
    }
    Subspace again = module_span(gens, {}, jb);
    CHECK(base.rows == again.rows);
    CHECK(base.pivots == again.pivots);
  }
}

TEST_CASE("reports are invariant under scaling and swapping components") {
  std::mt19937 rng(246810);
  int certified = 0;
  CrossCapContext ctx = minimal_crosscap(3);
  TangentContext tc = tangent_context(ctx);
  for (int trial = 0; trial < 16; ++trial) {
    GermMap h = trial % 2 ? random_submersive_germ(rng, ctx.target, 2)
                          : random_germ(rng, ctx.target, 2);
    CodimReport a = codimension(tc, h, 4);
    GermMap swapped =
        make_germ(ctx.target, {rat(-5, 3) * h.components[1],
                               rat(7, 2) * h.components[0]});
    CodimReport b = codimension(tc, swapped, 4);
    CHECK(a.finite == b.finite);
    if (!a.finite) continue;
    ++certified;
    CHECK(a.codim == b.codim);
    CHECK(a.stabilization_degree == b.stabilization_degree);
    // the normal basis permutes components along with the germ
    std::vector<PolyVec> expect;
    for (const auto& v : a.normal_basis)
      expect.push_back(PolyVec{{v.c[1], v.c[0]}});
    auto key = [](const PolyVec& v) { return polyvec_str(v); };
    std::vector<std::string> lhs, rhs;
    for (const auto& v : expect) lhs.push_back(key(v));
    for (const auto& v : b.normal_basis) rhs.push_back(key(v));
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    CHECK(lhs == rhs);
  }
  CHECK(certified >= 5);
}
