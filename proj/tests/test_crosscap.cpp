#include "doctest.h"

#include "crosscap/crosscap.hpp"

using namespace crosscap;

namespace {

// Frozen expected values. Every string below was computed independently by
// expanding the closed-form component formulas by hand and is compared
// against the engine's construction; the round-trip through the parser is
// exact over Q.
struct FieldCase {
  int family, j;
  const char* value;  // ';'-joined components over the target
  const char* lift;   // ';'-joined components over the source
};

PolyVec pv(const std::string& s, const SpacePtr& space) {
  return parse_polyvec(s, space);
}

}  // namespace

TEST_CASE("parametrization doubles the last coordinate into two sheets") {
  CrossCapContext ctx = minimal_crosscap(3);
  CHECK(ctx.k == 3);
  CHECK(ctx.source->names == std::vector<std::string>{"u1", "v1", "v2", "y"});
  CHECK(ctx.target->names ==
        std::vector<std::string>{"U1", "V1", "V2", "W1", "W2"});
  // phi = (u1, v1, v2, y^3 + u1*y, v1*y + v2*y^2)
  SpacePtr s = ctx.source;
  Poly u1 = Poly::variable(s, 0), v1 = Poly::variable(s, 1),
       v2 = Poly::variable(s, 2), y = Poly::variable(s, 3);
  CHECK(ctx.phi.components[0] == u1);
  CHECK(ctx.phi.components[1] == v1);
  CHECK(ctx.phi.components[2] == v2);
  CHECK(ctx.phi.components[3] == pow(y, 3) + u1 * y);
  CHECK(ctx.phi.components[4] == v1 * y + v2 * pow(y, 2));

  CHECK_THROWS_AS(minimal_crosscap(1), std::invalid_argument);
}

TEST_CASE("the full liftable family at multiplicity two, frozen values") {
  CrossCapContext ctx = minimal_crosscap(2);
  SpacePtr T = ctx.target;
  CHECK(T->names == std::vector<std::string>{"V1", "W1", "W2"});

  CHECK(ctx.euler == pv("V1; 2*W1; 2*W2", T));
  REQUIRE(ctx.families.size() == 3);

  const FieldCase table[] = {
      {1, 1, "-2*W2; 0; -2*V1*W1", "-2*v1*y; 0"},
      {2, 1, "-2*V1; 4*W1; 0", "-2*v1; 2*y"},
      {3, 1, "0; 4*W2; 2*V1^2", "0; 2*v1"},
  };
  for (const auto& c : table) {
    PolyVec xi = family_field(ctx, c.family, c.j);
    CHECK(xi == pv(c.value, T));
    LiftResult lr = verify_liftable(ctx, xi);
    REQUIRE(lr.ok());
    CHECK(*lr.lift == pv(c.lift, ctx.source));
  }
  // Euler field lifts to the weighted Euler field upstairs
  LiftResult le = verify_liftable(ctx, ctx.euler);
  REQUIRE(le.ok());
  CHECK(*le.lift == pv("v1; y", ctx.source));
}

TEST_CASE("the full liftable family at multiplicity three, frozen values") {
  CrossCapContext ctx = minimal_crosscap(3);
  SpacePtr T = ctx.target;

  CHECK(ctx.euler == pv("2*U1; 2*V1; V2; 3*W1; 3*W2", T));
  REQUIRE(ctx.families.size() == 6);

  const FieldCase table[] = {
      {1, 1,
       "4*U1^2; -3*U1*V1 + 3*V2*W1; -3*W2 - 5*U1*V2; 6*U1*W1; "
       "2*U1*W2 - 3*V1*W1",
       nullptr},
      {1, 2, "0; -3*W2 - 3*U1*V2; 3*V1; 0; -3*V2*W1", nullptr},
      {2, 1, "6*U1; -3*V1; -6*V2; 9*W1; 0", nullptr},
      {2, 2, "-9*W1; 2*U1*V2; -3*V1; 2*U1^2; 2*U1*V1 + 6*V2*W1", nullptr},
      {3, 1, "9*V1; -6*V2^2; 0; 9*W2 + 3*U1*V2; 3*V1*V2", nullptr},
      {3, 2, "-9*W2 - 3*U1*V2; -3*V1*V2; 0; 3*U1*V1; 3*V1^2 + 6*V2*W2",
       nullptr},
  };
  for (const auto& c : table) {
    PolyVec xi = family_field(ctx, c.family, c.j);
    CHECK(xi == pv(c.value, T));
    CHECK(verify_liftable(ctx, xi).ok());
  }
  CHECK(verify_liftable(ctx, ctx.euler).ok());

  // the stored family list is ordered (family, j)
  CHECK(ctx.families[0] == family_field(ctx, 1, 1));
  CHECK(ctx.families[1] == family_field(ctx, 1, 2));
  CHECK(ctx.families[5] == family_field(ctx, 3, 2));
  // theta(): Euler first, then the families in order
  std::vector<PolyVec> th = ctx.theta();
  REQUIRE(th.size() == 7);
  CHECK(th[0] == ctx.euler);
  CHECK(th[1] == ctx.families[0]);
  CHECK(th[6] == ctx.families[5]);
}

TEST_CASE("every stored field is liftable and quasihomogeneous of low degree") {
  for (int k = 2; k <= 5; ++k) {
    CrossCapContext ctx = minimal_crosscap(k);
    REQUIRE(static_cast<int>(ctx.families.size()) == 3 * (k - 1));
    CHECK(verify_liftable(ctx, ctx.euler).ok());
    CHECK(quasi_shift(ctx.euler) == 0);
    int idx = 0;
    for (int family = 1; family <= 3; ++family)
      for (int j = 1; j <= k - 1; ++j, ++idx) {
        const PolyVec& xi = ctx.families[idx];
        CHECK(verify_liftable(ctx, xi).ok());
        // weighted shift: k-j for the first family, j-1 for the others
        int expected_shift = (family == 1) ? k - j : j - 1;
        CHECK(quasi_shift(xi) == expected_shift);
        // components stay within standard degree 2
        for (const auto& comp : xi.c)
          if (!comp.is_zero()) CHECK(comp.degree() <= 2);
      }
  }
}

TEST_CASE("non-liftable fields are rejected with an obstruction order") {
  CrossCapContext ctx = minimal_crosscap(2);
  // (0; V1; 0): dragging W1 by V1 has no polynomial witness upstairs
  LiftResult lr = verify_liftable(ctx, pv("0; V1; 0", ctx.target));
  CHECK_FALSE(lr.ok());
  CHECK_FALSE(lr.failure.empty());
  REQUIRE(lr.obstruction_degree.has_value());
  CHECK(*lr.obstruction_degree >= 1);

  // a constant field cannot be tangent to the image
  LiftResult lc = verify_liftable(ctx, pv("1; 0; 0", ctx.target));
  CHECK_FALSE(lc.ok());
}

TEST_CASE("restriction to a transverse slice eliminates pivot coordinates") {
  CrossCapContext ctx = minimal_crosscap(3);
  SpacePtr T = ctx.target;

  // slice U1 = 0: drops u1 from the source, specializes phi
  GermMap h1 = parse_germ("U1", T);
  GermMap r1 = sharp_pullback(ctx, h1);
  CHECK(r1.source->names == std::vector<std::string>{"v1", "v2", "y"});
  SpacePtr s1 = r1.source;
  Poly v1 = Poly::variable(s1, 0), v2 = Poly::variable(s1, 1),
       y = Poly::variable(s1, 2);
  REQUIRE(r1.q() == 4);
  CHECK(r1.components[0] == v1);
  CHECK(r1.components[1] == v2);
  CHECK(r1.components[2] == pow(y, 3));
  CHECK(r1.components[3] == v1 * y + v2 * pow(y, 2));

  // slice U1 = -V2^2: the pivot value is substituted, not just dropped
  GermMap h2 = parse_germ("U1 + V2^2", T);
  GermMap r2 = sharp_pullback(ctx, h2);
  CHECK(r2.source->names == std::vector<std::string>{"v1", "v2", "y"});
  CHECK(r2.components[2] == pow(y, 3) - v2 * v2 * y);

  // two-component slice
  GermMap h3 = parse_germ("V2 + W1, U1", T);
  GermMap r3 = sharp_pullback(ctx, h3);
  CHECK(r3.source->names == std::vector<std::string>{"v1", "y"});
}

TEST_CASE("restriction rejects germs without an eliminable coordinate") {
  CrossCapContext ctx = minimal_crosscap(3);
  SpacePtr T = ctx.target;
  // W1 pulls back to y^3 + u1*y: not linear in any source coordinate
  CHECK_THROWS_AS(sharp_pullback(ctx, parse_germ("W1", T)), PullbackError);
  // U1^2 vanishes to second order: non-transverse
  CHECK_THROWS_AS(sharp_pullback(ctx, parse_germ("U1^2", T)), PullbackError);
  // U1 appearing beyond its lone linear term disqualifies the pivot
  CHECK_THROWS_AS(sharp_pullback(ctx, parse_germ("U1 + U1*V1", T)),
                  PullbackError);
}

TEST_CASE("weighted shift detection on mixed fields") {
  CrossCapContext ctx = minimal_crosscap(4);
  SpacePtr T = ctx.target;
  // U1 has weight 3, U2 weight 2: U1 d/dU2 shifts by 1, and adding a term of
  // different shift breaks quasihomogeneity
  CHECK(quasi_shift(pv("0; U1; 0; 0; 0; 0; 0", T)) == 1);
  CHECK_FALSE(quasi_shift(pv("0; U1 + U2; 0; 0; 0; 0; 0", T)).has_value());
  // zero components impose no constraint
  CHECK(quasi_shift(pv("0; 0; 0; 0; 0; 0; 0", T)).has_value());
}
