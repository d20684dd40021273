#pragma once
// Verification suites: the codimension-l series of functions, the
// codimension-2 classification with its k>=5 negative certificate, the
// family-necessity example, and the documented pullback normal forms.

#include <optional>

#include "crosscap/equivalence.hpp"

namespace crosscap {

struct VerificationReport {
  std::string claim;
  bool pass = true;
  std::vector<std::string> details;

  void check(bool ok, const std::string& what);
  void note(const std::string& what);
};

enum class SeriesCase { v_power, u_power };
// v_power: h = U_{k-2} + V_{k-1}^l, k >= 3
// u_power: h = V_{k-1} + U_{k-3} + U_{k-2}^l, k >= 4
// Verifies codim = l, determinacy = l, the tangent-space ideal identity and
// the degree-l transversal of the (l-1)-jet. The ideal expectation carries
// the coupling corrections explained in the implementation (u_power with
// l >= 3). Known honest failure: u_power at k = 5, l >= 4 — the jet V4 + U2
// is already 3-determined with codimension 3 (certified by the engine), so
// the series collapses there and the report says FAIL. That cell is kept as
// a documented finding, not a bug.
VerificationReport verify_codim_series(int k, int l, SeriesCase c);

enum class FormTag {
  u_plus_vsq,       // U_{k-2} + V_{k-1}^2           k >= 3
  v_plus_u_plus_usq,  // V_{k-1} + U_{k-3} + U_{k-2}^2  k >= 4
  v2_plus_w1,       // V2 + W1                        k = 3
  v1_plus_w1sq,     // V1 + W1^2                      k = 2
  w1_plus_v1sq,     // W1 + V1^2                      k = 2
  pair_v1_w1,       // (V1, W1)                       k = 2
  pair_u1_v2w1,     // (U1, V2 + W1)                  k = 3
  pair_u2_u1v3w1,   // (U2, U1 + V3 + W1)             k = 4
};

struct NormalFormCase {
  FormTag tag;
  int k;
  std::string germ;  // parseable text over the target of k
  int q;
  int determinacy;  // expected: 2 for functions, 1 for pairs
  std::string label;
};

// the codimension-2 normal forms applicable at this k
std::vector<NormalFormCase> codim2_normal_forms(int k);

// One report per normal form (codim = 2 and the expected determinacy), plus,
// for k >= 5, the negative certificate: for `negative_jets` seeded random
// generic pair 1-jets j (normalized a_{k-2}=1, A_{k-2}=0, B_{k-1}=1,
// b_{k-1}=0), W1*e_2 stays outside the truncated extended tangent space while
// every degree-1 monomial-vector lies in it once span{W1*e_2} is added.
std::vector<VerificationReport> classify_codim2(int k, int negative_jets = 20,
                                                unsigned seed = 77003917);

// The Euler-free module of the pair (V2+W1, U1) at k=3, truncation 3:
// quotient dimension 2 with basis {e_1, e_2}; families 1 and 3 are both
// necessary; the six documented applied-field values are members.
VerificationReport verify_family_necessity();

struct PullbackOutcome {
  VerificationReport report;
  std::optional<GermMap> germ;
};

// sharp pullback of a classified normal form: dimension checks, exact match
// against the independently constructed elimination, the codimension-2 link,
// and the two documented transversality failures reported as such
PullbackOutcome normal_form_pullback(const NormalFormCase&);
std::vector<VerificationReport> verify_pullbacks();  // all forms, k = 2..5

}  // namespace crosscap
