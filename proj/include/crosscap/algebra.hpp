#pragma once
// Exact multivariate polynomial arithmetic over Q, with standard and weighted
// gradings. Coefficients are GMP rationals; no floating point anywhere.

#include <gmpxx.h>

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace crosscap {

using Rat = mpq_class;

Rat rat(long num, long den = 1);  // canonicalized
std::string rat_str(const Rat&);

struct VariableSpace {
  std::vector<std::string> names;
  std::vector<int> weights;  // one per variable, >= 1

  int size() const { return static_cast<int>(names.size()); }
  int index_of(const std::string& name) const;  // -1 if absent
  bool operator==(const VariableSpace&) const = default;
};

using SpacePtr = std::shared_ptr<const VariableSpace>;

SpacePtr make_space(std::vector<std::string> names, std::vector<int> weights);
SpacePtr generic_space(int n);  // x1..xn, all weights 1
bool same_space(const SpacePtr& a, const SpacePtr& b);

// Exponent vector. Graded-lex order: lower total degree first; ties broken by
// the earlier variable carrying the higher exponent.
struct Monomial {
  std::vector<int> e;

  int degree() const;
  int weighted_degree(const VariableSpace&) const;
  bool operator==(const Monomial&) const = default;
};
bool operator<(const Monomial&, const Monomial&);

struct Poly {
  SpacePtr space;
  std::map<Monomial, Rat> terms;  // canonical: never stores zero coefficients

  static Poly zero(SpacePtr s);
  static Poly constant(SpacePtr s, const Rat& c);
  static Poly variable(SpacePtr s, int var, int power = 1);

  bool is_zero() const { return terms.empty(); }
  std::optional<int> degree() const;           // max standard degree
  std::optional<int> order() const;            // min standard degree
  std::optional<int> weighted_degree() const;  // max weighted degree
  Rat coeff(const Monomial&) const;
  Rat constant_term() const;

  Poly& operator+=(const Poly&);
  Poly& operator-=(const Poly&);
  Poly& operator*=(const Poly&);
  Poly& operator*=(const Rat&);
};

Poly operator-(Poly p);
Poly operator+(Poly a, const Poly& b);
Poly operator-(Poly a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(const Rat& c, Poly p);
bool operator==(const Poly& a, const Poly& b);

Poly pow(const Poly& p, int n);
Poly truncate(const Poly& p, int max_std_degree);
Poly partial(const Poly& p, int var);
// p over S, images[i] over `target` for each variable of S; result over target
Poly substitute(const Poly& p, const SpacePtr& target,
                const std::vector<Poly>& images);

// Fixed-length vector of polynomials over one space: module elements of E^q.
struct PolyVec {
  std::vector<Poly> c;

  static PolyVec zero(SpacePtr s, int n);
  SpacePtr space() const;
  int size() const { return static_cast<int>(c.size()); }
  bool is_zero() const;
  std::optional<int> degree() const;
  std::optional<int> order() const;

  PolyVec& operator+=(const PolyVec&);
  bool operator==(const PolyVec&) const = default;
};
PolyVec operator+(PolyVec a, const PolyVec& b);
PolyVec operator*(const Poly& m, PolyVec v);  // module action
PolyVec operator*(const Rat& c, PolyVec v);
PolyVec truncate(const PolyVec& v, int max_std_degree);

// Map-germ (K^p,0) -> (K^q,0): q polynomial components over `source`,
// all vanishing at the origin.
struct GermMap {
  SpacePtr source;
  std::vector<Poly> components;

  int q() const { return static_cast<int>(components.size()); }
};
GermMap make_germ(SpacePtr source, std::vector<Poly> components);

// component j of the result is sum_a xi_a * d(h_j)/d(x_a)
PolyVec apply_derivation(const PolyVec& xi, const GermMap& h);

// ---- text form ----------------------------------------------------------
// Canonical printing: terms in ascending graded-lex order, '*' between
// factors, '^' for powers, rationals as a/b. Zero prints as "0".

std::string monomial_str(const Monomial&, const VariableSpace&);
std::string poly_str(const Poly&);
std::string polyvec_str(const PolyVec&);  // "(p1; p2)" when size > 1
std::string germ_str(const GermMap&);     // comma-separated components

struct ParseError : std::runtime_error {
  int pos;  // byte offset into the input
  ParseError(const std::string& msg, int pos_)
      : std::runtime_error(msg), pos(pos_) {}
};

Poly parse_poly(const std::string& text, const SpacePtr& space);
// comma-separated components, each must vanish at the origin
GermMap parse_germ(const std::string& text, const SpacePtr& space);
// semicolon-separated components
PolyVec parse_polyvec(const std::string& text, const SpacePtr& space);
// one PolyVec per non-empty line, '#' starts a comment
std::vector<PolyVec> parse_field_lines(const std::string& text,
                                       const SpacePtr& space);

}  // namespace crosscap
