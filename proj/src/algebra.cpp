#include "crosscap/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace crosscap {

Rat rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::string rat_str(const Rat& r) { return r.get_str(); }

int VariableSpace::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (names[i] == name) return i;
  return -1;
}

static bool valid_var_name(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  std::size_t i = 1;
  while (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) ++i;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

SpacePtr make_space(std::vector<std::string> names, std::vector<int> weights) {
  if (names.size() != weights.size())
    throw std::invalid_argument("make_space: names/weights length mismatch");
  for (const auto& n : names) {
    if (!valid_var_name(n))
      throw std::invalid_argument("make_space: bad variable name '" + n + "'");
    if (std::count(names.begin(), names.end(), n) != 1)
      throw std::invalid_argument("make_space: duplicate variable '" + n + "'");
  }
  for (int w : weights)
    if (w < 1) throw std::invalid_argument("make_space: weights must be >= 1");
  auto sp = std::make_shared<VariableSpace>();
  sp->names = std::move(names);
  sp->weights = std::move(weights);
  return sp;
}

SpacePtr generic_space(int n) {
  if (n < 1) throw std::invalid_argument("generic_space: need n >= 1");
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return make_space(std::move(names), std::vector<int>(n, 1));
}

bool same_space(const SpacePtr& a, const SpacePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

static void check_space(const SpacePtr& a, const SpacePtr& b, const char* op) {
  if (!same_space(a, b))
    throw std::invalid_argument(std::string(op) + ": variable-space mismatch");
}

int Monomial::degree() const {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

int Monomial::weighted_degree(const VariableSpace& sp) const {
  if (static_cast<int>(e.size()) != sp.size())
    throw std::invalid_argument("weighted_degree: variable-space mismatch");
  int d = 0;
  for (int i = 0; i < sp.size(); ++i) d += e[i] * sp.weights[i];
  return d;
}

bool operator<(const Monomial& a, const Monomial& b) {
  if (a.e.size() != b.e.size())
    throw std::invalid_argument("monomial order: length mismatch");
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  for (std::size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
  return false;
}

Poly Poly::zero(SpacePtr s) { return Poly{std::move(s), {}}; }

Poly Poly::constant(SpacePtr s, const Rat& c) {
  Poly p{std::move(s), {}};
  if (c != 0) p.terms[Monomial{std::vector<int>(p.space->size(), 0)}] = c;
  return p;
}

Poly Poly::variable(SpacePtr s, int var, int power) {
  if (var < 0 || var >= s->size())
    throw std::invalid_argument("Poly::variable: index out of range");
  if (power < 0) throw std::invalid_argument("Poly::variable: negative power");
  Poly p{std::move(s), {}};
  Monomial m{std::vector<int>(p.space->size(), 0)};
  m.e[var] = power;
  p.terms[m] = 1;
  return p;
}

std::optional<int> Poly::degree() const {
  std::optional<int> d;
  for (const auto& [m, c] : terms) d = std::max(d.value_or(-1), m.degree());
  return d;
}

std::optional<int> Poly::order() const {
  std::optional<int> d;
  for (const auto& [m, c] : terms)
    if (!d || m.degree() < *d) d = m.degree();
  return d;
}

std::optional<int> Poly::weighted_degree() const {
  std::optional<int> d;
  for (const auto& [m, c] : terms)
    d = std::max(d.value_or(-1), m.weighted_degree(*space));
  return d;
}

Rat Poly::coeff(const Monomial& m) const {
  auto it = terms.find(m);
  return it == terms.end() ? Rat(0) : it->second;
}

Rat Poly::constant_term() const {
  return coeff(Monomial{std::vector<int>(space->size(), 0)});
}

Poly& Poly::operator+=(const Poly& o) {
  check_space(space, o.space, "poly_add");
  for (const auto& [m, c] : o.terms) {
    auto it = terms.find(m);
    if (it == terms.end()) {
      terms.emplace(m, c);
    } else {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_space(space, o.space, "poly_sub");
  for (const auto& [m, c] : o.terms) {
    auto it = terms.find(m);
    if (it == terms.end()) {
      terms.emplace(m, -c);
    } else {
      it->second -= c;
      if (it->second == 0) terms.erase(it);
    }
  }
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

Poly& Poly::operator*=(const Rat& c) {
  if (c == 0) {
    terms.clear();
    return *this;
  }
  for (auto& [m, v] : terms) v *= c;
  return *this;
}

Poly operator-(Poly p) {
  for (auto& [m, c] : p.terms) c = -c;
  return p;
}

Poly operator+(Poly a, const Poly& b) {
  a += b;
  return a;
}

Poly operator-(Poly a, const Poly& b) {
  a -= b;
  return a;
}

Poly operator*(const Poly& a, const Poly& b) {
  check_space(a.space, b.space, "poly_mul");
  Poly out = Poly::zero(a.space);
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms) {
      Monomial m = ma;
      for (std::size_t i = 0; i < m.e.size(); ++i) m.e[i] += mb.e[i];
      auto it = out.terms.find(m);
      if (it == out.terms.end()) {
        out.terms.emplace(std::move(m), ca * cb);
      } else {
        it->second += ca * cb;
        if (it->second == 0) out.terms.erase(it);
      }
    }
  return out;
}

Poly operator*(const Rat& c, Poly p) {
  p *= c;
  return p;
}

bool operator==(const Poly& a, const Poly& b) {
  return same_space(a.space, b.space) && a.terms == b.terms;
}

Poly pow(const Poly& p, int n) {
  if (n < 0) throw std::invalid_argument("pow: negative exponent");
  Poly out = Poly::constant(p.space, 1);
  for (int i = 0; i < n; ++i) out *= p;
  return out;
}

Poly truncate(const Poly& p, int max_std_degree) {
  Poly out = Poly::zero(p.space);
  for (const auto& [m, c] : p.terms)
    if (m.degree() <= max_std_degree) out.terms.emplace(m, c);
  return out;
}

Poly partial(const Poly& p, int var) {
  if (var < 0 || var >= p.space->size())
    throw std::invalid_argument("partial: index out of range");
  Poly out = Poly::zero(p.space);
  for (const auto& [m, c] : p.terms) {
    if (m.e[var] == 0) continue;
    Monomial d = m;
    d.e[var] -= 1;
    out.terms.emplace(std::move(d), c * m.e[var]);
  }
  return out;
}

Poly substitute(const Poly& p, const SpacePtr& target,
                const std::vector<Poly>& images) {
  if (static_cast<int>(images.size()) != p.space->size())
    throw std::invalid_argument("substitute: wrong number of images");
  for (const auto& img : images) check_space(img.space, target, "substitute");
  // cache images[i]^j as needed
  std::vector<std::vector<Poly>> pw(images.size());
  auto power = [&](int i, int n) -> const Poly& {
    auto& v = pw[i];
    if (v.empty()) v.push_back(Poly::constant(target, 1));
    while (static_cast<int>(v.size()) <= n) v.push_back(v.back() * images[i]);
    return v[n];
  };
  Poly out = Poly::zero(target);
  for (const auto& [m, c] : p.terms) {
    Poly prod = Poly::constant(target, c);
    for (std::size_t i = 0; i < m.e.size(); ++i)
      if (m.e[i] > 0) prod *= power(static_cast<int>(i), m.e[i]);
    out += prod;
  }
  return out;
}

PolyVec PolyVec::zero(SpacePtr s, int n) {
  PolyVec v;
  for (int i = 0; i < n; ++i) v.c.push_back(Poly::zero(s));
  return v;
}

SpacePtr PolyVec::space() const {
  if (c.empty()) throw std::invalid_argument("PolyVec: empty");
  return c.front().space;
}

bool PolyVec::is_zero() const {
  for (const auto& p : c)
    if (!p.is_zero()) return false;
  return true;
}

std::optional<int> PolyVec::degree() const {
  std::optional<int> d;
  for (const auto& p : c)
    if (auto pd = p.degree()) d = std::max(d.value_or(-1), *pd);
  return d;
}

std::optional<int> PolyVec::order() const {
  std::optional<int> d;
  for (const auto& p : c) {
    auto po = p.order();
    if (po && (!d || *po < *d)) d = po;
  }
  return d;
}

PolyVec& PolyVec::operator+=(const PolyVec& o) {
  if (size() != o.size())
    throw std::invalid_argument("polyvec_add: length mismatch");
  for (int i = 0; i < size(); ++i) c[i] += o.c[i];
  return *this;
}

PolyVec operator+(PolyVec a, const PolyVec& b) {
  a += b;
  return a;
}

PolyVec operator*(const Poly& m, PolyVec v) {
  for (auto& p : v.c) p = m * p;
  return v;
}

PolyVec operator*(const Rat& c, PolyVec v) {
  for (auto& p : v.c) p *= c;
  return v;
}

PolyVec truncate(const PolyVec& v, int max_std_degree) {
  PolyVec out = v;
  for (auto& p : out.c) p = truncate(p, max_std_degree);
  return out;
}

GermMap make_germ(SpacePtr source, std::vector<Poly> components) {
  for (const auto& p : components) {
    check_space(p.space, source, "make_germ");
    if (p.constant_term() != 0)
      throw std::invalid_argument("make_germ: component has nonzero constant term");
  }
  return GermMap{std::move(source), std::move(components)};
}

PolyVec apply_derivation(const PolyVec& xi, const GermMap& h) {
  check_space(xi.space(), h.source, "apply_derivation");
  if (xi.size() != h.source->size())
    throw std::invalid_argument("apply_derivation: field length != #variables");
  PolyVec out = PolyVec::zero(h.source, h.q());
  for (int j = 0; j < h.q(); ++j)
    for (int a = 0; a < h.source->size(); ++a)
      out.c[j] += xi.c[a] * partial(h.components[j], a);
  return out;
}

std::string monomial_str(const Monomial& m, const VariableSpace& sp) {
  std::string out;
  for (int i = 0; i < sp.size(); ++i) {
    if (m.e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += sp.names[i];
    if (m.e[i] > 1) out += "^" + std::to_string(m.e[i]);
  }
  return out;
}

std::string poly_str(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : p.terms) {
    bool neg = c < 0;
    Rat a = neg ? Rat(-c) : c;
    std::string mono = monomial_str(m, *p.space);
    std::string piece;
    if (mono.empty())
      piece = rat_str(a);
    else if (a == 1)
      piece = mono;
    else
      piece = rat_str(a) + "*" + mono;
    if (out.empty())
      out = (neg ? "-" : "") + piece;
    else
      out += (neg ? " - " : " + ") + piece;
  }
  return out;
}

std::string polyvec_str(const PolyVec& v) {
  if (v.size() == 1) return poly_str(v.c[0]);
  std::string out = "(";
  for (int i = 0; i < v.size(); ++i) {
    if (i) out += "; ";
    out += poly_str(v.c[i]);
  }
  return out + ")";
}

std::string germ_str(const GermMap& g) {
  std::string out;
  for (int i = 0; i < g.q(); ++i) {
    if (i) out += ", ";
    out += poly_str(g.components[i]);
  }
  return out;
}

}  // namespace crosscap
