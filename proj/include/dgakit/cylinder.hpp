#pragma once

#include "dgakit/graded.hpp"

#include <map>
#include <string>
#include <tuple>

namespace dgakit {

// Cap on the power of t (and s) carried by cylinder and square elements.
inline constexpr unsigned kMaxIntervalPower = 64;

// Element of A ⊗ Q<t, dt>: a sum of a⊗t^i and a⊗t^i dt.
//
// Conventions, shared by every routine below:
//   d(a⊗t^i)    = da⊗t^i + (-1)^{|a|} i a⊗t^{i-1}dt,   d(a⊗t^i dt) = da⊗t^i dt
//   (a⊗α)(b⊗β)  = (-1)^{|α||b|} ab⊗αβ
//   ∫₀ᵗ a⊗t^i dt = (-1)^{|a|} a⊗t^{i+1}/(i+1),          ∫₀ᵗ a⊗t^i = 0
//   ∫₀¹ a⊗t^i dt = (-1)^{|a|} a/(i+1),                  ∫₀¹ a⊗t^i = 0
class CylinderElement {
 public:
  using Part = std::map<unsigned, Element>;  // power of t -> coefficient

  CylinderElement() = default;
  static CylinderElement constant(Element a) { return term(std::move(a), 0, false); }
  static CylinderElement term(Element a, unsigned power, bool dt);

  const Part& t_part() const { return t_part_; }
  const Part& dt_part() const { return dt_part_; }
  Element coefficient(unsigned power, bool dt) const;
  bool is_zero() const { return t_part_.empty() && dt_part_.empty(); }
  unsigned max_power() const;

  void add(const Element& a, unsigned power, bool dt);
  CylinderElement& operator+=(const CylinderElement& other);
  CylinderElement& operator-=(const CylinderElement& other);
  CylinderElement& operator*=(const Rational& c);
  friend CylinderElement operator+(CylinderElement a, const CylinderElement& b) { return a += b; }
  friend CylinderElement operator-(CylinderElement a, const CylinderElement& b) { return a -= b; }
  friend CylinderElement operator*(CylinderElement a, const Rational& c) { return a *= c; }
  friend CylinderElement operator-(CylinderElement a) { return a *= Rational(-1); }

  bool operator==(const CylinderElement&) const = default;

 private:
  Part t_part_;
  Part dt_part_;
};

CylinderElement cyl_differentiate(const FreeCDGA& A, const CylinderElement& u);
CylinderElement cyl_multiply(const FreeCDGA& A, const CylinderElement& u, const CylinderElement& v);
std::optional<int> cyl_degree(const FreeCDGA& A, const CylinderElement& u);

// Restriction to t = endpoint (0 or 1), dt = 0.
Element evaluate_at(const CylinderElement& u, int endpoint);

CylinderElement integrate_0_t(const FreeCDGA& A, const CylinderElement& u);
Element integrate_0_1(const FreeCDGA& A, const CylinderElement& u);

// Pullback along t ↦ 1 - t (so dt ↦ -dt).
CylinderElement reverse_interval(const CylinderElement& u);

// Coefficient-wise image under an algebra map A -> B of degree zero.
template <class F>
CylinderElement map_coefficients(const CylinderElement& u, F&& f) {
  CylinderElement out;
  for (const auto& [i, a] : u.t_part()) out.add(f(a), i, false);
  for (const auto& [i, a] : u.dt_part()) out.add(f(a), i, true);
  return out;
}

// Terms in (power, dt) order, e.g. "(1 * x) + (-1 * c) t dt".
std::string format(const FreeCDGA& A, const CylinderElement& u);

// Element of A ⊗ Q<t, dt, s, ds>. Monomials in the interval variables are
// written t^i s^j dt^p ds^q with dt placed before ds; d and the products
// follow the same conventions as CylinderElement in each variable.
class SquareElement {
 public:
  struct Key {
    unsigned t = 0;
    unsigned s = 0;
    bool dt = false;
    bool ds = false;
    auto operator<=>(const Key&) const = default;
  };
  using Terms = std::map<Key, Element>;

  SquareElement() = default;
  static SquareElement term(Element a, Key key);
  // u(t, dt) viewed in the square, and the same element written in (s, ds).
  static SquareElement from_t(const CylinderElement& u);
  static SquareElement from_s(const CylinderElement& u);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const Element& a, Key key);

  SquareElement& operator+=(const SquareElement& other);
  SquareElement& operator-=(const SquareElement& other);
  SquareElement& operator*=(const Rational& c);
  friend SquareElement operator+(SquareElement a, const SquareElement& b) { return a += b; }
  friend SquareElement operator-(SquareElement a, const SquareElement& b) { return a -= b; }
  friend SquareElement operator*(SquareElement a, const Rational& c) { return a *= c; }

  bool operator==(const SquareElement&) const = default;

 private:
  Terms terms_;
};

SquareElement square_differentiate(const FreeCDGA& A, const SquareElement& u);
SquareElement square_multiply(const FreeCDGA& A, const SquareElement& u, const SquareElement& v);

// ∫₀ˢ: (a⊗t^i dt^p) ⊗ s^j ds ↦ (-1)^{|a|+p} a⊗t^i s^{j+1} dt^p/(j+1), other terms ↦ 0.
SquareElement square_integrate_0_s(const FreeCDGA& A, const SquareElement& u);

// Restriction t = endpoint, dt = 0 (resp. s, ds); the result no longer
// involves the restricted variable.
SquareElement restrict_t(const SquareElement& u, int endpoint);
SquareElement restrict_s(const SquareElement& u, int endpoint);

// s := t, ds := dt.
CylinderElement diagonal_restrict(const SquareElement& u);

std::string format(const FreeCDGA& A, const SquareElement& u);

}  // namespace dgakit
