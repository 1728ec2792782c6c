#pragma once

#include "dgakit/linalg.hpp"
#include "dgakit/rational.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dgakit {

struct Generator {
  std::string name;
  int degree = 0;
  std::optional<int> weight;  // Lipschitz exponent, when the algebra is a target

  bool operator==(const Generator&) const = default;
};

// Product of generator powers in canonical (declaration) order. Odd
// generators appear with exponent 1; the Koszul sign of any reordering is
// absorbed by the algebra when monomials are multiplied.
class Monomial {
 public:
  using Factor = std::pair<std::uint32_t, std::uint32_t>;  // (generator index, exponent)

  Monomial() = default;
  explicit Monomial(std::vector<Factor> factors);
  static Monomial generator(std::uint32_t index) { return Monomial({{index, 1}}); }

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_unit() const { return factors_.empty(); }
  std::uint32_t exponent_of(std::uint32_t index) const;
  std::uint32_t max_index() const { return factors_.empty() ? 0 : factors_.back().first; }

  auto operator<=>(const Monomial&) const = default;

 private:
  std::vector<Factor> factors_;
};

// Sparse rational combination of monomials; never stores zero coefficients.
class Element {
 public:
  using Terms = std::map<Monomial, Rational>;

  Element() = default;
  static Element constant(const Rational& c);
  static Element monomial(Monomial m, const Rational& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const Rational& c);
  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element& operator*=(const Rational& c);

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const Rational& c) { return a *= c; }
  friend Element operator*(const Rational& c, Element a) { return a *= c; }
  friend Element operator-(Element a) { return a *= Rational(-1); }

  bool operator==(const Element&) const = default;

 private:
  Terms terms_;
};

struct AlgebraOptions {
  int degree_cap = 24;
  // When set, every monomial above this degree is zero: the quotient of the
  // free algebra by the ideal of elements above the top degree. Used to model
  // forms on a domain of that dimension.
  std::optional<int> top_degree;
};

// Finitely generated free graded-commutative DGA over Q (optionally truncated
// above a top degree). Immutable and cheap to copy; graded bases and
// differentials of monomials are cached behind a mutex.
class FreeCDGA {
 public:
  // differentials[i] is d(generators[i]). Throws DegreeMismatch, NonSquareZero,
  // InvalidGenerator.
  static FreeCDGA make(std::vector<Generator> generators, std::vector<Element> differentials,
                       AlgebraOptions options = {});

  // Appends generators (and their differentials) to a copy of this algebra.
  // Elements of *this remain valid elements of the result.
  FreeCDGA extend(std::vector<Generator> generators, std::vector<Element> differentials) const;

  const std::vector<Generator>& generators() const;
  const std::vector<Element>& differentials() const;
  const AlgebraOptions& options() const;
  std::size_t size() const { return generators().size(); }
  bool is_minimal() const;

  std::optional<std::uint32_t> index_of(const std::string& name) const;
  std::uint32_t require_index(const std::string& name) const;
  Element gen(const std::string& name) const;
  Element gen(std::uint32_t index) const;
  const Element& d_of(std::uint32_t index) const;
  int degree(std::uint32_t index) const;
  int degree(const Monomial& m) const;
  bool is_odd(std::uint32_t index) const { return degree(index) % 2 != 0; }

  // Degree of a homogeneous element; nullopt for zero; throws NotHomogeneous.
  std::optional<int> degree(const Element& a) const;
  bool is_homogeneous(const Element& a) const;

  // Throws AlgebraMismatch when `a` mentions generators outside this algebra.
  void check_member(const Element& a) const;

  Element multiply(const Element& a, const Element& b) const;
  Element power(const Element& a, unsigned exponent) const;
  Element differentiate(const Element& a) const;
  // Sum of (-1)^{deg m} c m over the terms of a.
  Element sign_by_degree(const Element& a) const;
  bool is_closed(const Element& a) const { return differentiate(a).is_zero(); }

  // Sign-carrying product of two monomials: (sign, product) with sign 0 when
  // the product vanishes.
  std::pair<int, Monomial> multiply(const Monomial& a, const Monomial& b) const;
  Element differentiate(const Monomial& m) const;

  const std::vector<Monomial>& graded_basis(int degree) const;
  // Coordinates of a homogeneous element in graded_basis(degree).
  Vector coordinates(const Element& a, int degree) const;
  Element from_coordinates(const Vector& v, int degree) const;
  // Matrix of d : A^degree -> A^{degree+1} in the graded bases.
  Matrix differential_matrix(int degree) const;

  std::optional<Element> solve_d(const Element& target) const;
  int cohomology_dim(int degree) const;
  bool is_exact(const Element& a) const;

  std::string format(const Element& a) const;
  std::string format(const Monomial& m) const;

  // Structural equality of presentations (names, degrees, differentials, options).
  bool same_presentation(const FreeCDGA& other) const;

 private:
  struct Data;
  explicit FreeCDGA(std::shared_ptr<Data> data) : data_(std::move(data)) {}
  std::shared_ptr<Data> data_;
};

}  // namespace dgakit
