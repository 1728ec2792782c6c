#pragma once

#include "dgakit/linalg.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dgakit {

using Simplex = std::vector<std::uint32_t>;  // sorted vertex indices

// Finite simplicial pair (X, A), closed under faces. Simplices are oriented by
// sorted vertex order.
class SimplicialPair {
 public:
  // Closes both lists under faces; A must be contained in X. Throws
  // InvalidArgument on repeated vertices or A ⊄ X.
  static SimplicialPair make(const std::vector<Simplex>& maximal, const std::vector<Simplex>& subcomplex = {});

  std::size_t vertex_count() const { return vertex_count_; }
  int dimension() const { return static_cast<int>(simplices_.size()) - 1; }
  const std::vector<Simplex>& simplices(int k) const;
  bool in_subcomplex(int k, std::size_t index) const;
  std::optional<std::size_t> index_of(const Simplex& s) const;

  // Simplices of dimension k not in A: the basis of C^k(X, A) and C_k(X)/C_k(A).
  const std::vector<std::size_t>& relative_basis(int k) const;
  // Matrix of δ : C^{k-1}(X, A) -> C^k(X, A) in the relative bases; ∂ on
  // relative chains is its transpose.
  Matrix coboundary(int k) const;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<std::vector<Simplex>> simplices_;
  std::vector<std::vector<bool>> in_a_;
  std::vector<std::vector<std::size_t>> relative_;
  std::map<Simplex, std::size_t> index_;
};

// Text format: one maximal simplex per line as vertex indices; a line "A"
// starts the subcomplex block; '#' begins a comment. Throws ParseError.
SimplicialPair parse_complex(const std::string& text);
std::string format_complex(const SimplicialPair& pair);

// Cochains and chains are coefficient vectors over relative_basis(k).
struct Primitive {
  Vector a;
  Rational norm;  // ‖a‖∞
};

// min ‖a‖∞ subject to δa = w, w ∈ C^k(X, A). Throws NotACoboundary.
Primitive min_linf_primitive(const SimplicialPair& pair, int k, const Vector& w);

struct Filling {
  Vector S;
  Rational mass;  // ‖S‖₁
};

// min ‖S‖₁ subject to ∂S = T, T ∈ C_{k-1}, S ∈ C_k. Throws NotABoundary.
Filling min_mass_filling(const SimplicialPair& pair, int k, const Vector& T);

enum class IsoSide { Forms, Chains };

struct IsoperimetricResult {
  Rational constant;
  Vector extremal;  // w (forms) or T (chains) attaining the constant, normalized
  Vector optimizer;  // its optimal primitive or filling
  std::size_t vertices = 0;  // candidate extremal points examined
};

// Forms: the least C1 with min ‖a‖∞ <= C1 ‖δa‖∞ on C^{k-1}(X, A) -> C^k(X, A).
// Chains: the least C2 with min mass filling <= C2 mass T for boundaries
// T ∈ C_{k-1}. Exact, by enumerating the extreme points of the unit ball of
// the image. Throws TooLarge when the image lives on more than cap simplices.
IsoperimetricResult iso_constant(const SimplicialPair& pair, int k, IsoSide side, std::size_t cap = 12);

struct DualityReport {
  IsoperimetricResult forms;
  IsoperimetricResult chains;
  bool equal;
};

DualityReport duality_check(const SimplicialPair& pair, int k, std::size_t cap = 12);

struct RoundingResult {
  Vector b;           // δb = w - c, min ‖b‖∞ unless an integral primitive was snapped to
  Vector rounded;     // nearest-integer b
  Vector remainder;   // w - c - δ(rounded)
  bool snapped;       // an integral primitive replaced the LP optimum
  bool within_bound;  // |remainder(σ)| <= (n+1)/2 on every n-simplex
};

// One Guth rounding step in degree n. Throws NotACoboundary when w - c is not
// a relative coboundary and InvalidArgument when c is not integral.
RoundingResult guth_round(const SimplicialPair& pair, int n, const Vector& c, const Vector& w);

// Product of a complex with [0, 1] by the staircase triangulation; vertex v at
// height 1 becomes v + vertex_count.
SimplicialPair prism(const SimplicialPair& base);

}  // namespace dgakit
