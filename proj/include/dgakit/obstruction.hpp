#pragma once

#include "dgakit/cylinder.hpp"
#include "dgakit/graded.hpp"
#include "dgakit/minimal.hpp"
#include "dgakit/morphism.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dgakit {

// Lipschitz exponents of target atoms. weight(product) = sum, weight(sum) =
// max; theta is the exponent of 1/τ carried by dt (τ = L^{-theta}).
class WeightLedger {
 public:
  WeightLedger() = default;
  explicit WeightLedger(std::map<std::string, Rational> weights, Rational theta = 0)
      : weights_(std::move(weights)), theta_(std::move(theta)) {}
  // Weights from the generators' weight fields; throws UnregisteredAtom when
  // one is missing.
  static WeightLedger from_algebra(const FreeCDGA& A, Rational theta = 0);

  void set(const std::string& atom, Rational w) { weights_[atom] = std::move(w); }
  const Rational& theta() const { return theta_; }
  void set_theta(Rational theta) { theta_ = std::move(theta); }
  const std::map<std::string, Rational>& weights() const { return weights_; }

  Rational atom(const std::string& name) const;
  Rational monomial(const FreeCDGA& A, const Monomial& m) const;
  // Max over terms; nothing for the zero element.
  std::optional<Rational> weight(const FreeCDGA& A, const Element& a) const;
  // Max over coefficients, dt-terms adding theta.
  std::optional<Rational> weight(const FreeCDGA& A, const CylinderElement& u) const;

 private:
  std::map<std::string, Rational> weights_;
  Rational theta_;
};

// Cone complex of h : B -> C in degree n is B^n ⊕ C^{n-1}; d(b, c) = (db, h(b) - dc).
struct ConeCochain {
  Element b;
  Element c;
  bool operator==(const ConeCochain&) const = default;
};

ConeCochain cone_differential(const Morphism& h, const ConeCochain& x);

// Obstruction O(v) = (f(dv), g(v) + ∫₀¹ H(dv)) for extending f over the
// generators V of an elementary extension. f and H are defined on the sub-DGA
// A (a prefix of the common source), g on A and V; H runs from g|_A at t = 0 to
// h∘f at t = 1. Throws DiagramMismatch when shapes do not fit.
std::vector<ConeCochain> extension_obstruction(const Morphism& f, const Morphism& g, const Morphism& h,
                                               const Homotopy& H, const std::vector<std::uint32_t>& V);

// Given (b, c) with d(b, c) = O, returns f extended by b and
// H̃(v) = g(v) + d(c(v)⊗t) + ∫₀ᵗ H(dv). Throws WitnessInvalid.
std::pair<Morphism, Homotopy> extend_with_witness(const Morphism& f, const Morphism& g, const Morphism& h,
                                                  const Homotopy& H, const std::vector<std::uint32_t>& V,
                                                  const std::vector<ConeCochain>& witness);

// σ(v) = ψ(v) - φ(v) - ∫₀¹ Φ_k(dv) for the next generators V (Φ_k from φ to ψ).
std::vector<Element> homotopy_step_obstruction(const Morphism& phi, const Morphism& psi, const Homotopy& PhiK,
                                               const std::vector<std::uint32_t>& V);

// Φ_{k+1}(v) = φ(v) + d(c(v)⊗t) + ∫₀ᵗ Φ_k(dv); requires dc(v) = σ(v)
// (PrimitiveInvalid otherwise).
Homotopy extend_homotopy(const Morphism& phi, const Morphism& psi, const Homotopy& PhiK,
                         const std::vector<std::uint32_t>& V, const std::vector<Element>& c);

// Homotopy starting at f with Φ(v) = f(v) + d(c(v)⊗t) + ∫₀ᵗΦ(dv) for arbitrary
// c(v) of degree |v| - 1; its far end is endpoint(1).
Homotopy homotopy_from_primitives(const Morphism& f, const std::vector<Element>& c);

// Concatenation through the formal square: Ξ̄(v) = "Φ+Ψ"(v) + ∫₀ˢ(Ξ̄(dv) - Ξ̄(dv)|_{t=1}),
// then Ξ = Ξ̄|_{s=t}. Throws EndpointMismatch when Φ|_{t=1} ≠ Ψ|_{t=0}.
struct Concatenation {
  Homotopy xi;
  std::vector<SquareElement> square;  // Ξ̄ on generators
  // ∫₀¹Ξ(v) - ∫₀¹Φ(v) - ∫₀¹Ψ(v) per generator.
  std::vector<Element> additivity_defect;
};
Concatenation concatenate(const Homotopy& Phi, const Homotopy& Psi);

// Fiber integral over the triangle {0 <= s <= t <= 1} of the dt ds part.
Element integrate_lower_triangle(const FreeCDGA& A, const SquareElement& u);

// ---------------------------------------------------------------------------
// Dilatation at exponent level

struct DilatationReport {
  Rational exponent;  // max over generators of weight / degree
  std::vector<std::optional<Rational>> per_generator;
};

DilatationReport dilatation_exponent(const Morphism& f, const WeightLedger& ledger);
DilatationReport dilatation_exponent(const Homotopy& H, const WeightLedger& ledger);

struct LengthReport {
  Rational exponent;
  std::vector<Element> integrals;  // ∫₀¹ H(v)
  std::vector<std::optional<Rational>> per_generator;
  Rational max_coefficient;  // largest |coefficient| among the integrals
};

LengthReport formal_length(const Homotopy& H, const WeightLedger& ledger);

// ---------------------------------------------------------------------------
// Sullivan nullhomotopies and homotopy periods

// Generic pullback: target with one symbol w^v per generator of degree < n,
// d(w^v) the image of dv, truncated above degree n (forms on an n-sphere).
struct PullbackTarget {
  FreeCDGA target;
  Morphism phi;
  WeightLedger ledger;
};

// weights[v] overrides the ledger weight of w^v (default: deg v).
PullbackTarget pullback_target(const FreeCDGA& M, int n, const std::vector<long>& weights = {});

struct NullhomotopyRun {
  FreeCDGA target;  // final extension, with the adjoined c(...) symbols
  Morphism phi;     // into the final target
  Homotopy Phi;     // from phi (t = 0) to 0 (t = 1) on the processed generators
  WeightLedger ledger;
  // For every processed generator: the adjoined symbol (empty if none was
  // needed) and its differential φ(v) + ∫₀¹Φ(dv).
  std::vector<std::string> symbols;
  std::vector<Element> integrands;
};

// Processes the source generators of degree <= through_degree in order,
// adjoining c(w^v) with d c(w^v) = φ(v) + ∫₀¹Φ(dv) whenever that is nonzero,
// and Φ(v) = φ(v) - d(c(w^v)⊗t) + ∫₀ᵗΦ(dv). Throws UnresolvablePrimitive
// when a prescribed differential is not closed.
NullhomotopyRun sullivan_nullhomotopy(const Morphism& phi, const WeightLedger& ledger, int through_degree);

struct PeriodIntegrand {
  std::string generator;
  Element integrand;
  std::optional<Rational> weight;
};

struct PeriodsResult {
  NullhomotopyRun run;  // through degree n - 1
  std::vector<PeriodIntegrand> integrands;
};

// The degree-n integrands φ(v) + ∫₀¹Φ(dv), v ∈ V_n.
PeriodsResult homotopy_periods(const Morphism& phi, const WeightLedger& ledger, int n);

// a - b exact? Throws NotClosed unless both are closed.
bool cohomologous_check(const FreeCDGA& A, const Element& a, const Element& b);

struct ReductionStep {
  Rational from_weight;
  Rational to_weight;
  Element primitive;  // β with the step's integrand replaced by integrand - dβ
};

struct ReductionResult {
  Element reduced;
  std::optional<Rational> weight;
  Element correction;  // total β: reduced = input - dβ
  std::vector<ReductionStep> steps;
};

// Greedy top-weight cancellation: while possible, find β of degree n-1 built
// from monomials of weight <= the current maximum such that input - dβ has no
// term of that weight.
ReductionResult reduce_weight(const FreeCDGA& A, const Element& integrand, const WeightLedger& ledger);

// ---------------------------------------------------------------------------
// Positive weights

struct PositiveWeightNullhomotopy {
  FreeCDGA target;
  Morphism zero;
  Morphism phi;
  Homotopy Phi;  // from 0 (t = 0) to phi (t = 1)
  WeightLedger ledger;
  std::vector<std::string> symbols;  // c(v) symbol per generator ("" if c(v) = 0)
};

// Φ(v) = φ(v)⊗t^i + c(v)⊗i t^{i-1}dt with dc(v) = (-1)^{k+1}φ(v) + c(dv), where
// i is the weight and k the degree of v and c is extended to products as the
// dt-coefficient of Φ divided by the weight. Throws InvalidGrading.
PositiveWeightNullhomotopy positive_weight_nullhomotopy(const Morphism& phi, const WeightGrading& grading,
                                                        const WeightLedger& ledger);

}  // namespace dgakit
