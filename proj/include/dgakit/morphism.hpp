#pragma once

#include "dgakit/cylinder.hpp"
#include "dgakit/graded.hpp"

#include <string>
#include <vector>

namespace dgakit {

// Generator-image map between free CDGAs. A morphism may be defined only on
// the first k generators of its source (the sub-DGA they generate, which must
// be closed under d); this is how partially extended maps are represented.
class Morphism {
 public:
  // Throws DegreeMismatch / AlgebraMismatch for ill-typed images.
  static Morphism make(FreeCDGA source, FreeCDGA target, std::vector<Element> images);
  static Morphism zero(FreeCDGA source, FreeCDGA target, std::size_t defined = SIZE_MAX);
  static Morphism identity(const FreeCDGA& A);

  const FreeCDGA& source() const { return source_; }
  const FreeCDGA& target() const { return target_; }
  const std::vector<Element>& images() const { return images_; }
  std::size_t defined() const { return images_.size(); }
  const Element& image(std::uint32_t index) const { return images_.at(index); }

  Element apply(const Element& a) const;
  // d(f(v)) = f(dv) on every defined generator.
  bool is_chain_map() const;
  void require_chain_map() const;

  // Same images viewed in a larger target (an extension of the current one).
  Morphism with_target(const FreeCDGA& bigger) const;
  // Defines the next generators.
  Morphism extended(std::vector<Element> more) const;
  Morphism restricted(std::size_t defined) const;

  bool operator==(const Morphism& other) const;

 private:
  Morphism(FreeCDGA s, FreeCDGA t, std::vector<Element> im)
      : source_(std::move(s)), target_(std::move(t)), images_(std::move(im)) {}
  FreeCDGA source_;
  FreeCDGA target_;
  std::vector<Element> images_;
};

// Composite g ∘ f.
Morphism compose(const Morphism& g, const Morphism& f);

// Cylinder-valued generator images: a DGA map source -> target ⊗ Q<t, dt>.
class Homotopy {
 public:
  static Homotopy make(FreeCDGA source, FreeCDGA target, std::vector<CylinderElement> images);
  static Homotopy constant(const Morphism& f);

  const FreeCDGA& source() const { return source_; }
  const FreeCDGA& target() const { return target_; }
  const std::vector<CylinderElement>& images() const { return images_; }
  std::size_t defined() const { return images_.size(); }
  const CylinderElement& image(std::uint32_t index) const { return images_.at(index); }

  CylinderElement apply(const Element& a) const;
  bool is_chain_map() const;
  Morphism endpoint(int t) const;
  // v ↦ ∫₀¹ H(v), as a degree -1 map on generators.
  std::vector<Element> integrals() const;

  Homotopy with_target(const FreeCDGA& bigger) const;
  Homotopy extended(std::vector<CylinderElement> more) const;
  Homotopy restricted(std::size_t defined) const;
  Homotopy reversed() const;

  bool operator==(const Homotopy& other) const;

 private:
  Homotopy(FreeCDGA s, FreeCDGA t, std::vector<CylinderElement> im)
      : source_(std::move(s)), target_(std::move(t)), images_(std::move(im)) {}
  FreeCDGA source_;
  FreeCDGA target_;
  std::vector<CylinderElement> images_;
};

// True iff H is a chain map with H|_{t=0} = f and H|_{t=1} = g.
bool validate_homotopy(const Homotopy& H, const Morphism& f, const Morphism& g);

// Map into the square target ⊗ Q<t, dt, s, ds> given on generators.
SquareElement apply_square(const FreeCDGA& source, const FreeCDGA& target,
                           const std::vector<SquareElement>& images, const Element& a);

// φ + η⊗e with e of degree 1 and e² = 0: η lowers degree by one and obeys
// η(uv) = (-1)^{|v|} η(u)φ(v) + φ(u)η(v).
class DerivationClass {
 public:
  static DerivationClass make(Morphism base, std::vector<Element> eta);

  const Morphism& base() const { return base_; }
  const std::vector<Element>& eta() const { return eta_; }

  Element apply_eta(const Element& a) const;
  // dη(v) = η(dv) on generators.
  bool is_valid() const;
  // The derivation law checked on all products of pairs of generators.
  bool satisfies_leibniz() const;

  // Pointwise sum of two derivations over the same base.
  DerivationClass boxplus(const DerivationClass& other) const;
  // v ↦ η(dv) for the given generators.
  std::vector<Element> obstruction_on(const std::vector<std::uint32_t>& generators) const;

 private:
  DerivationClass(Morphism base, std::vector<Element> eta) : base_(std::move(base)), eta_(std::move(eta)) {}
  Morphism base_;
  std::vector<Element> eta_;
};

std::string format(const Morphism& f);
std::string format(const Homotopy& H);

}  // namespace dgakit
