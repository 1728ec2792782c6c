#include "dgakit/morphism.hpp"

#include "dgakit/errors.hpp"

namespace dgakit {

namespace {

void require_prefix_closed(const FreeCDGA& source, std::size_t defined) {
  if (defined > source.size()) fail("DiagramMismatch", "more images than source generators");
  for (std::size_t i = 0; i < defined; ++i)
    for (const auto& [m, c] : source.d_of(static_cast<std::uint32_t>(i)).terms())
      for (const auto& [g, e] : m.factors())
        if (g >= defined)
          fail("DiagramMismatch", "d(" + source.generators()[i].name + ") involves the undefined generator " +
                                      source.generators()[g].name);
}

void require_extension(const FreeCDGA& bigger, const FreeCDGA& smaller) {
  if (bigger.size() < smaller.size()) fail("AlgebraMismatch", "target is not an extension");
  for (std::size_t i = 0; i < smaller.size(); ++i)
    if (!(bigger.generators()[i] == smaller.generators()[i]) ||
        !(bigger.differentials()[i] == smaller.differentials()[i]))
      fail("AlgebraMismatch", "target is not an extension (generator " + smaller.generators()[i].name + ")");
}

void check_generator_defined(const FreeCDGA& source, std::uint32_t g, std::size_t defined) {
  if (g >= defined)
    fail("DiagramMismatch", "map is not defined on generator " + source.generators()[g].name);
}

}  // namespace

// ---------------------------------------------------------------------------
// Morphism

Morphism Morphism::make(FreeCDGA source, FreeCDGA target, std::vector<Element> images) {
  require_prefix_closed(source, images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    target.check_member(images[i]);
    auto deg = target.degree(images[i]);
    if (deg && *deg != source.degree(static_cast<std::uint32_t>(i)))
      fail("DegreeMismatch", "image of " + source.generators()[i].name + " has degree " +
                                 std::to_string(*deg));
  }
  return Morphism(std::move(source), std::move(target), std::move(images));
}

Morphism Morphism::zero(FreeCDGA source, FreeCDGA target, std::size_t defined) {
  const std::size_t n = std::min(defined, source.size());
  return make(std::move(source), std::move(target), std::vector<Element>(n));
}

Morphism Morphism::identity(const FreeCDGA& A) {
  std::vector<Element> images;
  for (std::uint32_t i = 0; i < A.size(); ++i) images.push_back(A.gen(i));
  return make(A, A, std::move(images));
}

Element Morphism::apply(const Element& a) const {
  source_.check_member(a);
  Element out;
  for (const auto& [m, c] : a.terms()) {
    Element term = Element::constant(c);
    for (const auto& [g, e] : m.factors()) {
      check_generator_defined(source_, g, images_.size());
      term = target_.multiply(term, target_.power(images_[g], e));
      if (term.is_zero()) break;
    }
    out += term;
  }
  return out;
}

bool Morphism::is_chain_map() const {
  for (std::uint32_t i = 0; i < images_.size(); ++i)
    if (target_.differentiate(images_[i]) != apply(source_.d_of(i))) return false;
  return true;
}

void Morphism::require_chain_map() const {
  for (std::uint32_t i = 0; i < images_.size(); ++i) {
    Element lhs = target_.differentiate(images_[i]);
    Element rhs = apply(source_.d_of(i));
    if (lhs != rhs)
      fail("NotChainMap", "d(f(" + source_.generators()[i].name + ")) = " + target_.format(lhs) +
                              " but f(d" + source_.generators()[i].name + ") = " + target_.format(rhs));
  }
}

Morphism Morphism::with_target(const FreeCDGA& bigger) const {
  require_extension(bigger, target_);
  return Morphism(source_, bigger, images_);
}

Morphism Morphism::extended(std::vector<Element> more) const {
  std::vector<Element> images = images_;
  images.insert(images.end(), more.begin(), more.end());
  return make(source_, target_, std::move(images));
}

Morphism Morphism::restricted(std::size_t defined) const {
  std::vector<Element> images(images_.begin(), images_.begin() + static_cast<long>(std::min(defined, images_.size())));
  return make(source_, target_, std::move(images));
}

bool Morphism::operator==(const Morphism& other) const {
  return source_.same_presentation(other.source_) && target_.same_presentation(other.target_) &&
         images_ == other.images_;
}

Morphism compose(const Morphism& g, const Morphism& f) {
  if (!g.source().same_presentation(f.target()))
    fail("AlgebraMismatch", "composite of maps with mismatched middle algebra");
  std::vector<Element> images;
  for (const auto& im : f.images()) images.push_back(g.apply(im));
  return Morphism::make(f.source(), g.target(), std::move(images));
}

// ---------------------------------------------------------------------------
// Homotopy

Homotopy Homotopy::make(FreeCDGA source, FreeCDGA target, std::vector<CylinderElement> images) {
  require_prefix_closed(source, images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    for (const auto& part : {&images[i].t_part(), &images[i].dt_part()})
      for (const auto& [p, a] : *part) target.check_member(a);
    auto deg = cyl_degree(target, images[i]);
    if (deg && *deg != source.degree(static_cast<std::uint32_t>(i)))
      fail("DegreeMismatch", "homotopy image of " + source.generators()[i].name + " has degree " +
                                 std::to_string(*deg));
  }
  return Homotopy(std::move(source), std::move(target), std::move(images));
}

Homotopy Homotopy::constant(const Morphism& f) {
  std::vector<CylinderElement> images;
  for (const auto& im : f.images()) images.push_back(CylinderElement::constant(im));
  return make(f.source(), f.target(), std::move(images));
}

CylinderElement Homotopy::apply(const Element& a) const {
  source_.check_member(a);
  CylinderElement out;
  for (const auto& [m, c] : a.terms()) {
    CylinderElement term = CylinderElement::constant(Element::constant(c));
    for (const auto& [g, e] : m.factors()) {
      check_generator_defined(source_, g, images_.size());
      for (std::uint32_t k = 0; k < e && !term.is_zero(); ++k) term = cyl_multiply(target_, term, images_[g]);
    }
    out += term;
  }
  return out;
}

bool Homotopy::is_chain_map() const {
  for (std::uint32_t i = 0; i < images_.size(); ++i)
    if (cyl_differentiate(target_, images_[i]) != apply(source_.d_of(i))) return false;
  return true;
}

Morphism Homotopy::endpoint(int t) const {
  std::vector<Element> images;
  for (const auto& im : images_) images.push_back(evaluate_at(im, t));
  return Morphism::make(source_, target_, std::move(images));
}

std::vector<Element> Homotopy::integrals() const {
  std::vector<Element> out;
  for (const auto& im : images_) out.push_back(integrate_0_1(target_, im));
  return out;
}

Homotopy Homotopy::with_target(const FreeCDGA& bigger) const {
  require_extension(bigger, target_);
  return Homotopy(source_, bigger, images_);
}

Homotopy Homotopy::extended(std::vector<CylinderElement> more) const {
  std::vector<CylinderElement> images = images_;
  images.insert(images.end(), more.begin(), more.end());
  return make(source_, target_, std::move(images));
}

Homotopy Homotopy::restricted(std::size_t defined) const {
  std::vector<CylinderElement> images(images_.begin(),
                                      images_.begin() + static_cast<long>(std::min(defined, images_.size())));
  return make(source_, target_, std::move(images));
}

Homotopy Homotopy::reversed() const {
  std::vector<CylinderElement> images;
  for (const auto& im : images_) images.push_back(reverse_interval(im));
  return Homotopy(source_, target_, std::move(images));
}

bool Homotopy::operator==(const Homotopy& other) const {
  return source_.same_presentation(other.source_) && target_.same_presentation(other.target_) &&
         images_ == other.images_;
}

bool validate_homotopy(const Homotopy& H, const Morphism& f, const Morphism& g) {
  if (!H.source().same_presentation(f.source()) || !H.source().same_presentation(g.source()))
    fail("AlgebraMismatch", "homotopy and endpoint maps have different sources");
  if (!H.target().same_presentation(f.target()) || !H.target().same_presentation(g.target()))
    fail("AlgebraMismatch", "homotopy and endpoint maps have different targets");
  if (H.defined() != f.defined() || H.defined() != g.defined()) return false;
  return H.is_chain_map() && H.endpoint(0).images() == f.images() && H.endpoint(1).images() == g.images();
}

SquareElement apply_square(const FreeCDGA& source, const FreeCDGA& target,
                           const std::vector<SquareElement>& images, const Element& a) {
  SquareElement out;
  for (const auto& [m, c] : a.terms()) {
    SquareElement term = SquareElement::term(Element::constant(c), {});
    for (const auto& [g, e] : m.factors()) {
      check_generator_defined(source, g, images.size());
      for (std::uint32_t k = 0; k < e && !term.is_zero(); ++k) term = square_multiply(target, term, images[g]);
    }
    out += term;
  }
  return out;
}

// ---------------------------------------------------------------------------
// DerivationClass

DerivationClass DerivationClass::make(Morphism base, std::vector<Element> eta) {
  if (eta.size() != base.defined()) fail("DiagramMismatch", "η must be given on every defined generator");
  for (std::size_t i = 0; i < eta.size(); ++i) {
    base.target().check_member(eta[i]);
    auto deg = base.target().degree(eta[i]);
    if (deg && *deg != base.source().degree(static_cast<std::uint32_t>(i)) - 1)
      fail("DegreeMismatch", "η(" + base.source().generators()[i].name + ") must have degree one less");
  }
  return DerivationClass(std::move(base), std::move(eta));
}

Element DerivationClass::apply_eta(const Element& a) const {
  const FreeCDGA& S = base_.source();
  const FreeCDGA& T = base_.target();
  Element out;
  for (const auto& [m, c] : a.terms()) {
    if (m.is_unit()) continue;
    // m = g · w with g the first factor.
    auto factors = m.factors();
    const std::uint32_t g = factors.front().first;
    if (--factors.front().second == 0) factors.erase(factors.begin());
    const Monomial w(factors);
    const Element we = Element::monomial(w);
    check_generator_defined(S, g, eta_.size());
    Element first = T.multiply(eta_[g], base_.apply(we));
    if (S.degree(w) % 2 != 0) first *= Rational(-1);
    Element second = T.multiply(base_.image(g), apply_eta(we));
    out += (first + second) * c;
  }
  return out;
}

bool DerivationClass::is_valid() const {
  const FreeCDGA& S = base_.source();
  const FreeCDGA& T = base_.target();
  for (std::uint32_t i = 0; i < eta_.size(); ++i)
    if (T.differentiate(eta_[i]) != apply_eta(S.d_of(i))) return false;
  return true;
}

bool DerivationClass::satisfies_leibniz() const {
  const FreeCDGA& S = base_.source();
  const FreeCDGA& T = base_.target();
  for (std::uint32_t i = 0; i < eta_.size(); ++i)
    for (std::uint32_t j = 0; j < eta_.size(); ++j) {
      Element u = S.gen(i);
      Element v = S.gen(j);
      Element lhs = apply_eta(S.multiply(u, v));
      Element rhs = T.multiply(eta_[i], base_.image(j));
      if (S.degree(j) % 2 != 0) rhs *= Rational(-1);
      rhs += T.multiply(base_.image(i), eta_[j]);
      if (lhs != rhs) return false;
    }
  return true;
}

DerivationClass DerivationClass::boxplus(const DerivationClass& other) const {
  if (!(base_ == other.base_)) fail("DiagramMismatch", "boxplus needs a common base map");
  std::vector<Element> eta = eta_;
  for (std::size_t i = 0; i < eta.size(); ++i) eta[i] += other.eta_[i];
  return make(base_, std::move(eta));
}

std::vector<Element> DerivationClass::obstruction_on(const std::vector<std::uint32_t>& generators) const {
  std::vector<Element> out;
  for (auto v : generators) out.push_back(apply_eta(base_.source().d_of(v)));
  return out;
}

std::string format(const Morphism& f) {
  std::string out;
  for (std::size_t i = 0; i < f.defined(); ++i) {
    if (!out.empty()) out += "\n";
    out += f.source().generators()[i].name + " -> " + f.target().format(f.image(static_cast<std::uint32_t>(i)));
  }
  return out;
}

std::string format(const Homotopy& H) {
  std::string out;
  for (std::size_t i = 0; i < H.defined(); ++i) {
    if (!out.empty()) out += "\n";
    out += H.source().generators()[i].name + " -> " + format(H.target(), H.image(static_cast<std::uint32_t>(i)));
  }
  return out;
}

}  // namespace dgakit
