#include "dgakit/obstruction.hpp"

#include "dgakit/errors.hpp"

namespace dgakit {

// ---------------------------------------------------------------------------
// WeightLedger

WeightLedger WeightLedger::from_algebra(const FreeCDGA& A, Rational theta) {
  std::map<std::string, Rational> weights;
  for (const auto& g : A.generators()) {
    if (!g.weight) fail("UnregisteredAtom", "generator '" + g.name + "' carries no weight");
    weights[g.name] = Rational(*g.weight);
  }
  return WeightLedger(std::move(weights), std::move(theta));
}

Rational WeightLedger::atom(const std::string& name) const {
  auto it = weights_.find(name);
  if (it == weights_.end()) fail("UnregisteredAtom", "no ledger weight for '" + name + "'");
  return it->second;
}

Rational WeightLedger::monomial(const FreeCDGA& A, const Monomial& m) const {
  Rational w = 0;
  for (const auto& [g, e] : m.factors()) w += atom(A.generators()[g].name) * Rational(static_cast<long>(e));
  return w;
}

std::optional<Rational> WeightLedger::weight(const FreeCDGA& A, const Element& a) const {
  std::optional<Rational> best;
  for (const auto& [m, c] : a.terms()) {
    Rational w = monomial(A, m);
    if (!best || w > *best) best = w;
  }
  return best;
}

std::optional<Rational> WeightLedger::weight(const FreeCDGA& A, const CylinderElement& u) const {
  std::optional<Rational> best;
  auto visit = [&](const Element& a, const Rational& shift) {
    auto w = weight(A, a);
    if (!w) return;
    Rational total = *w + shift;
    if (!best || total > *best) best = total;
  };
  for (const auto& [i, a] : u.t_part()) visit(a, 0);
  for (const auto& [i, a] : u.dt_part()) visit(a, theta_);
  return best;
}

// ---------------------------------------------------------------------------
// Extension obstructions

namespace {

CylinderElement d_of_c_times_t(const FreeCDGA& T, const Element& c) {
  // d(c⊗t) = dc⊗t + (-1)^{|c|} c⊗dt
  CylinderElement out = CylinderElement::term(T.differentiate(c), 1, false);
  out.add(T.sign_by_degree(c), 0, true);
  return out;
}

void require_consecutive(const std::vector<std::uint32_t>& V, std::size_t start, const std::string& what) {
  for (std::size_t i = 0; i < V.size(); ++i)
    if (V[i] != start + i)
      fail("DiagramMismatch", what + ": new generators must directly follow the defined ones");
}

}  // namespace

ConeCochain cone_differential(const Morphism& h, const ConeCochain& x) {
  return {h.source().differentiate(x.b), h.apply(x.b) - h.target().differentiate(x.c)};
}

std::vector<ConeCochain> extension_obstruction(const Morphism& f, const Morphism& g, const Morphism& h,
                                               const Homotopy& H, const std::vector<std::uint32_t>& V) {
  if (!f.source().same_presentation(g.source()) || !f.source().same_presentation(H.source()))
    fail("DiagramMismatch", "f, g and H must share their source");
  if (!h.source().same_presentation(f.target()))
    fail("DiagramMismatch", "h must start where f lands");
  if (!h.target().same_presentation(g.target()) || !h.target().same_presentation(H.target()))
    fail("DiagramMismatch", "g, h and H must land in the same algebra");
  if (H.defined() != f.defined()) fail("DiagramMismatch", "H and f must be defined on the same sub-DGA");
  require_consecutive(V, f.defined(), "extension_obstruction");
  if (g.defined() < f.defined() + V.size()) fail("DiagramMismatch", "g must be defined on the new generators");
  if (H.endpoint(0).images() != g.restricted(f.defined()).images())
    fail("DiagramMismatch", "H does not start at g restricted to the base");
  if (H.endpoint(1).images() != compose(h, f).images())
    fail("DiagramMismatch", "H does not end at h∘f");

  std::vector<ConeCochain> out;
  for (auto v : V) {
    const Element& dv = f.source().d_of(v);
    ConeCochain o{f.apply(dv), g.image(v) + integrate_0_1(H.target(), H.apply(dv))};
    ConeCochain dO = cone_differential(h, o);
    if (!dO.b.is_zero() || !dO.c.is_zero())
      fail("InternalError", "obstruction for " + f.source().generators()[v].name + " is not a cocycle");
    out.push_back(std::move(o));
  }
  return out;
}

std::pair<Morphism, Homotopy> extend_with_witness(const Morphism& f, const Morphism& g, const Morphism& h,
                                                  const Homotopy& H, const std::vector<std::uint32_t>& V,
                                                  const std::vector<ConeCochain>& witness) {
  if (witness.size() != V.size()) fail("WitnessInvalid", "one witness pair per new generator is required");
  auto O = extension_obstruction(f, g, h, H, V);
  const FreeCDGA& C = H.target();
  std::vector<Element> b;
  std::vector<CylinderElement> cyl;
  for (std::size_t i = 0; i < V.size(); ++i) {
    f.target().check_member(witness[i].b);
    C.check_member(witness[i].c);
    if (cone_differential(h, witness[i]) != O[i])
      fail("WitnessInvalid", "d(b, c) differs from the obstruction on " + f.source().generators()[V[i]].name);
    b.push_back(witness[i].b);
    const Element& dv = f.source().d_of(V[i]);
    CylinderElement u = CylinderElement::constant(g.image(V[i]));
    u += d_of_c_times_t(C, witness[i].c);
    u += integrate_0_t(C, H.apply(dv));
    cyl.push_back(std::move(u));
  }
  Morphism f_ext = f.extended(std::move(b));
  Homotopy H_ext = H.extended(std::move(cyl));
  if (!validate_homotopy(H_ext, g.restricted(f_ext.defined()), compose(h, f_ext)))
    fail("InternalError", "extended homotopy failed validation");
  return {f_ext, H_ext};
}

std::vector<Element> homotopy_step_obstruction(const Morphism& phi, const Morphism& psi, const Homotopy& PhiK,
                                               const std::vector<std::uint32_t>& V) {
  require_consecutive(V, PhiK.defined(), "homotopy_step_obstruction");
  std::vector<Element> out;
  for (auto v : V)
    out.push_back(psi.image(v) - phi.image(v) - integrate_0_1(PhiK.target(), PhiK.apply(phi.source().d_of(v))));
  return out;
}

Homotopy extend_homotopy(const Morphism& phi, const Morphism& psi, const Homotopy& PhiK,
                         const std::vector<std::uint32_t>& V, const std::vector<Element>& c) {
  if (c.size() != V.size()) fail("PrimitiveInvalid", "one primitive per new generator is required");
  auto sigma = homotopy_step_obstruction(phi, psi, PhiK, V);
  const FreeCDGA& T = PhiK.target();
  std::vector<CylinderElement> images;
  for (std::size_t i = 0; i < V.size(); ++i) {
    T.check_member(c[i]);
    if (T.differentiate(c[i]) != sigma[i])
      fail("PrimitiveInvalid", "dc differs from the obstruction on " + phi.source().generators()[V[i]].name);
    CylinderElement u = CylinderElement::constant(phi.image(V[i]));
    u += d_of_c_times_t(T, c[i]);
    u += integrate_0_t(T, PhiK.apply(phi.source().d_of(V[i])));
    images.push_back(std::move(u));
  }
  Homotopy out = PhiK.extended(std::move(images));
  if (!validate_homotopy(out, phi.restricted(out.defined()), psi.restricted(out.defined())))
    fail("InternalError", "extended homotopy failed validation");
  return out;
}

Homotopy homotopy_from_primitives(const Morphism& f, const std::vector<Element>& c) {
  const FreeCDGA& S = f.source();
  const FreeCDGA& T = f.target();
  if (c.size() > f.defined()) fail("DiagramMismatch", "more primitives than defined generators");
  Homotopy H = Homotopy::make(S, T, {});
  for (std::uint32_t v = 0; v < c.size(); ++v) {
    T.check_member(c[v]);
    auto deg = T.degree(c[v]);
    if (deg && *deg != S.degree(v) - 1)
      fail("DegreeMismatch", "primitive for " + S.generators()[v].name + " has the wrong degree");
    CylinderElement u = CylinderElement::constant(f.image(v));
    u += d_of_c_times_t(T, c[v]);
    u += integrate_0_t(T, H.apply(S.d_of(v)));
    H = H.extended({std::move(u)});
  }
  return H;
}

// ---------------------------------------------------------------------------
// Concatenation

Element integrate_lower_triangle(const FreeCDGA& /*A*/, const SquareElement& u) {
  Element out;
  for (const auto& [k, a] : u.terms()) {
    if (!k.dt || !k.ds) continue;
    // ∫_{t=0}^{1} ∫_{s=0}^{t} t^i s^j ds dt = 1 / ((j+1)(i+j+2))
    out += a * make_rational(1, static_cast<long>((k.s + 1) * (k.t + k.s + 2)));
  }
  return out;
}

Concatenation concatenate(const Homotopy& Phi, const Homotopy& Psi) {
  if (!Phi.source().same_presentation(Psi.source()) || !Phi.target().same_presentation(Psi.target()))
    fail("EndpointMismatch", "homotopies live between different algebras");
  if (Phi.defined() != Psi.defined()) fail("EndpointMismatch", "homotopies are defined on different sub-DGAs");
  if (Phi.endpoint(1).images() != Psi.endpoint(0).images())
    fail("EndpointMismatch", "the first homotopy does not end where the second starts");

  const FreeCDGA& S = Phi.source();
  const FreeCDGA& T = Phi.target();
  Concatenation out{Homotopy::constant(Morphism::zero(S, T, 0)), {}, {}};
  std::vector<CylinderElement> diagonal;
  for (std::uint32_t v = 0; v < Phi.defined(); ++v) {
    const CylinderElement& psi_v = Psi.image(v);
    SquareElement bar = SquareElement::from_t(Phi.image(v));
    bar += SquareElement::from_s(psi_v);
    bar -= SquareElement::from_s(CylinderElement::constant(evaluate_at(psi_v, 0)));
    SquareElement lower = apply_square(S, T, out.square, S.d_of(v));
    bar += square_integrate_0_s(T, lower - restrict_t(lower, 1));
    out.square.push_back(bar);
    diagonal.push_back(diagonal_restrict(bar));
  }
  out.xi = Homotopy::make(S, T, std::move(diagonal));
  for (std::uint32_t v = 0; v < Phi.defined(); ++v)
    out.additivity_defect.push_back(integrate_0_1(T, out.xi.image(v)) - integrate_0_1(T, Phi.image(v)) -
                                    integrate_0_1(T, Psi.image(v)));
  return out;
}

// ---------------------------------------------------------------------------
// Dilatation

DilatationReport dilatation_exponent(const Morphism& f, const WeightLedger& ledger) {
  DilatationReport r{0, {}};
  for (std::uint32_t v = 0; v < f.defined(); ++v) {
    auto w = ledger.weight(f.target(), f.image(v));
    std::optional<Rational> e;
    if (w) {
      e = *w / Rational(f.source().degree(v));
      if (*e > r.exponent) r.exponent = *e;
    }
    r.per_generator.push_back(e);
  }
  return r;
}

DilatationReport dilatation_exponent(const Homotopy& H, const WeightLedger& ledger) {
  DilatationReport r{0, {}};
  for (std::uint32_t v = 0; v < H.defined(); ++v) {
    auto w = ledger.weight(H.target(), H.image(v));
    std::optional<Rational> e;
    if (w) {
      e = *w / Rational(H.source().degree(v));
      if (*e > r.exponent) r.exponent = *e;
    }
    r.per_generator.push_back(e);
  }
  return r;
}

LengthReport formal_length(const Homotopy& H, const WeightLedger& ledger) {
  LengthReport r{0, H.integrals(), {}, 0};
  for (std::uint32_t v = 0; v < H.defined(); ++v) {
    auto w = ledger.weight(H.target(), r.integrals[v]);
    std::optional<Rational> e;
    if (w) {
      e = *w / Rational(H.source().degree(v));
      if (*e > r.exponent) r.exponent = *e;
    }
    r.per_generator.push_back(e);
    for (const auto& [m, c] : r.integrals[v].terms())
      if (abs(c) > r.max_coefficient) r.max_coefficient = abs(c);
  }
  return r;
}

}  // namespace dgakit
