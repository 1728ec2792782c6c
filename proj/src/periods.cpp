#include "dgakit/errors.hpp"
#include "dgakit/obstruction.hpp"

#include <functional>

namespace dgakit {

namespace {

std::string fresh_symbol(const FreeCDGA& T, const std::string& base) {
  std::string name = base;
  while (T.index_of(name)) name += "'";
  return name;
}

// Generators of degree <= bound must form a prefix of the source.
std::size_t prefix_through(const FreeCDGA& S, int bound) {
  std::size_t k = 0;
  while (k < S.size() && S.degree(static_cast<std::uint32_t>(k)) <= bound) ++k;
  for (std::size_t i = k; i < S.size(); ++i)
    if (S.degree(static_cast<std::uint32_t>(i)) <= bound)
      fail("DiagramMismatch", "generators must be declared in order of degree");
  return k;
}

// Solution of A x = b with the fewest nonzero entries, trying supports of
// size <= 3 before falling back to a general solution.
std::optional<std::vector<std::pair<std::size_t, Rational>>> sparsest_solution(const Matrix& A, const Vector& b) {
  if (is_zero(b)) return std::nullopt;
  const std::size_t n = A.cols();
  std::vector<std::size_t> cols;
  std::optional<std::vector<std::pair<std::size_t, Rational>>> best;
  std::function<bool(std::size_t, std::size_t)> search = [&](std::size_t start, std::size_t size) {
    if (cols.size() == size) {
      auto x = solve(A.select_columns(cols), b);
      if (!x) return false;
      best.emplace();
      for (std::size_t i = 0; i < cols.size(); ++i)
        if (sgn((*x)[i]) != 0) best->emplace_back(cols[i], (*x)[i]);
      return true;
    }
    for (std::size_t j = start; j < n; ++j) {
      cols.push_back(j);
      if (search(j + 1, size)) return true;
      cols.pop_back();
    }
    return false;
  };
  for (std::size_t size = 1; size <= std::min<std::size_t>(3, n); ++size)
    if (search(0, size)) return best;
  auto x = solve(A, b);
  if (!x) return std::nullopt;
  best.emplace();
  for (std::size_t j = 0; j < n; ++j)
    if (sgn((*x)[j]) != 0) best->emplace_back(j, (*x)[j]);
  return best;
}

}  // namespace

PullbackTarget pullback_target(const FreeCDGA& M, int n, const std::vector<long>& weights) {
  if (!weights.empty() && weights.size() != M.size())
    fail("InvalidGrading", "one weight per source generator is required");
  const std::size_t k = prefix_through(M, n - 1);
  AlgebraOptions opts;
  opts.top_degree = n;
  std::vector<Generator> gens;
  WeightLedger ledger;
  for (std::size_t i = 0; i < k; ++i) {
    const auto& g = M.generators()[i];
    gens.push_back({"w^" + g.name, g.degree, std::nullopt});
    ledger.set(gens.back().name, Rational(weights.empty() ? g.degree : weights[i]));
  }
  FreeCDGA bare = FreeCDGA::make(gens, std::vector<Element>(k), opts);
  std::vector<Element> images;
  for (std::uint32_t i = 0; i < k; ++i) images.push_back(bare.gen(i));
  Morphism to_bare = Morphism::make(M, bare, images);
  std::vector<Element> diffs;
  for (std::uint32_t i = 0; i < k; ++i) diffs.push_back(to_bare.apply(M.d_of(i)));
  FreeCDGA target = FreeCDGA::make(gens, diffs, opts);
  std::vector<Element> phi_images;
  for (std::uint32_t i = 0; i < M.size(); ++i) phi_images.push_back(i < k ? target.gen(i) : Element());
  Morphism phi = Morphism::make(M, target, phi_images);
  phi.require_chain_map();
  return {target, phi, ledger};
}

NullhomotopyRun sullivan_nullhomotopy(const Morphism& phi0, const WeightLedger& ledger0, int through_degree) {
  const FreeCDGA& S = phi0.source();
  const std::size_t k = prefix_through(S, through_degree);
  if (phi0.defined() < k) fail("DiagramMismatch", "φ must be defined on every processed generator");
  phi0.require_chain_map();

  FreeCDGA T = phi0.target();
  Morphism phi = phi0;
  WeightLedger ledger = ledger0;
  Homotopy Phi = Homotopy::make(S, T, {});
  std::vector<std::string> symbols;
  std::vector<Element> integrands;

  for (std::uint32_t v = 0; v < k; ++v) {
    const std::string& name = S.generators()[v].name;
    Element I = phi.image(v) + integrate_0_1(T, Phi.apply(S.d_of(v)));
    CylinderElement image = CylinderElement::constant(phi.image(v));
    image += integrate_0_t(T, Phi.apply(S.d_of(v)));
    std::string symbol;
    if (!I.is_zero()) {
      symbol = fresh_symbol(T, "c(w^" + name + ")");
      if (!T.is_closed(I))
        fail("UnresolvablePrimitive", "prescribed d" + symbol + " = " + T.format(I) + " is not closed");
      T = T.extend({{symbol, S.degree(v) - 1, std::nullopt}}, {I});
      ledger.set(symbol, ledger.weight(T, I).value_or(Rational(0)));
      phi = phi.with_target(T);
      Phi = Phi.with_target(T);
      const Element c = T.gen(symbol);
      // -d(c⊗t) = -dc⊗t - (-1)^{|c|} c⊗dt
      image.add(-I, 1, false);
      image.add(-T.sign_by_degree(c), 0, true);
    }
    symbols.push_back(symbol);
    integrands.push_back(I);
    Phi = Phi.extended({image});
  }
  if (!validate_homotopy(Phi, phi.restricted(k), Morphism::zero(S, T, k)))
    fail("InternalError", "stepwise nullhomotopy failed validation");
  return {T, phi, Phi, ledger, symbols, integrands};
}

PeriodsResult homotopy_periods(const Morphism& phi, const WeightLedger& ledger, int n) {
  PeriodsResult result{sullivan_nullhomotopy(phi, ledger, n - 1), {}};
  const NullhomotopyRun& run = result.run;
  const FreeCDGA& S = phi.source();
  for (std::uint32_t v = static_cast<std::uint32_t>(run.Phi.defined()); v < S.size(); ++v) {
    if (S.degree(v) != n) continue;
    Element base = v < run.phi.defined() ? run.phi.image(v) : Element();
    Element I = base + integrate_0_1(run.target, run.Phi.apply(S.d_of(v)));
    result.integrands.push_back({S.generators()[v].name, I, run.ledger.weight(run.target, I)});
  }
  return result;
}

bool cohomologous_check(const FreeCDGA& A, const Element& a, const Element& b) {
  A.check_member(a);
  A.check_member(b);
  if (!A.is_closed(a)) fail("NotClosed", A.format(a) + " is not closed");
  if (!A.is_closed(b)) fail("NotClosed", A.format(b) + " is not closed");
  auto da = A.degree(a);
  auto db = A.degree(b);
  if (da && db && *da != *db) fail("DegreeMismatch", "classes in different degrees");
  return A.is_exact(a - b);
}

ReductionResult reduce_weight(const FreeCDGA& A, const Element& integrand, const WeightLedger& ledger) {
  A.check_member(integrand);
  ReductionResult r{integrand, ledger.weight(A, integrand), Element(), {}};
  auto deg = A.degree(integrand);
  if (!deg || *deg == 0) {
    if (!r.weight) r.weight = Rational(0);
    return r;
  }
  const int n = *deg;
  const auto& top = A.graded_basis(n);
  const auto& lower = A.graded_basis(n - 1);
  while (r.weight) {
    const Rational W = *r.weight;
    std::vector<std::size_t> pool;
    for (std::size_t j = 0; j < lower.size(); ++j)
      if (ledger.monomial(A, lower[j]) <= W) pool.push_back(j);
    std::vector<std::size_t> heavy;
    for (std::size_t i = 0; i < top.size(); ++i)
      if (ledger.monomial(A, top[i]) >= W) heavy.push_back(i);
    const Matrix D = A.differential_matrix(n - 1);
    const Vector target = A.coordinates(r.reduced, n);
    Matrix system(heavy.size(), pool.size());
    Vector rhs(heavy.size());
    for (std::size_t i = 0; i < heavy.size(); ++i) {
      rhs[i] = target[heavy[i]];
      for (std::size_t j = 0; j < pool.size(); ++j) system(i, j) = D(heavy[i], pool[j]);
    }
    auto found = sparsest_solution(system, rhs);
    if (!found) break;
    Vector beta_coords(lower.size());
    for (const auto& [j, value] : *found) beta_coords[pool[j]] = value;
    Element beta = A.from_coordinates(beta_coords, n - 1);
    Element next = r.reduced - A.differentiate(beta);
    auto w = ledger.weight(A, next);
    if (w && *w >= W) break;
    r.steps.push_back({W, w.value_or(Rational(0)), beta});
    r.correction += beta;
    r.reduced = std::move(next);
    r.weight = w;
  }
  if (!r.weight) r.weight = Rational(0);
  return r;
}

PositiveWeightNullhomotopy positive_weight_nullhomotopy(const Morphism& phi0, const WeightGrading& grading,
                                                        const WeightLedger& ledger0) {
  const FreeCDGA& S = phi0.source();
  if (!is_valid_grading(S, grading)) fail("InvalidGrading", "differentials are not weight-homogeneous");
  if (phi0.defined() != S.size()) fail("DiagramMismatch", "φ must be defined on every generator");
  phi0.require_chain_map();

  FreeCDGA T = phi0.target();
  Morphism phi = phi0;
  WeightLedger ledger = ledger0;
  Homotopy Phi = Homotopy::make(S, T, {});
  std::vector<std::string> symbols;
  for (std::uint32_t v = 0; v < S.size(); ++v) {
    const long i = grading.weights[v];
    const int k = S.degree(v);
    // c(dv): the dt-part of Φ(dv) sits at t^{i-1}; divide by i.
    const CylinderElement lower = Phi.apply(S.d_of(v));
    for (const auto& [p, a] : lower.dt_part())
      if (static_cast<long>(p) != i - 1) fail("InvalidGrading", "Φ(dv) is not weight-homogeneous");
    const Element c_dv = lower.coefficient(static_cast<unsigned>(i - 1), true) * make_rational(1, i);
    Element dc = (k % 2 == 0 ? -phi.image(v) : phi.image(v)) + c_dv;
    std::string symbol;
    Element c;
    if (!dc.is_zero()) {
      symbol = fresh_symbol(T, "c(" + S.generators()[v].name + ")");
      if (!T.is_closed(dc))
        fail("UnresolvablePrimitive", "prescribed d" + symbol + " = " + T.format(dc) + " is not closed");
      T = T.extend({{symbol, k - 1, std::nullopt}}, {dc});
      ledger.set(symbol, ledger.weight(T, dc).value_or(Rational(0)));
      phi = phi.with_target(T);
      Phi = Phi.with_target(T);
      c = T.gen(symbol);
    }
    symbols.push_back(symbol);
    CylinderElement image = CylinderElement::term(phi.image(v), static_cast<unsigned>(i), false);
    image.add(c * Rational(i), static_cast<unsigned>(i - 1), true);
    Phi = Phi.extended({image});
  }
  Morphism zero = Morphism::zero(S, T);
  if (!validate_homotopy(Phi, zero, phi))
    fail("InternalError", "positive-weight nullhomotopy failed validation");
  return {T, zero, phi, Phi, ledger, symbols};
}

}  // namespace dgakit
