#include "dgakit/graded.hpp"

#include "dgakit/errors.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <unordered_map>

namespace dgakit {

// ---------------------------------------------------------------------------
// Monomial / Element

Monomial::Monomial(std::vector<Factor> factors) : factors_(std::move(factors)) {
  std::sort(factors_.begin(), factors_.end());
  std::vector<Factor> merged;
  for (const auto& f : factors_) {
    if (f.second == 0) continue;
    if (!merged.empty() && merged.back().first == f.first)
      merged.back().second += f.second;
    else
      merged.push_back(f);
  }
  factors_ = std::move(merged);
}

std::uint32_t Monomial::exponent_of(std::uint32_t index) const {
  for (const auto& [i, e] : factors_)
    if (i == index) return e;
  return 0;
}

Element Element::constant(const Rational& c) { return monomial(Monomial(), c); }

Element Element::monomial(Monomial m, const Rational& c) {
  Element e;
  e.add_term(m, c);
  return e;
}

Rational Element::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Element::add_term(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Element& Element::operator+=(const Element& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Element& Element::operator-=(const Element& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Element& Element::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

// ---------------------------------------------------------------------------
// FreeCDGA

struct FreeCDGA::Data {
  std::vector<Generator> generators;
  std::vector<Element> differentials;
  AlgebraOptions options;
  std::unordered_map<std::string, std::uint32_t> index;
  bool minimal = false;

  mutable std::mutex mutex;
  mutable std::map<int, std::vector<Monomial>> basis_cache;
  mutable std::map<Monomial, Element> d_cache;
};

namespace {

void enumerate_basis(const std::vector<Generator>& gens, std::size_t next, int remaining,
                     std::vector<Monomial::Factor>& current, std::vector<Monomial>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (std::size_t i = next; i < gens.size(); ++i) {
    const int deg = gens[i].degree;
    if (deg > remaining) continue;
    const std::uint32_t max_exp = (deg % 2 != 0) ? 1u : static_cast<std::uint32_t>(remaining / deg);
    for (std::uint32_t e = 1; e <= max_exp; ++e) {
      current.emplace_back(static_cast<std::uint32_t>(i), e);
      enumerate_basis(gens, i + 1, remaining - static_cast<int>(e) * deg, current, out);
      current.pop_back();
    }
  }
}

}  // namespace

FreeCDGA FreeCDGA::make(std::vector<Generator> generators, std::vector<Element> differentials,
                        AlgebraOptions options) {
  if (generators.size() != differentials.size())
    fail("InvalidGenerator", "one differential per generator is required");
  auto data = std::make_shared<Data>();
  data->options = options;
  for (std::uint32_t i = 0; i < generators.size(); ++i) {
    const auto& g = generators[i];
    if (g.name.empty()) fail("InvalidGenerator", "empty generator name");
    if (g.degree < 1) fail("InvalidGenerator", "generator '" + g.name + "' must have degree >= 1");
    if (g.degree > options.degree_cap)
      fail("DegreeCapExceeded", "generator '" + g.name + "' exceeds the degree cap");
    if (options.top_degree && g.degree > *options.top_degree)
      fail("DegreeMismatch", "generator '" + g.name + "' lies above the top degree");
    if (!data->index.emplace(g.name, i).second)
      fail("InvalidGenerator", "duplicate generator name '" + g.name + "'");
  }
  data->generators = std::move(generators);
  data->differentials.resize(data->generators.size());
  FreeCDGA algebra(data);

  for (std::uint32_t i = 0; i < data->generators.size(); ++i) {
    const Element& dv = differentials[i];
    algebra.check_member(dv);
    Element reduced;
    for (const auto& [m, c] : dv.terms()) {
      const int deg = algebra.degree(m);
      if (deg != data->generators[i].degree + 1)
        fail("DegreeMismatch", "d(" + data->generators[i].name + ") has a term of degree " +
                                   std::to_string(deg) + ", expected " +
                                   std::to_string(data->generators[i].degree + 1));
      if (options.top_degree && deg > *options.top_degree) continue;
      reduced.add_term(m, c);
    }
    data->differentials[i] = std::move(reduced);
  }

  for (std::uint32_t i = 0; i < data->generators.size(); ++i) {
    Element dd = algebra.differentiate(data->differentials[i]);
    if (!dd.is_zero())
      fail("NonSquareZero", "d(d(" + data->generators[i].name + ")) = " + algebra.format(dd));
  }

  bool minimal = !options.top_degree.has_value();
  for (std::uint32_t i = 0; i < data->generators.size() && minimal; ++i) {
    const int deg = data->generators[i].degree;
    if (deg < 2) minimal = false;
    for (const auto& [m, c] : data->differentials[i].terms())
      for (const auto& [idx, e] : m.factors())
        if (data->generators[idx].degree >= deg) minimal = false;
  }
  data->minimal = minimal;
  return algebra;
}

FreeCDGA FreeCDGA::extend(std::vector<Generator> generators, std::vector<Element> differentials) const {
  std::vector<Generator> gens = data_->generators;
  std::vector<Element> diffs = data_->differentials;
  gens.insert(gens.end(), generators.begin(), generators.end());
  diffs.insert(diffs.end(), differentials.begin(), differentials.end());
  return make(std::move(gens), std::move(diffs), data_->options);
}

const std::vector<Generator>& FreeCDGA::generators() const { return data_->generators; }
const std::vector<Element>& FreeCDGA::differentials() const { return data_->differentials; }
const AlgebraOptions& FreeCDGA::options() const { return data_->options; }
bool FreeCDGA::is_minimal() const { return data_->minimal; }

std::optional<std::uint32_t> FreeCDGA::index_of(const std::string& name) const {
  auto it = data_->index.find(name);
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

std::uint32_t FreeCDGA::require_index(const std::string& name) const {
  auto idx = index_of(name);
  if (!idx) fail("UnknownGenerator", "no generator named '" + name + "'");
  return *idx;
}

Element FreeCDGA::gen(const std::string& name) const { return gen(require_index(name)); }

Element FreeCDGA::gen(std::uint32_t index) const {
  if (index >= size()) fail("AlgebraMismatch", "generator index out of range");
  return Element::monomial(Monomial::generator(index));
}

const Element& FreeCDGA::d_of(std::uint32_t index) const { return data_->differentials.at(index); }

int FreeCDGA::degree(std::uint32_t index) const { return data_->generators.at(index).degree; }

int FreeCDGA::degree(const Monomial& m) const {
  int deg = 0;
  for (const auto& [i, e] : m.factors()) deg += static_cast<int>(e) * degree(i);
  return deg;
}

std::optional<int> FreeCDGA::degree(const Element& a) const {
  std::optional<int> deg;
  for (const auto& [m, c] : a.terms()) {
    const int d = degree(m);
    if (deg && *deg != d) fail("NotHomogeneous", "element " + format(a) + " mixes degrees");
    deg = d;
  }
  return deg;
}

bool FreeCDGA::is_homogeneous(const Element& a) const {
  std::optional<int> deg;
  for (const auto& [m, c] : a.terms()) {
    const int d = degree(m);
    if (deg && *deg != d) return false;
    deg = d;
  }
  return true;
}

void FreeCDGA::check_member(const Element& a) const {
  for (const auto& [m, c] : a.terms()) {
    if (!m.is_unit() && m.max_index() >= size())
      fail("AlgebraMismatch", "element refers to a generator outside the algebra");
    for (const auto& [i, e] : m.factors())
      if (e > 1 && is_odd(i))
        fail("AlgebraMismatch", "odd generator '" + data_->generators[i].name + "' squared");
  }
}

std::pair<int, Monomial> FreeCDGA::multiply(const Monomial& a, const Monomial& b) const {
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::vector<Monomial::Factor> out;
  out.reserve(fa.size() + fb.size());
  int odd_remaining_a = 0;
  for (const auto& f : fa)
    if (is_odd(f.first)) ++odd_remaining_a;
  int parity = 0;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < fa.size() || j < fb.size()) {
    if (j == fb.size() || (i < fa.size() && fa[i].first < fb[j].first)) {
      if (is_odd(fa[i].first)) --odd_remaining_a;
      out.push_back(fa[i++]);
    } else if (i == fa.size() || fb[j].first < fa[i].first) {
      if (is_odd(fb[j].first)) parity ^= (odd_remaining_a & 1);
      out.push_back(fb[j++]);
    } else {
      if (is_odd(fa[i].first)) return {0, Monomial()};
      out.emplace_back(fa[i].first, fa[i].second + fb[j].second);
      ++i;
      ++j;
    }
  }
  Monomial product;
  {
    // factors are already canonical
    product = Monomial(std::move(out));
  }
  if (data_->options.top_degree && degree(product) > *data_->options.top_degree) return {0, Monomial()};
  return {parity ? -1 : 1, std::move(product)};
}

Element FreeCDGA::multiply(const Element& a, const Element& b) const {
  Element out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      auto [sign, m] = multiply(ma, mb);
      if (sign == 0) continue;
      Rational prod = ca * cb;
      if (sign < 0) prod = -prod;
      out.add_term(m, prod);
    }
  return out;
}

Element FreeCDGA::power(const Element& a, unsigned exponent) const {
  Element result = Element::constant(1);
  for (unsigned i = 0; i < exponent; ++i) result = multiply(result, a);
  return result;
}

Element FreeCDGA::differentiate(const Monomial& m) const {
  if (m.is_unit()) return {};
  {
    std::lock_guard<std::mutex> lock(data_->mutex);
    auto it = data_->d_cache.find(m);
    if (it != data_->d_cache.end()) return it->second;
  }
  const auto& factors = m.factors();
  const auto [g, e] = factors.front();
  Monomial head({{g, e}});
  Monomial rest(std::vector<Monomial::Factor>(factors.begin() + 1, factors.end()));

  // d(g^e) = e g^{e-1} dg for even g; odd generators only occur with e = 1.
  Element d_head = multiply(Element::monomial(Monomial({{g, e - 1}}), Rational(static_cast<long>(e))),
                            d_of(g));
  Element result = multiply(d_head, Element::monomial(rest));
  if (!rest.is_unit()) {
    Element tail = multiply(Element::monomial(head), differentiate(rest));
    if ((static_cast<long>(e) * degree(g)) % 2 != 0) tail *= Rational(-1);
    result += tail;
  }
  std::lock_guard<std::mutex> lock(data_->mutex);
  data_->d_cache.emplace(m, result);
  return result;
}

Element FreeCDGA::differentiate(const Element& a) const {
  Element out;
  for (const auto& [m, c] : a.terms()) {
    Element dm = differentiate(m);
    dm *= c;
    out += dm;
  }
  return out;
}

Element FreeCDGA::sign_by_degree(const Element& a) const {
  Element out;
  for (const auto& [m, c] : a.terms()) out.add_term(m, degree(m) % 2 == 0 ? c : -c);
  return out;
}

const std::vector<Monomial>& FreeCDGA::graded_basis(int deg) const {
  static const std::vector<Monomial> empty;
  if (deg < 0) return empty;
  if (deg > data_->options.degree_cap)
    fail("DegreeCapExceeded", "graded piece of degree " + std::to_string(deg) + " exceeds the cap " +
                                  std::to_string(data_->options.degree_cap));
  if (data_->options.top_degree && deg > *data_->options.top_degree) return empty;
  std::lock_guard<std::mutex> lock(data_->mutex);
  auto it = data_->basis_cache.find(deg);
  if (it != data_->basis_cache.end()) return it->second;
  std::vector<Monomial> basis;
  std::vector<Monomial::Factor> current;
  enumerate_basis(data_->generators, 0, deg, current, basis);
  std::sort(basis.begin(), basis.end());
  return data_->basis_cache.emplace(deg, std::move(basis)).first->second;
}

Vector FreeCDGA::coordinates(const Element& a, int deg) const {
  const auto& basis = graded_basis(deg);
  Vector v(basis.size());
  for (const auto& [m, c] : a.terms()) {
    auto it = std::lower_bound(basis.begin(), basis.end(), m);
    if (it == basis.end() || *it != m)
      fail("DegreeMismatch", "term " + format(m) + " is not in degree " + std::to_string(deg));
    v[static_cast<std::size_t>(it - basis.begin())] = c;
  }
  return v;
}

Element FreeCDGA::from_coordinates(const Vector& v, int deg) const {
  const auto& basis = graded_basis(deg);
  Element out;
  for (std::size_t i = 0; i < basis.size(); ++i) out.add_term(basis[i], v[i]);
  return out;
}

Matrix FreeCDGA::differential_matrix(int deg) const {
  const auto& src = graded_basis(deg);
  const auto& dst = graded_basis(deg + 1);
  Matrix m(dst.size(), src.size());
  for (std::size_t j = 0; j < src.size(); ++j) {
    Vector col = coordinates(differentiate(src[j]), deg + 1);
    for (std::size_t i = 0; i < dst.size(); ++i) m(i, j) = col[i];
  }
  return m;
}

std::optional<Element> FreeCDGA::solve_d(const Element& target) const {
  check_member(target);
  auto deg = degree(target);
  if (!deg) return Element();
  if (*deg == 0) return std::nullopt;
  Matrix d = differential_matrix(*deg - 1);
  auto x = solve(d, coordinates(target, *deg));
  if (!x) return std::nullopt;
  return from_coordinates(*x, *deg - 1);
}

bool FreeCDGA::is_exact(const Element& a) const { return solve_d(a).has_value(); }

int FreeCDGA::cohomology_dim(int deg) const {
  if (deg < 0) return 0;
  const int dim = static_cast<int>(graded_basis(deg).size());
  const int rank_out = dim == 0 ? 0 : static_cast<int>(rank(differential_matrix(deg)));
  const int rank_in = deg == 0 ? 0 : static_cast<int>(rank(differential_matrix(deg - 1)));
  return dim - rank_out - rank_in;
}

std::string FreeCDGA::format(const Monomial& m) const {
  if (m.is_unit()) return "1";
  std::string out;
  for (const auto& [i, e] : m.factors()) {
    if (!out.empty()) out += " ^ ";
    out += i < size() ? data_->generators[i].name : "?" + std::to_string(i);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::string FreeCDGA::format(const Element& a) const {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : a.terms()) {
    Rational shown = c;
    if (!first) {
      out += sgn(c) < 0 ? " - " : " + ";
      shown = abs(c);
    }
    out += to_string(shown);
    if (!m.is_unit()) out += " * " + format(m);
    first = false;
  }
  return out;
}

bool FreeCDGA::same_presentation(const FreeCDGA& other) const {
  if (data_ == other.data_) return true;
  return data_->generators == other.data_->generators &&
         data_->differentials == other.data_->differentials &&
         data_->options.top_degree == other.data_->options.top_degree;
}

}  // namespace dgakit
