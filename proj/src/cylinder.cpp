#include "dgakit/cylinder.hpp"

#include "dgakit/errors.hpp"

namespace dgakit {

namespace {

void check_power(unsigned power) {
  if (power > kMaxIntervalPower)
    fail("DegreeCapExceeded", "interval power " + std::to_string(power) + " exceeds " +
                                  std::to_string(kMaxIntervalPower));
}

void add_to(std::map<unsigned, Element>& part, unsigned power, const Element& a) {
  if (a.is_zero()) return;
  check_power(power);
  auto [it, inserted] = part.try_emplace(power, a);
  if (!inserted) {
    it->second += a;
    if (it->second.is_zero()) part.erase(it);
  }
}

Rational binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return Rational(r);
}

std::string power_suffix(const char* var, unsigned power) {
  if (power == 0) return "";
  std::string out = std::string(" ") + var;
  if (power > 1) out += "^" + std::to_string(power);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// CylinderElement

CylinderElement CylinderElement::term(Element a, unsigned power, bool dt) {
  CylinderElement u;
  u.add(a, power, dt);
  return u;
}

Element CylinderElement::coefficient(unsigned power, bool dt) const {
  const Part& part = dt ? dt_part_ : t_part_;
  auto it = part.find(power);
  return it == part.end() ? Element() : it->second;
}

unsigned CylinderElement::max_power() const {
  unsigned m = 0;
  if (!t_part_.empty()) m = std::max(m, t_part_.rbegin()->first);
  if (!dt_part_.empty()) m = std::max(m, dt_part_.rbegin()->first);
  return m;
}

void CylinderElement::add(const Element& a, unsigned power, bool dt) {
  add_to(dt ? dt_part_ : t_part_, power, a);
}

CylinderElement& CylinderElement::operator+=(const CylinderElement& other) {
  for (const auto& [i, a] : other.t_part_) add(a, i, false);
  for (const auto& [i, a] : other.dt_part_) add(a, i, true);
  return *this;
}

CylinderElement& CylinderElement::operator-=(const CylinderElement& other) {
  for (const auto& [i, a] : other.t_part_) add(-a, i, false);
  for (const auto& [i, a] : other.dt_part_) add(-a, i, true);
  return *this;
}

CylinderElement& CylinderElement::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    t_part_.clear();
    dt_part_.clear();
    return *this;
  }
  for (auto& [i, a] : t_part_) a *= c;
  for (auto& [i, a] : dt_part_) a *= c;
  return *this;
}

CylinderElement cyl_differentiate(const FreeCDGA& A, const CylinderElement& u) {
  CylinderElement out;
  for (const auto& [i, a] : u.t_part()) {
    out.add(A.differentiate(a), i, false);
    if (i > 0) out.add(A.sign_by_degree(a) * Rational(i), i - 1, true);
  }
  for (const auto& [i, a] : u.dt_part()) out.add(A.differentiate(a), i, true);
  return out;
}

CylinderElement cyl_multiply(const FreeCDGA& A, const CylinderElement& u, const CylinderElement& v) {
  CylinderElement out;
  for (const auto& [i, a] : u.t_part()) {
    for (const auto& [j, b] : v.t_part()) out.add(A.multiply(a, b), i + j, false);
    for (const auto& [j, b] : v.dt_part()) out.add(A.multiply(a, b), i + j, true);
  }
  for (const auto& [i, a] : u.dt_part())
    for (const auto& [j, b] : v.t_part()) out.add(A.multiply(a, A.sign_by_degree(b)), i + j, true);
  return out;
}

std::optional<int> cyl_degree(const FreeCDGA& A, const CylinderElement& u) {
  std::optional<int> deg;
  auto visit = [&](const Element& a, int shift) {
    auto d = A.degree(a);
    if (!d) return;
    if (deg && *deg != *d + shift) fail("NotHomogeneous", "cylinder element mixes degrees");
    deg = *d + shift;
  };
  for (const auto& [i, a] : u.t_part()) visit(a, 0);
  for (const auto& [i, a] : u.dt_part()) visit(a, 1);
  return deg;
}

Element evaluate_at(const CylinderElement& u, int endpoint) {
  if (endpoint == 0) return u.coefficient(0, false);
  if (endpoint != 1) fail("InvalidArgument", "endpoint must be 0 or 1");
  Element out;
  for (const auto& [i, a] : u.t_part()) out += a;
  return out;
}

CylinderElement integrate_0_t(const FreeCDGA& A, const CylinderElement& u) {
  CylinderElement out;
  for (const auto& [i, a] : u.dt_part())
    out.add(A.sign_by_degree(a) * make_rational(1, static_cast<long>(i) + 1), i + 1, false);
  return out;
}

Element integrate_0_1(const FreeCDGA& A, const CylinderElement& u) {
  Element out;
  for (const auto& [i, a] : u.dt_part()) out += A.sign_by_degree(a) * make_rational(1, static_cast<long>(i) + 1);
  return out;
}

CylinderElement reverse_interval(const CylinderElement& u) {
  CylinderElement out;
  for (const auto& [dt, part] : {std::pair{false, &u.t_part()}, std::pair{true, &u.dt_part()}}) {
    for (const auto& [i, a] : *part) {
      for (unsigned k = 0; k <= i; ++k) {
        Rational c = binomial(i, k);
        if (k % 2 == 1) c = -c;
        if (dt) c = -c;
        out.add(a * c, k, dt);
      }
    }
  }
  return out;
}

std::string format(const FreeCDGA& A, const CylinderElement& u) {
  if (u.is_zero()) return "0";
  std::map<std::pair<unsigned, bool>, const Element*> ordered;
  for (const auto& [i, a] : u.t_part()) ordered[{i, false}] = &a;
  for (const auto& [i, a] : u.dt_part()) ordered[{i, true}] = &a;
  std::string out;
  for (const auto& [key, a] : ordered) {
    if (!out.empty()) out += " + ";
    out += "(" + A.format(*a) + ")" + power_suffix("t", key.first) + (key.second ? " dt" : "");
  }
  return out;
}

// ---------------------------------------------------------------------------
// SquareElement

SquareElement SquareElement::term(Element a, Key key) {
  SquareElement u;
  u.add(a, key);
  return u;
}

SquareElement SquareElement::from_t(const CylinderElement& u) {
  SquareElement out;
  for (const auto& [i, a] : u.t_part()) out.add(a, {i, 0, false, false});
  for (const auto& [i, a] : u.dt_part()) out.add(a, {i, 0, true, false});
  return out;
}

SquareElement SquareElement::from_s(const CylinderElement& u) {
  SquareElement out;
  for (const auto& [i, a] : u.t_part()) out.add(a, {0, i, false, false});
  for (const auto& [i, a] : u.dt_part()) out.add(a, {0, i, false, true});
  return out;
}

void SquareElement::add(const Element& a, Key key) {
  if (a.is_zero()) return;
  check_power(key.t);
  check_power(key.s);
  auto [it, inserted] = terms_.try_emplace(key, a);
  if (!inserted) {
    it->second += a;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SquareElement& SquareElement::operator+=(const SquareElement& other) {
  for (const auto& [k, a] : other.terms_) add(a, k);
  return *this;
}

SquareElement& SquareElement::operator-=(const SquareElement& other) {
  for (const auto& [k, a] : other.terms_) add(-a, k);
  return *this;
}

SquareElement& SquareElement::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, a] : terms_) a *= c;
  return *this;
}

SquareElement square_differentiate(const FreeCDGA& A, const SquareElement& u) {
  SquareElement out;
  for (const auto& [k, a] : u.terms()) {
    out.add(A.differentiate(a), k);
    const Element signed_a = A.sign_by_degree(a);
    if (k.t > 0 && !k.dt) out.add(signed_a * Rational(k.t), {k.t - 1, k.s, true, k.ds});
    if (k.s > 0 && !k.ds) {
      // ds dt^p = (-1)^p dt^p ds
      Rational c(k.s);
      if (k.dt) c = -c;
      out.add(signed_a * c, {k.t, k.s - 1, k.dt, true});
    }
  }
  return out;
}

SquareElement square_multiply(const FreeCDGA& A, const SquareElement& u, const SquareElement& v) {
  SquareElement out;
  for (const auto& [k1, a] : u.terms()) {
    for (const auto& [k2, b] : v.terms()) {
      if ((k1.dt && k2.dt) || (k1.ds && k2.ds)) continue;
      const bool odd_interval = (static_cast<int>(k1.dt) + static_cast<int>(k1.ds)) % 2 != 0;
      Element prod = A.multiply(a, odd_interval ? A.sign_by_degree(b) : b);
      if (k1.ds && k2.dt) prod *= Rational(-1);
      out.add(prod, {k1.t + k2.t, k1.s + k2.s, k1.dt || k2.dt, k1.ds || k2.ds});
    }
  }
  return out;
}

SquareElement square_integrate_0_s(const FreeCDGA& A, const SquareElement& u) {
  SquareElement out;
  for (const auto& [k, a] : u.terms()) {
    if (!k.ds) continue;
    Element c = A.sign_by_degree(a) * make_rational(1, static_cast<long>(k.s) + 1);
    if (k.dt) c *= Rational(-1);
    out.add(c, {k.t, k.s + 1, k.dt, false});
  }
  return out;
}

SquareElement restrict_t(const SquareElement& u, int endpoint) {
  SquareElement out;
  for (const auto& [k, a] : u.terms()) {
    if (k.dt) continue;
    if (endpoint == 0 && k.t > 0) continue;
    out.add(a, {0, k.s, false, k.ds});
  }
  return out;
}

SquareElement restrict_s(const SquareElement& u, int endpoint) {
  SquareElement out;
  for (const auto& [k, a] : u.terms()) {
    if (k.ds) continue;
    if (endpoint == 0 && k.s > 0) continue;
    out.add(a, {k.t, 0, k.dt, false});
  }
  return out;
}

CylinderElement diagonal_restrict(const SquareElement& u) {
  CylinderElement out;
  for (const auto& [k, a] : u.terms()) {
    if (k.dt && k.ds) continue;
    out.add(a, k.t + k.s, k.dt || k.ds);
  }
  return out;
}

std::string format(const FreeCDGA& A, const SquareElement& u) {
  if (u.is_zero()) return "0";
  std::string out;
  for (const auto& [k, a] : u.terms()) {
    if (!out.empty()) out += " + ";
    out += "(" + A.format(a) + ")" + power_suffix("t", k.t) + power_suffix("s", k.s) +
           (k.dt ? " dt" : "") + (k.ds ? " ds" : "");
  }
  return out;
}

}  // namespace dgakit
