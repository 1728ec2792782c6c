#include "dgakit/cochain.hpp"

#include "dgakit/errors.hpp"
#include "dgakit/lp.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace dgakit {

namespace {

void add_faces(const Simplex& s, std::vector<std::set<Simplex>>& out) {
  const std::size_t n = s.size();
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    Simplex face;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) face.push_back(s[i]);
    if (out.size() < face.size()) out.resize(face.size());
    out[face.size() - 1].insert(face);
  }
}

Simplex normalized(Simplex s) {
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) fail("InvalidArgument", "simplex with a repeated vertex");
  if (s.empty()) fail("InvalidArgument", "empty simplex");
  if (s.size() > 20) fail("TooLarge", "simplex dimension above 19");
  return s;
}

std::vector<Simplex> maximal_simplices(const std::vector<std::vector<Simplex>>& by_dim,
                                       const std::function<bool(int, std::size_t)>& keep) {
  std::vector<Simplex> out;
  std::set<Simplex> covered;
  for (int k = static_cast<int>(by_dim.size()) - 1; k >= 0; --k) {
    for (std::size_t i = 0; i < by_dim[k].size(); ++i) {
      if (!keep(k, i)) continue;
      const Simplex& s = by_dim[k][i];
      if (!covered.count(s)) out.push_back(s);
      for (std::size_t drop = 0; drop < s.size() && s.size() > 1; ++drop) {
        Simplex face = s;
        face.erase(face.begin() + static_cast<long>(drop));
        covered.insert(face);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Rational linf(const Vector& v) {
  Rational m = 0;
  for (const auto& x : v) m = std::max(m, Rational(abs(x)));
  return m;
}

Rational l1(const Vector& v) {
  Rational m = 0;
  for (const auto& x : v) m += abs(x);
  return m;
}

}  // namespace

SimplicialPair SimplicialPair::make(const std::vector<Simplex>& maximal, const std::vector<Simplex>& subcomplex) {
  std::vector<std::set<Simplex>> x;
  std::vector<std::set<Simplex>> a;
  for (const auto& s : maximal) add_faces(normalized(s), x);
  for (const auto& s : subcomplex) add_faces(normalized(s), a);
  SimplicialPair p;
  for (const auto& level : x)
    for (const auto& s : level) p.vertex_count_ = std::max<std::size_t>(p.vertex_count_, s.back() + 1);
  p.simplices_.resize(x.size());
  p.in_a_.resize(x.size());
  p.relative_.resize(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) {
    p.simplices_[k].assign(x[k].begin(), x[k].end());
    p.in_a_[k].assign(x[k].size(), false);
    for (std::size_t i = 0; i < p.simplices_[k].size(); ++i) p.index_[p.simplices_[k][i]] = i;
  }
  for (std::size_t k = 0; k < a.size(); ++k)
    for (const auto& s : a[k]) {
      auto it = p.index_.find(s);
      if (it == p.index_.end()) fail("InvalidArgument", "subcomplex simplex not in the complex");
      p.in_a_[k][it->second] = true;
    }
  for (std::size_t k = 0; k < x.size(); ++k)
    for (std::size_t i = 0; i < p.simplices_[k].size(); ++i)
      if (!p.in_a_[k][i]) p.relative_[k].push_back(i);
  return p;
}

const std::vector<Simplex>& SimplicialPair::simplices(int k) const {
  static const std::vector<Simplex> none;
  if (k < 0 || k > dimension()) return none;
  return simplices_[static_cast<std::size_t>(k)];
}

bool SimplicialPair::in_subcomplex(int k, std::size_t index) const {
  return in_a_.at(static_cast<std::size_t>(k)).at(index);
}

std::optional<std::size_t> SimplicialPair::index_of(const Simplex& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const std::vector<std::size_t>& SimplicialPair::relative_basis(int k) const {
  static const std::vector<std::size_t> none;
  if (k < 0 || k > dimension()) return none;
  return relative_[static_cast<std::size_t>(k)];
}

Matrix SimplicialPair::coboundary(int k) const {
  const auto& rows = relative_basis(k);
  const auto& cols = relative_basis(k - 1);
  Matrix D(rows.size(), cols.size());
  if (k <= 0) return D;
  std::map<std::size_t, std::size_t> position;
  for (std::size_t j = 0; j < cols.size(); ++j) position[cols[j]] = j;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const Simplex& s = simplices_[static_cast<std::size_t>(k)][rows[r]];
    for (std::size_t i = 0; i < s.size(); ++i) {
      Simplex face = s;
      face.erase(face.begin() + static_cast<long>(i));
      auto it = position.find(index_.at(face));
      if (it != position.end()) D(r, it->second) = (i % 2 == 0) ? 1 : -1;
    }
  }
  return D;
}

SimplicialPair parse_complex(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<Simplex> x;
  std::vector<Simplex> a;
  bool in_a = false;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string word;
    Simplex s;
    while (words >> word) {
      if (word == "A") {
        if (!s.empty()) fail("ParseError", "line " + std::to_string(line_no) + ": 'A' must stand alone");
        in_a = true;
        continue;
      }
      std::size_t used = 0;
      long v = -1;
      try {
        v = std::stol(word, &used);
      } catch (...) {
        used = 0;
      }
      if (used != word.size() || v < 0)
        fail("ParseError", "line " + std::to_string(line_no) + ": expected a vertex index, got '" + word + "'");
      s.push_back(static_cast<std::uint32_t>(v));
    }
    if (!s.empty()) (in_a ? a : x).push_back(s);
  }
  if (x.empty()) fail("ParseError", "no simplices");
  return SimplicialPair::make(x, a);
}

std::string format_complex(const SimplicialPair& pair) {
  std::vector<std::vector<Simplex>> all;
  for (int k = 0; k <= pair.dimension(); ++k) all.push_back(pair.simplices(k));
  std::ostringstream out;
  auto write = [&](const std::vector<Simplex>& list) {
    for (const auto& s : list) {
      for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
      out << "\n";
    }
  };
  write(maximal_simplices(all, [](int, std::size_t) { return true; }));
  auto a = maximal_simplices(all, [&](int k, std::size_t i) { return pair.in_subcomplex(k, i); });
  if (!a.empty()) {
    out << "A\n";
    write(a);
  }
  return out.str();
}

Primitive min_linf_primitive(const SimplicialPair& pair, int k, const Vector& w) {
  const Matrix D = pair.coboundary(k);
  if (w.size() != D.rows()) fail("DimensionMismatch", "cochain size differs from the number of relative simplices");
  if (!solve(D, w)) fail("NotACoboundary", "w is not a relative coboundary");
  const std::size_t m = D.rows();
  const std::size_t p = D.cols();
  if (p == 0 || is_zero(w)) return {Vector(p), 0};
  // Variables a+ (p), a- (p), M, s1 (p), s2 (p).
  const std::size_t nv = 4 * p + 1;
  const std::size_t M = 2 * p;
  Matrix A(m + 2 * p, nv);
  Vector b(m + 2 * p);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t j = 0; j < p; ++j) {
      A(r, j) = D(r, j);
      A(r, p + j) = -D(r, j);
    }
    b[r] = w[r];
  }
  for (std::size_t j = 0; j < p; ++j) {
    A(m + j, j) = 1;
    A(m + j, p + j) = -1;
    A(m + j, M) = -1;
    A(m + j, M + 1 + j) = 1;
    A(m + p + j, j) = -1;
    A(m + p + j, p + j) = 1;
    A(m + p + j, M) = -1;
    A(m + p + j, M + 1 + p + j) = 1;
  }
  Vector c(nv);
  c[M] = 1;
  LPResult res = solve_lp(A, b, c);
  if (res.status != LPStatus::Optimal) fail("InternalError", "primitive LP did not reach an optimum");
  Vector a(p);
  for (std::size_t j = 0; j < p; ++j) a[j] = res.x[j] - res.x[p + j];
  if (D.apply(a) != w) fail("InternalError", "primitive LP witness does not re-verify");
  return {a, linf(a)};
}

Filling min_mass_filling(const SimplicialPair& pair, int k, const Vector& T) {
  const Matrix B = pair.coboundary(k).transpose();  // ∂ : C_k -> C_{k-1}
  if (T.size() != B.rows()) fail("DimensionMismatch", "chain size differs from the number of relative simplices");
  if (!solve(B, T)) fail("NotABoundary", "T is not a relative boundary");
  const std::size_t m = B.cols();
  if (m == 0 || is_zero(T)) return {Vector(m), 0};
  Matrix A(B.rows(), 2 * m);
  for (std::size_t r = 0; r < B.rows(); ++r)
    for (std::size_t j = 0; j < m; ++j) {
      A(r, j) = B(r, j);
      A(r, m + j) = -B(r, j);
    }
  Vector c(2 * m, Rational(1));
  LPResult res = solve_lp(A, T, c);
  if (res.status != LPStatus::Optimal) fail("InternalError", "filling LP did not reach an optimum");
  Vector S(m);
  for (std::size_t j = 0; j < m; ++j) S[j] = res.x[j] - res.x[m + j];
  if (B.apply(S) != T) fail("InternalError", "filling LP witness does not re-verify");
  return {S, l1(S)};
}

namespace {

// Extreme points (up to sign) of { w ∈ col(B) : ‖w‖∞ <= 1 } for B of full column rank.
std::vector<Vector> linf_ball_vertices(const Matrix& B) {
  const std::size_t m = B.rows();
  const std::size_t r = B.cols();
  std::set<Vector> found;
  std::vector<std::size_t> rows;
  std::function<void(std::size_t)> choose = [&](std::size_t start) {
    if (rows.size() == r) {
      auto inv = inverse(B.select_rows(rows));
      if (!inv) return;
      for (std::uint32_t mask = 0; mask < (1u << (r - 1)); ++mask) {
        Vector s(r);
        s[0] = 1;
        for (std::size_t i = 1; i < r; ++i) s[i] = (mask & (1u << (i - 1))) ? -1 : 1;
        Vector w = B.apply(inv->apply(s));
        if (linf(w) > 1) continue;
        // Fix the sign so that w and -w are identified.
        for (const auto& x : w)
          if (sgn(x) != 0) {
            if (sgn(x) < 0)
              for (auto& y : w) y = -y;
            break;
          }
        found.insert(w);
      }
      return;
    }
    for (std::size_t i = start; i < m; ++i) {
      rows.push_back(i);
      choose(i + 1);
      rows.pop_back();
    }
  };
  choose(0);
  return {found.begin(), found.end()};
}

// Minimal-support vectors of col(B), normalized to unit ℓ¹ norm, up to sign.
std::vector<Vector> circuits(const Matrix& B) {
  const std::size_t p = B.rows();
  std::vector<Vector> out;
  std::set<std::uint32_t> supports;
  for (std::uint32_t mask = 1; mask < (1u << p); ++mask) {
    bool contains_known = false;
    for (auto s : supports)
      if ((s & mask) == s) contains_known = true;
    if (contains_known) continue;
    std::vector<std::size_t> outside;
    for (std::size_t i = 0; i < p; ++i)
      if (!(mask & (1u << i))) outside.push_back(i);
    auto kernel = nullspace(B.select_rows(outside));
    if (kernel.size() != 1) continue;
    Vector T = B.apply(kernel[0]);
    std::uint32_t support = 0;
    for (std::size_t i = 0; i < p; ++i)
      if (sgn(T[i]) != 0) support |= 1u << i;
    if (support != mask) continue;
    supports.insert(mask);
    Rational norm = l1(T);
    for (auto& x : T) x /= norm;
    out.push_back(std::move(T));
  }
  return out;
}

Matrix image_basis(const Matrix& M) { return M.select_columns(independent_columns(M)); }

}  // namespace

IsoperimetricResult iso_constant(const SimplicialPair& pair, int k, IsoSide side, std::size_t cap) {
  const Matrix D = pair.coboundary(k);
  IsoperimetricResult result{0, {}, {}, 0};
  if (side == IsoSide::Forms) {
    if (D.rows() > cap) fail("TooLarge", std::to_string(D.rows()) + " relative " + std::to_string(k) +
                                             "-simplices exceed the cap of " + std::to_string(cap));
    result.extremal = Vector(D.rows());
    result.optimizer = Vector(D.cols());
    const Matrix B = image_basis(D);
    if (B.cols() == 0) return result;
    for (const auto& w : linf_ball_vertices(B)) {
      ++result.vertices;
      Primitive a = min_linf_primitive(pair, k, w);
      if (result.vertices == 1 || a.norm > result.constant) result = {a.norm, w, a.a, result.vertices};
    }
  } else {
    const Matrix boundary = D.transpose();
    if (boundary.rows() > cap)
      fail("TooLarge", std::to_string(boundary.rows()) + " relative " + std::to_string(k - 1) +
                           "-simplices exceed the cap of " + std::to_string(cap));
    result.extremal = Vector(boundary.rows());
    result.optimizer = Vector(boundary.cols());
    const Matrix B = image_basis(boundary);
    if (B.cols() == 0) return result;
    for (const auto& T : circuits(B)) {
      ++result.vertices;
      Filling S = min_mass_filling(pair, k, T);
      if (result.vertices == 1 || S.mass > result.constant) result = {S.mass, T, S.S, result.vertices};
    }
  }
  return result;
}

DualityReport duality_check(const SimplicialPair& pair, int k, std::size_t cap) {
  DualityReport r{iso_constant(pair, k, IsoSide::Forms, cap), iso_constant(pair, k, IsoSide::Chains, cap), false};
  r.equal = r.forms.constant == r.chains.constant;
  return r;
}

RoundingResult guth_round(const SimplicialPair& pair, int n, const Vector& c, const Vector& w) {
  const Matrix D = pair.coboundary(n);
  if (c.size() != D.rows() || w.size() != D.rows()) fail("DimensionMismatch", "cochain sizes differ");
  for (const auto& x : c)
    if (!is_integral(x)) fail("InvalidArgument", "c must be an integral cochain");
  const Matrix next = pair.coboundary(n + 1);
  if (next.rows() > 0 && !is_zero(next.apply(c))) fail("InvalidArgument", "c is not a cocycle");
  Vector diff(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) diff[i] = w[i] - c[i];
  RoundingResult r{min_linf_primitive(pair, n, diff).a, {}, {}, false, true};
  auto remainder_of = [&](const Vector& rounded) {
    Vector image = D.apply(rounded);
    Vector rem(diff.size());
    for (std::size_t i = 0; i < diff.size(); ++i) rem[i] = diff[i] - image[i];
    return rem;
  };
  for (const auto& x : r.b) r.rounded.push_back(Rational(round_nearest(x)));
  r.remainder = remainder_of(r.rounded);
  if (!is_zero(r.remainder)) {
    if (auto integral = solve_integral(D, diff)) {
      r.b.clear();
      for (const auto& x : *integral) r.b.push_back(Rational(x));
      r.rounded = r.b;
      r.remainder = remainder_of(r.rounded);
      r.snapped = true;
    }
  }
  const Rational bound(n + 1, 2);
  for (const auto& x : r.remainder)
    if (abs(x) > bound) r.within_bound = false;
  return r;
}

SimplicialPair prism(const SimplicialPair& base) {
  const auto N = static_cast<std::uint32_t>(base.vertex_count());
  auto lift = [&](const Simplex& s) {
    std::vector<Simplex> out;
    for (std::size_t i = 0; i < s.size(); ++i) {
      Simplex p(s.begin(), s.begin() + static_cast<long>(i) + 1);
      for (std::size_t j = i; j < s.size(); ++j) p.push_back(s[j] + N);
      out.push_back(std::move(p));
    }
    return out;
  };
  std::vector<Simplex> x;
  std::vector<Simplex> a;
  for (int k = 0; k <= base.dimension(); ++k)
    for (std::size_t i = 0; i < base.simplices(k).size(); ++i) {
      for (auto& p : lift(base.simplices(k)[i])) {
        if (base.in_subcomplex(k, i)) a.push_back(p);
        x.push_back(std::move(p));
      }
    }
  return SimplicialPair::make(x, a);
}

}  // namespace dgakit
