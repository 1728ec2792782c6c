#include "dgakit/minimal.hpp"

#include "dgakit/errors.hpp"
#include "dgakit/lp.hpp"

#include <functional>
#include <numeric>

namespace dgakit {

FreeCDGA hirsch_extend(const FreeCDGA& base, const HirschExtension& ext) {
  if (ext.generators.size() != ext.differentials.size())
    fail("DegreeMismatch", "one differential per new generator is required");
  for (std::size_t i = 0; i < ext.generators.size(); ++i) {
    if (ext.generators[i].degree != ext.generators.front().degree)
      fail("DegreeMismatch", "generators of a Hirsch extension share one degree");
    base.check_member(ext.differentials[i]);
    Element dd = base.differentiate(ext.differentials[i]);
    if (!dd.is_zero())
      fail("NotClosed", "d(" + ext.generators[i].name + ") = " + base.format(ext.differentials[i]) +
                            " is not closed");
  }
  return base.extend(ext.generators, ext.differentials);
}

// ---------------------------------------------------------------------------
// Minimal models

namespace {

Matrix columns_matrix(const std::vector<Vector>& cols, std::size_t rows) { return Matrix::from_columns(cols, rows); }

std::vector<Vector> matrix_columns(const Matrix& m) {
  std::vector<Vector> out;
  for (std::size_t c = 0; c < m.cols(); ++c) out.push_back(m.column(c));
  return out;
}

}  // namespace

MinimalModel minimal_model_of(const FreeCDGA& A, int up_to_degree) {
  if (A.cohomology_dim(1) != 0) fail("NotSimplyConnected", "H^1 of the input is nonzero");
  if (up_to_degree + 1 > A.options().degree_cap)
    fail("DegreeCapExceeded", "minimal model through degree " + std::to_string(up_to_degree) +
                                  " needs degree " + std::to_string(up_to_degree + 1));

  FreeCDGA M = FreeCDGA::make({}, {});
  std::vector<Element> images;

  auto image_coordinates = [&](const FreeCDGA& model, const Vector& coords, int deg) {
    Morphism m = Morphism::make(model, A, images);
    return A.coordinates(m.apply(model.from_coordinates(coords, deg)), deg);
  };

  for (int n = 2; n <= up_to_degree; ++n) {
    int counter = 0;
    auto fresh_name = [&]() {
      std::string name;
      do {
        name = "v" + std::to_string(n) + "_" + std::to_string(++counter);
      } while (M.index_of(name));
      return name;
    };

    // Surjectivity on H^n: closed generators for classes missing from the image.
    {
      const std::size_t dimA = A.graded_basis(n).size();
      std::vector<Vector> cols = matrix_columns(A.differential_matrix(n - 1));
      const std::size_t n_boundaries = cols.size();
      for (const auto& z : nullspace(M.differential_matrix(n))) cols.push_back(image_coordinates(M, z, n));
      const std::size_t n_known = cols.size();
      const auto cocycles = nullspace(A.differential_matrix(n));
      cols.insert(cols.end(), cocycles.begin(), cocycles.end());
      (void)n_boundaries;
      std::vector<Generator> gens;
      std::vector<Element> diffs;
      for (auto c : independent_columns(columns_matrix(cols, dimA))) {
        if (c < n_known) continue;
        gens.push_back({fresh_name(), n, std::nullopt});
        diffs.emplace_back();
        images.push_back(A.from_coordinates(cols[c], n));
      }
      if (!gens.empty()) M = M.extend(gens, diffs);
    }

    // Injectivity on H^{n+1}: kill cocycles of the model that become exact.
    {
      const auto z_model = nullspace(M.differential_matrix(n + 1));
      if (z_model.empty()) continue;
      const Matrix dA = A.differential_matrix(n);
      const std::size_t dimA = A.graded_basis(n + 1).size();
      const std::size_t dimM = M.graded_basis(n + 1).size();
      // [m(z_1) ... m(z_k) | -dA]
      Matrix system(dimA, z_model.size() + dA.cols());
      for (std::size_t j = 0; j < z_model.size(); ++j) {
        Vector col = image_coordinates(M, z_model[j], n + 1);
        for (std::size_t i = 0; i < dimA; ++i) system(i, j) = col[i];
      }
      for (std::size_t j = 0; j < dA.cols(); ++j)
        for (std::size_t i = 0; i < dimA; ++i) system(i, z_model.size() + j) = -dA(i, j);

      std::vector<Vector> cols = matrix_columns(M.differential_matrix(n));
      const std::size_t n_boundaries = cols.size();
      for (const auto& sol : nullspace(system)) {
        Vector w(dimM);
        for (std::size_t j = 0; j < z_model.size(); ++j)
          if (sgn(sol[j]) != 0)
            for (std::size_t i = 0; i < dimM; ++i) w[i] += sol[j] * z_model[j][i];
        cols.push_back(std::move(w));
      }
      std::vector<Generator> gens;
      std::vector<Element> diffs;
      std::vector<Element> new_images;
      for (auto c : independent_columns(columns_matrix(cols, dimM))) {
        if (c < n_boundaries) continue;
        Element w = M.from_coordinates(cols[c], n + 1);
        Vector target = image_coordinates(M, cols[c], n + 1);
        auto b = solve(dA, target);
        if (!b) fail("InternalError", "kernel representative lost its primitive");
        gens.push_back({fresh_name(), n, std::nullopt});
        diffs.push_back(std::move(w));
        new_images.push_back(A.from_coordinates(*b, n));
      }
      if (!gens.empty()) {
        M = M.extend(gens, diffs);
        images.insert(images.end(), new_images.begin(), new_images.end());
      }
    }
  }
  Morphism m = Morphism::make(M, A, images);
  m.require_chain_map();
  return {M, m};
}

std::optional<Morphism> isomorphic_by_renaming(const FreeCDGA& A, const FreeCDGA& B) {
  const std::size_t n = A.size();
  if (B.size() != n) return std::nullopt;
  std::vector<Element> images(n);
  std::vector<bool> used(n, false);

  std::function<bool(std::size_t)> assign = [&](std::size_t i) -> bool {
    if (i == n) return true;
    const auto ai = static_cast<std::uint32_t>(i);
    Element pulled;
    try {
      pulled = Morphism::make(A, B, std::vector<Element>(images.begin(), images.begin() + static_cast<long>(i)))
                   .apply(A.d_of(ai));
    } catch (const DomainError&) {
      return false;
    }
    for (std::uint32_t j = 0; j < n; ++j) {
      if (used[j] || B.degree(j) != A.degree(ai)) continue;
      const Element& dB = B.d_of(j);
      Rational mu = 1;
      if (dB.is_zero()) {
        if (!pulled.is_zero()) continue;
      } else {
        if (pulled.is_zero()) continue;
        const auto& [m0, c0] = *dB.terms().begin();
        mu = pulled.coefficient(m0) / c0;
        if (sgn(mu) == 0 || dB * mu != pulled) continue;
      }
      used[j] = true;
      images[i] = B.gen(j) * mu;
      if (assign(i + 1)) return true;
      used[j] = false;
    }
    return false;
  };
  if (!assign(0)) return std::nullopt;
  Morphism f = Morphism::make(A, B, images);
  if (!f.is_chain_map()) return std::nullopt;
  return f;
}

// ---------------------------------------------------------------------------
// Canned models

namespace {

using Builder = std::function<std::vector<Element>(const FreeCDGA&)>;

FreeCDGA build(const std::vector<std::pair<std::string, int>>& named, const Builder& diffs) {
  std::vector<Generator> gens;
  for (const auto& [name, degree] : named) gens.push_back({name, degree, std::nullopt});
  FreeCDGA bare = FreeCDGA::make(gens, std::vector<Element>(gens.size()));
  return FreeCDGA::make(std::move(gens), diffs(bare));
}

Element prod(const FreeCDGA& A, std::initializer_list<const char*> names) {
  Element out = Element::constant(1);
  for (const char* n : names) out = A.multiply(out, A.gen(n));
  return out;
}

}  // namespace

FreeCDGA canned_model(const std::string& name) {
  if (name == "S2") return build({{"x", 2}, {"y", 3}}, [](const FreeCDGA& A) {
      return std::vector<Element>{{}, prod(A, {"x", "x"})};
    });
  if (name.size() > 1 && name[0] == 'S' && name.find_first_not_of("0123456789", 1) == std::string::npos) {
    const int n = std::stoi(name.substr(1));
    if (n < 2) fail("UnknownModel", "spheres start at S2 (simple connectivity)");
    if (n % 2 != 0) return build({{"a", n}}, [](const FreeCDGA&) { return std::vector<Element>{{}}; });
    return build({{"a", n}, {"b", 2 * n - 1}}, [](const FreeCDGA& A) {
      return std::vector<Element>{{}, prod(A, {"a", "a"})};
    });
  }
  if (name == "S3vS3")
    return build({{"x1", 3}, {"x2", 3}, {"y", 5}, {"z1", 7}, {"z2", 7}}, [](const FreeCDGA& A) {
      return std::vector<Element>{{}, {}, prod(A, {"x1", "x2"}), prod(A, {"x1", "y"}), prod(A, {"x2", "y"})};
    });
  if (name == "NF")
    return build({{"x", 3}, {"y", 3}, {"z", 5}, {"T", 10}}, [](const FreeCDGA& A) {
      return std::vector<Element>{{}, {}, prod(A, {"x", "y"}), prod(A, {"x", "y", "z"})};
    });
  if (name == "NF_alt")
    return build({{"x1", 3}, {"x2", 3}, {"y", 5}, {"T", 10}}, [](const FreeCDGA& A) {
      return std::vector<Element>{{}, {}, prod(A, {"x1", "x2"}), prod(A, {"x1", "x2", "y"})};
    });
  if (name == "Scaled_source") return build({{"a", 4}, {"b", 7}}, [](const FreeCDGA& A) {
      return std::vector<Element>{{}, prod(A, {"a", "a"})};
    });
  if (name == "Scaled_target") return build({{"x", 3}, {"y", 4}, {"z", 7}}, [](const FreeCDGA& A) {
      return std::vector<Element>{{}, {}, prod(A, {"y", "y"})};
    });
  fail("UnknownModel", "no canned model named '" + name + "'");
}

std::vector<std::string> canned_model_names() {
  return {"S2", "S3", "S4", "S5", "S6", "S7", "S3vS3", "NF", "NF_alt", "Scaled_source", "Scaled_target"};
}

// ---------------------------------------------------------------------------
// Weights

namespace {

long monomial_weight(const Monomial& m, const std::vector<long>& w) {
  long total = 0;
  for (const auto& [g, e] : m.factors()) total += static_cast<long>(e) * w[g];
  return total;
}

}  // namespace

bool is_valid_grading(const FreeCDGA& M, const WeightGrading& grading) {
  if (grading.weights.size() != M.size()) return false;
  for (long w : grading.weights)
    if (w <= 0) return false;
  for (std::uint32_t v = 0; v < M.size(); ++v)
    for (const auto& [m, c] : M.d_of(v).terms())
      if (monomial_weight(m, grading.weights) != grading.weights[v]) return false;
  return true;
}

std::optional<WeightGrading> detect_positive_weights(const FreeCDGA& M) {
  const std::size_t n = M.size();
  // w = 1 + u with u >= 0; each monomial m of dv gives w(m) - w(v) = 0.
  std::vector<Vector> rows;
  Vector rhs;
  for (std::uint32_t v = 0; v < n; ++v)
    for (const auto& [m, c] : M.d_of(v).terms()) {
      Vector row(n);
      long total_exponent = 0;
      for (const auto& [g, e] : m.factors()) {
        row[g] += static_cast<long>(e);
        total_exponent += static_cast<long>(e);
      }
      row[v] -= 1;
      rows.push_back(std::move(row));
      rhs.push_back(Rational(1 - total_exponent));
    }
  Matrix A(rows.size(), n);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) A(i, j) = rows[i][j];
  LPResult lp = solve_lp(A, rhs, Vector(n, Rational(1)));
  if (lp.status != LPStatus::Optimal) return std::nullopt;

  Integer lcm = 1;
  for (auto& u : lp.x) {
    u += 1;
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), u.get_den_mpz_t());
  }
  Integer gcd = 0;
  std::vector<Integer> ints;
  for (const auto& u : lp.x) {
    Rational scaled = u * lcm;
    ints.push_back(scaled.get_num());
    mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), ints.back().get_mpz_t());
  }
  WeightGrading g;
  for (auto& i : ints) {
    Integer q = i / gcd;
    g.weights.push_back(q.get_si());
  }
  if (!is_valid_grading(M, g)) fail("InternalError", "weight LP returned an invalid grading");
  return g;
}

std::vector<long> grading_exponents(const FreeCDGA& M, const WeightGrading& grading) {
  if (!is_valid_grading(M, grading)) fail("InvalidGrading", "differentials are not weight-homogeneous");
  return grading.weights;
}

Morphism apply_grading_automorphism(const FreeCDGA& M, const WeightGrading& grading, const Rational& scale) {
  if (grading.weights.size() != M.size()) fail("InvalidGrading", "one weight per generator is required");
  std::vector<Element> images;
  for (std::uint32_t v = 0; v < M.size(); ++v) {
    Rational factor = 1;
    for (long k = 0; k < grading.weights[v]; ++k) factor *= scale;
    images.push_back(M.gen(v) * factor);
  }
  Morphism f = Morphism::make(M, M, images);
  if (!f.is_chain_map() || !is_valid_grading(M, grading))
    fail("InvalidGrading", "v ↦ scale^weight v does not commute with d");
  return f;
}

bool is_valid_splitting(const FreeCDGA& M, const std::vector<bool>& in_w1) {
  if (in_w1.size() != M.size()) return false;
  for (std::uint32_t v = 0; v < M.size(); ++v) {
    if (!in_w1[v]) {
      if (!M.d_of(v).is_zero()) return false;
      continue;
    }
    for (const auto& [m, c] : M.d_of(v).terms())
      for (const auto& [g, e] : m.factors())
        if (in_w1[g]) return false;
  }
  return true;
}

std::vector<long> rho_exponents(const FreeCDGA& M, const std::vector<bool>& in_w1) {
  if (!is_valid_splitting(M, in_w1)) fail("InvalidGrading", "not a W0 ⊕ W1 splitting");
  std::vector<long> out;
  for (std::uint32_t v = 0; v < M.size(); ++v) out.push_back(M.degree(v) + (in_w1[v] ? 1 : 0));
  return out;
}

WeightFiltration weight_filtration(const FreeCDGA& M, int up_to_degree) {
  WeightFiltration W;
  W.level_of.assign(M.size(), 0);
  std::vector<bool> in_prev(M.size(), false);
  std::size_t considered = 0;
  for (std::uint32_t v = 0; v < M.size(); ++v)
    if (M.degree(v) <= up_to_degree) ++considered;
  for (int j = 1;; ++j) {
    std::vector<std::uint32_t> level;
    for (std::uint32_t v = 0; v < M.size(); ++v) {
      if (M.degree(v) > up_to_degree) continue;
      bool inside = true;
      for (const auto& [m, c] : M.d_of(v).terms())
        for (const auto& [g, e] : m.factors())
          if (!in_prev[g]) inside = false;
      if (inside) level.push_back(v);
    }
    if (!W.levels.empty() && level.size() == W.levels.back().size()) break;
    for (auto v : level) {
      if (W.level_of[v] == 0) W.level_of[v] = j;
      in_prev[v] = true;
    }
    W.levels.push_back(std::move(level));
    W.depth = j;
    if (W.levels.back().size() == considered) break;
  }
  return W;
}

bool is_valid_filtration(const FreeCDGA& M, const WeightFiltration& W) {
  std::vector<bool> prev(M.size(), false);
  for (const auto& level : W.levels) {
    std::vector<bool> cur(M.size(), false);
    for (auto v : level) cur[v] = true;
    for (std::uint32_t v = 0; v < M.size(); ++v)
      if (prev[v] && !cur[v]) return false;
    for (auto v : level)
      for (const auto& [m, c] : M.d_of(v).terms())
        for (const auto& [g, e] : m.factors())
          if (!prev[g]) return false;
    prev = std::move(cur);
  }
  return true;
}

HurewiczImage hurewicz_image(const FreeCDGA& M, int n) {
  HurewiczImage out;
  for (std::uint32_t v = 0; v < M.size(); ++v)
    if (M.degree(v) == n) out.generators.push_back(v);
  const auto& basis = M.graded_basis(n);
  std::vector<Vector> projections;
  for (const auto& z : nullspace(M.differential_matrix(n))) {
    Vector p(out.generators.size());
    for (std::size_t k = 0; k < out.generators.size(); ++k) {
      auto it = std::lower_bound(basis.begin(), basis.end(), Monomial::generator(out.generators[k]));
      p[k] = z[static_cast<std::size_t>(it - basis.begin())];
    }
    if (!is_zero(p)) projections.push_back(std::move(p));
  }
  if (projections.empty()) return out;
  RowEchelon e = rref(Matrix::from_columns(projections, out.generators.size()).transpose());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    Vector row(out.generators.size());
    for (std::size_t c = 0; c < row.size(); ++c) row[c] = e.reduced(r, c);
    out.basis.push_back(std::move(row));
  }
  return out;
}

Rational predict_distortion_exponent(const FreeCDGA& M, int n, const Vector& alpha_dual) {
  HurewiczImage image = hurewicz_image(M, n);
  if (alpha_dual.size() != image.generators.size())
    fail("DegreeMismatch", "functional must have one entry per degree-" + std::to_string(n) + " generator");
  for (const auto& b : image.basis) {
    Rational pairing = 0;
    for (std::size_t k = 0; k < b.size(); ++k) pairing += b[k] * alpha_dual[k];
    if (sgn(pairing) != 0) return make_rational(1, n);
  }
  return make_rational(1, n + 1);
}

}  // namespace dgakit
