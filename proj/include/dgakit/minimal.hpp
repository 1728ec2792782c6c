#pragma once

#include "dgakit/graded.hpp"
#include "dgakit/morphism.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dgakit {

// New generators of a single degree with closed differentials in the base.
struct HirschExtension {
  std::vector<Generator> generators;
  std::vector<Element> differentials;
};

// Throws NotClosed when an image is not a cocycle of the base, DegreeMismatch
// when the new generators do not share one degree.
FreeCDGA hirsch_extend(const FreeCDGA& base, const HirschExtension& ext);

struct MinimalModel {
  FreeCDGA model;
  Morphism map;  // model -> input, a quasi-isomorphism through the requested degree
};

// Inductive construction: in each degree n, closed generators complete the
// image of H^n, then generators of degree n kill the kernel of H^{n+1}.
// Representatives are chosen greedily from RREF bases, so the result is
// deterministic. New generators are named v<degree>_<k>.
MinimalModel minimal_model_of(const FreeCDGA& A, int up_to_degree);

// Isomorphism that sends each generator to a nonzero multiple of a generator
// of the other algebra (a renaming plus rescaling), when one exists. Closed
// generators are matched with scale 1.
std::optional<Morphism> isomorphic_by_renaming(const FreeCDGA& A, const FreeCDGA& B);

// Catalog: S<n> for n >= 2, S3vS3, NF, NF_alt, Scaled_source, Scaled_target.
FreeCDGA canned_model(const std::string& name);
std::vector<std::string> canned_model_names();

// weights[i] = i means v ↦ t^i v extends to an automorphism.
struct WeightGrading {
  std::vector<long> weights;
  bool operator==(const WeightGrading&) const = default;
};

bool is_valid_grading(const FreeCDGA& M, const WeightGrading& grading);

// Smallest positive integer weights (in total) making every differential
// weight-homogeneous, by exact LP; nothing when no positive grading exists on
// the given generator basis.
std::optional<WeightGrading> detect_positive_weights(const FreeCDGA& M);

// v ↦ scale^{weight(v)} v; throws InvalidGrading when it fails to commute with d.
Morphism apply_grading_automorphism(const FreeCDGA& M, const WeightGrading& grading, const Rational& scale);

// Symbolic scale L: the exponent of L attached to each generator. Throws
// InvalidGrading when the grading is not weight-homogeneous.
std::vector<long> grading_exponents(const FreeCDGA& M, const WeightGrading& grading);

// Splitting V = W0 ⊕ W1 on generators with d(W0) = 0 and d(W1) ⊆ ⋀W0.
// rho_exponents gives the exponents of ρ_L: deg v on W0, deg v + 1 on W1.
bool is_valid_splitting(const FreeCDGA& M, const std::vector<bool>& in_w1);
std::vector<long> rho_exponents(const FreeCDGA& M, const std::vector<bool>& in_w1);

struct WeightFiltration {
  std::vector<std::vector<std::uint32_t>> levels;  // levels[j-1] = generators of W_j
  std::vector<int> level_of;                       // first j with v ∈ W_j, 0 if never
  int depth = 0;
};

WeightFiltration weight_filtration(const FreeCDGA& M, int up_to_degree);
bool is_valid_filtration(const FreeCDGA& M, const WeightFiltration& W);

// Degree-n generators (indices) and a basis of the Hurewicz image: projections
// to V_n of closed degree-n elements, in coordinates over those generators.
struct HurewiczImage {
  std::vector<std::uint32_t> generators;
  std::vector<Vector> basis;
};
HurewiczImage hurewicz_image(const FreeCDGA& M, int n);

// 1/n when the functional is nonzero on the Hurewicz image, 1/(n+1) otherwise.
Rational predict_distortion_exponent(const FreeCDGA& M, int n, const Vector& alpha_dual);

}  // namespace dgakit
