#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "homcurv/lie_algebra.hpp"

namespace homcurv {

/// Provenance strings carried with catalog entries. Kernel and normalizer
/// columns are recorded as text only; they are not computed.
struct CatalogMetadata {
  std::string family;  // "rank-one", "exceptional" or "non-example"
  std::string manifold;
  std::string kernel;
  std::string normalizer;
  bool positively_curved = false;
};

/// K/H at the Lie algebra level: k = h (+) p with p the Q-orthogonal complement.
class HomogeneousSpace {
 public:
  /// p is computed as the complement of h. Throws VerificationError if h is
  /// not a subalgebra or p is not Ad_H-invariant.
  HomogeneousSpace(LieAlgebra ambient, const Mat& h_basis, std::string label,
                   std::vector<int> params = {}, CatalogMetadata metadata = {},
                   std::optional<Vec> reference_torus = std::nullopt);

  /// Restores a stored space with an explicit p basis (verified, not recomputed).
  HomogeneousSpace(LieAlgebra ambient, Mat h_basis, Mat p_basis, std::string label,
                   std::vector<int> params, CatalogMetadata metadata,
                   std::optional<Vec> reference_torus);

  const LieAlgebra& ambient() const { return ambient_; }
  /// Orthonormal columns in ambient coordinates.
  const Mat& h_basis() const { return h_basis_; }
  const Mat& p_basis() const { return p_basis_; }
  int dim_h() const { return static_cast<int>(h_basis_.cols()); }
  int dim_p() const { return static_cast<int>(p_basis_.cols()); }

  const std::string& label() const { return label_; }
  const std::vector<int>& params() const { return params_; }
  const CatalogMetadata& metadata() const { return metadata_; }
  /// Integer-weight circle generator inside h (ambient coordinates), if documented.
  const std::optional<Vec>& reference_torus() const { return reference_torus_; }

  Vec to_ambient(const Vec& p_coords) const { return p_basis_ * p_coords; }
  Vec p_part(const Vec& ambient) const { return p_basis_.transpose() * ambient; }
  Vec h_part(const Vec& ambient) const { return h_basis_.transpose() * ambient; }

  /// Largest h-component of [v, w] over h-basis v and p-basis w.
  double invariance_residual() const;
  /// Largest p-component of [v, w] over pairs of h-basis vectors.
  double subalgebra_residual() const;

 private:
  void verify() const;

  LieAlgebra ambient_;
  Mat h_basis_;
  Mat p_basis_;
  std::string label_;
  std::vector<int> params_;
  CatalogMetadata metadata_;
  std::optional<Vec> reference_torus_;
};

/// ad_v restricted to p for each h-basis vector v (dim p x dim p, skew).
std::vector<Mat> isotropy_actions(const HomogeneousSpace& space);

/// Ad_g restricted to p in the p basis; throws if Ad_g does not preserve p.
Mat restricted_adjoint(const HomogeneousSpace& space, const GroupElement& g);

struct FixedSubalgebra {
  Mat basis;                   // orthonormal columns, ambient coordinates: h ∩ ker(Ad_g - Id)
  int centralizer_dim = 0;     // dim C(g)
  int fixed_component_dim = 0; // dim C(g) - dim h^g
};

/// Throws InvalidArgument if Ad_g does not normalize h.
FixedSubalgebra fixed_subalgebra_in_h(const HomogeneousSpace& space, const GroupElement& g);

// -- catalog -----------------------------------------------------------------

struct CatalogEntry {
  std::string label;
  std::string quotient;                 // e.g. "SU(3)/S^1_{p,q}"
  std::vector<std::string> param_names; // "n" or {"p", "q"}
  std::vector<int> default_params;
  CatalogMetadata metadata;
};

const std::vector<CatalogEntry>& catalog_entries();
const CatalogEntry& catalog_entry(std::string_view label);

/// Builds a catalog space. Missing params take the entry defaults; invalid
/// params throw InvalidArgument naming the violated constraint.
HomogeneousSpace catalog_build(std::string_view label, std::vector<int> params = {});

/// Custom quotient k/h for arbitrary subalgebra spanned by matrices in the realization.
HomogeneousSpace space_from_matrices(const LieAlgebra& ambient, const std::vector<CMat>& h_matrices,
                                     std::string label);

}  // namespace homcurv
