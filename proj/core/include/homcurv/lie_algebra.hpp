#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "homcurv/linalg.hpp"

namespace homcurv {

enum class FieldTag { RealOrthogonal, Unitary, SymplecticUnitary, Product };

std::string_view to_string(FieldTag tag);
FieldTag field_tag_from_string(std::string_view name);

/// Classical compact families realized as anti-Hermitian complex matrices.
enum class Family { so, su, sp, u };

Family family_from_string(std::string_view name);

/// Basis matrices of a compact matrix Lie algebra, Q-orthonormal for
/// Q(x, y) = -Re tr(xy).
struct MatrixRealization {
  int matrix_size = 0;
  std::vector<CMat> basis;
  FieldTag field_tag = FieldTag::Unitary;
};

/// Half-open index range [begin, end) of one summand of a direct sum.
struct FactorRange {
  int begin = 0;
  int end = 0;
  bool operator==(const FactorRange&) const = default;
};

/// Coordinates in the orthonormal basis of the ambient algebra.
struct AlgebraElement {
  Vec coords;
};

/// -Re tr(xy): the biinvariant inner product on every realization.
double q_inner(const CMat& x, const CMat& y);

/// Standard symplectic form [[0, I_n], [-I_n, 0]].
CMat symplectic_form(int n);

/// Complex 2n x 2n image of the quaternionic matrix a + b j.
CMat quaternionic(const CMat& a, const CMat& b);

/// A compact Lie algebra with orthonormal basis and totally antisymmetric
/// structure constants C(i, j, k) = Q([e_i, e_j], e_k).
///
/// Constants below 1e-13 are stored as exact zeros and the tensor is
/// antisymmetrized exactly, so serialization round-trips bit-for-bit.
class LieAlgebra {
 public:
  LieAlgebra(std::string name, MatrixRealization realization, std::vector<FactorRange> factors);

  /// Restores an algebra from stored data; constants are taken verbatim.
  LieAlgebra(std::string name, MatrixRealization realization, std::vector<FactorRange> factors,
             std::vector<double> structure_constants);

  const std::string& name() const { return name_; }
  int dim() const { return dim_; }
  const MatrixRealization& realization() const { return realization_; }
  const std::vector<FactorRange>& factors() const { return factors_; }
  const std::vector<double>& structure_constants() const { return constants_; }

  double structure_constant(int i, int j, int k) const {
    return constants_[(static_cast<std::size_t>(i) * dim_ + j) * dim_ + k];
  }

  /// ad(e_i) as a d x d matrix: column j holds the coordinates of [e_i, e_j].
  const Mat& ad_basis(int i) const { return ad_basis_[i]; }

  Vec bracket(const Vec& x, const Vec& y) const;
  Mat ad(const Vec& x) const;

  CMat to_matrix(const Vec& coords) const;
  /// Q-projection of a matrix onto the basis.
  Vec coordinates(const CMat& m) const;
  /// Frobenius distance of m from the real span of the basis.
  double span_residual(const CMat& m) const;

 private:
  void build_ad_cache();

  std::string name_;
  int dim_ = 0;
  MatrixRealization realization_;
  std::vector<FactorRange> factors_;
  std::vector<double> constants_;
  std::vector<Mat> ad_basis_;
};

/// so(n), su(n), sp(n) or u(n) with the documented seed order:
///   so: E_ij - E_ji for i < j, lexicographic;
///   su: Cartan i(E_kk - E_k+1,k+1) (Gram-Schmidt), then per i < j the pair
///       E_ij - E_ji, i(E_ij + E_ji);
///   u:  i E_kk, then the same off-diagonal pairs;
///   sp: Cartan i(E_kk - E_n+k,n+k), the u(n) off-diagonal pairs in the A block,
///       then per i <= j the symmetric B = S_ij and B = i S_ij.
LieAlgebra build_algebra(Family family, int n);
LieAlgebra build_algebra(std::string_view family, int n);

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

AlgebraElement bracket(const LieAlgebra& alg, const AlgebraElement& x, const AlgebraElement& y);
Mat ad_operator(const LieAlgebra& alg, const AlgebraElement& x);

/// Minimal kernel dimension of ad_x over 8 random x (fixed internal seed).
int rank(const LieAlgebra& alg);
/// Rank of the subalgebra spanned by the orthonormal columns of `basis`.
int subalgebra_rank(const LieAlgebra& alg, const Mat& basis);

/// Element of the group realized by `alg`, together with Ad_g in the
/// orthonormal basis.
class GroupElement {
 public:
  /// Throws InvalidArgument unless g is unitary and conjugation preserves the algebra.
  static GroupElement from_matrix(const LieAlgebra& alg, const CMat& g);
  static GroupElement exp(const LieAlgebra& alg, const AlgebraElement& x);
  static GroupElement identity(const LieAlgebra& alg);

  const CMat& matrix() const { return matrix_; }
  const Mat& ad_operator() const { return ad_; }

  /// Max deviation of Ad_g from orthogonality and from preserving brackets.
  double orthogonality_residual() const;
  double homomorphism_residual(const LieAlgebra& alg) const;

 private:
  GroupElement(CMat m, Mat ad) : matrix_(std::move(m)), ad_(std::move(ad)) {}
  CMat matrix_;
  Mat ad_;
};

/// Q-orthonormal basis (columns) of ker(Ad_g - Id), the Lie algebra of C(g).
Mat centralizer_subalgebra(const LieAlgebra& alg, const GroupElement& g);

/// Jacobi residual max over the given index triples (and all l).
double jacobi_residual(const LieAlgebra& alg, int i, int j, int k);

}  // namespace homcurv
