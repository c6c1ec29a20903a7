#pragma once

// Group-algebra operators on vertex functions and the two spectrum routes:
// a dense Jacobi eigensolve of an adjacency matrix, and the restriction of the
// symmetric surrogate W = (I+S) B (I+S) / 2 to each isotypic component of the
// regular representation.
//
// Why W: with P = (I+S)/2 (a projector, S^2 = I) the operator Y = B(I+S) equals
// U V for U = 2BP, V = P, while 2PBP = V U. UV and VU share their nonzero
// spectrum and have the same size, so spec(Y) = spec(W) as multisets.

#include "polyspec/groups.hpp"
#include "polyspec/jacobi.hpp"
#include "polyspec/polytopes.hpp"

#include <Eigen/Sparse>

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace polyspec {

/// Exact integer operator; rows and columns index vertex functions.
using ExactOperator = Eigen::SparseMatrix<long long>;

ExactOperator identity_operator(int n);
/// Entry 1 at (g, g h): R_h R_k = R_{hk}.
ExactOperator right_translation(const FiniteGroup& g, int h);
ExactOperator sum_right_translations(const FiniteGroup& g, std::span<const int> hs);
ExactOperator adjacency_operator(const Graph& g);

/// Rows index the dart-side vertices (row r is dart row_to_dart[r] of `base`),
/// columns index edges of `base`. One 1 per row: the dart's own edge.
/// An empty row_to_dart means row r is dart r.
ExactOperator lift_A1(const Graph& base, std::span<const int> row_to_dart = {});
/// Rows index edges, columns the dart-side vertices; two 1s per row, at the
/// two darts of the edge.
ExactOperator average_A2(const Graph& base, std::span<const int> row_to_dart = {});

struct MatrixMismatch {
  Eigen::Index row = 0, col = 0;
  long long lhs = 0, rhs = 0;
};

/// First differing entry, or nullopt when a == b exactly.
/// Throws PreconditionError on a shape mismatch.
std::optional<MatrixMismatch> exact_mismatch(const ExactOperator& a, const ExactOperator& b);

/// Checks X = A2 B A1 as integer matrices; returns the first bad entry.
std::optional<MatrixMismatch> verify_factorization(const ExactOperator& x, const ExactOperator& a2,
                                                   const ExactOperator& b, const ExactOperator& a1);

// ---------------------------------------------------------------------------

/// Sorted eigenvalues with multiplicities. Values closer than the coalescing
/// tolerance (chained) form one entry whose value is their mean.
class SpectrumMultiset {
 public:
  struct Entry {
    double value;
    int multiplicity;
  };

  SpectrumMultiset() = default;
  static SpectrumMultiset from_values(std::vector<double> values, double coalesce_tol = 1e-8);

  const std::vector<Entry>& entries() const { return entries_; }
  /// Every eigenvalue, ascending, before coalescing.
  const std::vector<double>& values() const { return values_; }
  int dimension() const { return static_cast<int>(values_.size()); }
  double coalesce_tolerance() const { return tol_; }
  /// Multiplicity of the entry within tol of v (0 if none).
  int multiplicity_of(double v, double tol = 1e-8) const;
  double trace() const;
  double trace_of_squares() const;
  /// This multiset with `count` extra zeros.
  SpectrumMultiset with_zeros(int count) const;

 private:
  std::vector<double> values_;
  std::vector<Entry> entries_;
  double tol_ = 1e-8;
};

struct SpectrumComparison {
  bool equal = false;
  double max_deviation = 0;
  std::string report;
};

/// True iff `larger` = `smaller` + {0 x zero_padding}, matching sorted
/// eigenvalues one by one within tol.
SpectrumComparison compare_spectra(const SpectrumMultiset& smaller, const SpectrumMultiset& larger,
                                   int zero_padding, double tol);

struct EigenOptions {
  JacobiOptions jacobi;
  double coalesce_tol = 1e-8;
};

/// Symmetric eigenproblem by cyclic Jacobi.
SpectrumMultiset symmetric_eigen(const Eigen::MatrixXd& m, const EigenOptions& opts = {});

Eigen::MatrixXd dense_adjacency(const Graph& g);

/// Spectrum of the adjacency matrix of g.
SpectrumMultiset spectrum_direct(const Graph& g, const EigenOptions& opts = {});

/// T = (I+S) B (I+S) for B = sum of R_h over `nonspecial`, S = R_special.
/// W = T / 2 is the symmetric surrogate of Y = B(I+S).
ExactOperator surrogate_numerator(const FiniteGroup& g, std::span<const int> nonspecial, int special);

struct IrrepBlock {
  int character = 0;  // row of the character table
  int degree = 0;
  int dimension = 0;  // rank of the isotypic projector, degree^2
  std::vector<double> eigenvalues;
  double max_imag = 0;
};

struct BlockSpectrum {
  SpectrumMultiset spectrum;
  std::vector<IrrepBlock> blocks;
  int total_dimension = 0;
  /// max |(e*e - e)(g)| over characters, computed in the group algebra.
  double idempotence_residual = 0;
  /// max |(sum_chi e_chi - delta_id)(g)|.
  double completeness_residual = 0;
};

struct BlockOptions {
  EigenOptions eigen;
  /// Relative norm below which a projected column counts as dependent; also
  /// the tolerance on each projector's idempotence and trace.
  double rank_tol = 1e-6;
  int jobs = 1;
};

/// Restricts W to the image of each central idempotent
/// e_chi = (chi(1)/|G|) sum_g conj(chi(g)) R_g and diagonalizes the blocks.
/// Throws NumericError when a projector's rank is not chi(1)^2.
BlockSpectrum spectrum_via_blocks(const FiniteGroup& g, const ConjugacyData& cd, const CharacterTable& table,
                                  std::span<const int> nonspecial, int special, const BlockOptions& opts = {});

}  // namespace polyspec
