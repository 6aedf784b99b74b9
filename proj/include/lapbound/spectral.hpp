#pragma once

#include <span>
#include <utility>
#include <vector>

#include "lapbound/graph.hpp"
#include "lapbound/polynomial.hpp"

namespace lapbound {

/// Row-major dense square-or-rectangular matrix.
template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, T(0)) {}
  explicit DenseMatrix(int n) : DenseMatrix(n, n) {}

  static DenseMatrix identity(int n) {
    DenseMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  T& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const T& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  template <class U>
  DenseMatrix<U> cast() const {
    DenseMatrix<U> out(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out(i, j) = U((*this)(i, j));
    return out;
  }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = DenseMatrix<long>;
using RatMatrix = DenseMatrix<Rational>;
using RealMatrix = DenseMatrix<double>;

/// L = D - A. Symmetric, zero row sums, off-diagonal entries in {0, -1}.
class LaplacianMatrix {
 public:
  int order() const noexcept { return m_.rows(); }
  const IntMatrix& matrix() const noexcept { return m_; }
  long operator()(int i, int j) const { return m_(i, j); }

  friend LaplacianMatrix laplacian(const Graph& g);

 private:
  explicit LaplacianMatrix(IntMatrix m) : m_(std::move(m)) {}
  IntMatrix m_;
};

LaplacianMatrix laplacian(const Graph& g);

/// Characteristic polynomials are accepted up to this order.
inline constexpr int kMaxCharPolyOrder = kMaxVertices;

/// det(xI - M) by the Faddeev-LeVerrier trace recursion in big integers.
/// Throws Error(Capacity) above kMaxCharPolyOrder.
CharPoly char_poly(const IntMatrix& m);
inline CharPoly char_poly(const LaplacianMatrix& l) { return char_poly(l.matrix()); }

/// Same recursion over the rationals; the result is monic.
RatPoly char_poly(const RatMatrix& m);

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
Integer bareiss_determinant(DenseMatrix<Integer> m);

/// det(tI - M) = p(t).
Integer det_shift(const IntMatrix& m, const Integer& t);
inline Integer det_shift(const LaplacianMatrix& l, const Integer& t) { return det_shift(l.matrix(), t); }

/// Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations, sorted
/// non-increasing. Sweeps stop once the off-diagonal Frobenius norm drops
/// below 1e-12, or after 100 sweeps.
std::vector<double> jacobi_eigenvalues(RealMatrix a);

struct Spectrum {
  // Non-increasing floating approximations.
  std::vector<double> values;
  // (integer eigenvalue, exact multiplicity), ascending.
  std::vector<std::pair<long, int>> exact_roots;
};

/// Integer roots of p in [lo, hi] with exact multiplicities.
std::vector<std::pair<long, int>> integer_roots(const CharPoly& p, long lo, long hi);

/// Jacobi values plus the integer eigenvalues certified on the characteristic
/// polynomial (all Laplacian eigenvalues lie in [0, n]).
Spectrum eigenvalues_float(const LaplacianMatrix& l);

/// Number of eigenvalues > t (strict) or >= t, decided on the characteristic
/// polynomial with Sturm chains.
int count_eigs(const LaplacianMatrix& l, const Rational& t, bool strict);

/// mu_m == t exactly, i.e. count(> t) < m <= count(>= t).
bool mu_equals(const LaplacianMatrix& l, int m, const Integer& t);

/// Laplacian with its characteristic polynomial and root counter computed
/// once, for repeated exact queries on the same graph.
class ExactSpectrum {
 public:
  explicit ExactSpectrum(const LaplacianMatrix& l);

  const CharPoly& char_poly() const noexcept { return poly_; }
  int order() const noexcept { return poly_.degree(); }
  int count_above(const Rational& t) const { return counter_.count_above(t); }
  int count_at_least(const Rational& t) const { return counter_.count_at_least(t); }
  int multiplicity(const Rational& t) const { return counter_.multiplicity(t); }
  bool mu_equals(int m, const Rational& t) const;
  /// -1 if mu_m < t, 0 if equal, +1 if greater.
  int compare_mu(int m, const Rational& t) const;

 private:
  CharPoly poly_;
  RootCounter counter_;
};

struct PrincipalSubmatrix {
  std::vector<int> vertices;  // row i of the block is vertex vertices[i]
  IntMatrix block;            // L_S
  IntMatrix induced;          // L(S), Laplacian of the induced subgraph
  std::vector<long> outside_degree;  // |Gamma(s) \ S|; L_S = L(S) + diag(outside_degree)
};

PrincipalSubmatrix principal_submatrix(const LaplacianMatrix& l, VertexSet subset);

struct QuotientMatrix {
  RatMatrix entries;
  std::vector<int> block_sizes;

  int blocks() const noexcept { return entries.rows(); }
  /// D^{1/2} Q D^{-1/2} with D = diag(block sizes). Symmetric when the host
  /// matrix is, with the same eigenvalues as Q.
  RealMatrix symmetrized() const;
};

/// Entry (i, j) is the average over rows in block i of the row sums over the
/// columns of block j. Throws Error(InvalidPartition) unless the blocks are
/// nonempty, disjoint and cover every index.
QuotientMatrix quotient_matrix(const IntMatrix& m, const std::vector<std::vector<int>>& partition);
inline QuotientMatrix quotient_matrix(const LaplacianMatrix& l, const std::vector<std::vector<int>>& partition) {
  return quotient_matrix(l.matrix(), partition);
}

}  // namespace lapbound
