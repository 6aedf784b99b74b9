#include "lapbound/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace lapbound {

namespace {

constexpr double kJacobiTolerance = 1e-12;
constexpr int kJacobiMaxSweeps = 100;

template <class T>
DenseMatrix<T> multiply(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
  DenseMatrix<T> c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (int j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

template <class T>
std::vector<T> faddeev_leverrier(const DenseMatrix<T>& a, const std::function<T(const T&, long)>& divide) {
  const int n = a.rows();
  // c[k] is the coefficient of x^k; M_k = A M_{k-1} + c_{n-k+1} I.
  std::vector<T> c(static_cast<std::size_t>(n) + 1, T(0));
  c[static_cast<std::size_t>(n)] = 1;
  DenseMatrix<T> am(n);
  for (int k = 1; k <= n; ++k) {
    DenseMatrix<T> mk = am;
    for (int i = 0; i < n; ++i) mk(i, i) += c[static_cast<std::size_t>(n - k + 1)];
    am = multiply(a, mk);
    T trace = 0;
    for (int i = 0; i < n; ++i) trace += am(i, i);
    c[static_cast<std::size_t>(n - k)] = -divide(trace, k);
  }
  return c;
}

void check_square(int rows, int cols) {
  if (rows != cols) throw Error(ErrorKind::InvalidParameter, "matrix must be square");
  if (rows > kMaxCharPolyOrder)
    throw Error(ErrorKind::Capacity,
                "characteristic polynomial limited to order " + std::to_string(kMaxCharPolyOrder));
}

}  // namespace

LaplacianMatrix laplacian(const Graph& g) {
  const int n = g.order();
  IntMatrix m(n);
  for (int v = 0; v < n; ++v) {
    m(v, v) = g.degree(v);
    for (int w : members(g.neighbors(v))) m(v, w) = -1;
  }
  return LaplacianMatrix(std::move(m));
}

CharPoly char_poly(const IntMatrix& m) {
  check_square(m.rows(), m.cols());
  auto c = faddeev_leverrier<Integer>(m.cast<Integer>(), [](const Integer& x, long k) {
    Integer q;
    mpz_divexact_ui(q.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(k));
    return q;
  });
  return CharPoly(std::move(c));
}

RatPoly char_poly(const RatMatrix& m) {
  check_square(m.rows(), m.cols());
  auto c = faddeev_leverrier<Rational>(m, [](const Rational& x, long k) { return Rational(x / k); });
  return RatPoly(std::move(c));
}

Integer bareiss_determinant(DenseMatrix<Integer> m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::InvalidParameter, "matrix must be square");
  const int n = m.rows();
  if (n == 0) return 1;
  int sign = 1;
  Integer previous = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      int pivot = k + 1;
      while (pivot < n && m(pivot, k) == 0) ++pivot;
      if (pivot == n) return 0;
      for (int j = k; j < n; ++j) std::swap(m(k, j), m(pivot, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
      }
      m(i, k) = 0;
    }
    previous = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

Integer det_shift(const IntMatrix& m, const Integer& t) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::InvalidParameter, "matrix must be square");
  DenseMatrix<Integer> shifted(m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) shifted(i, j) = (i == j ? t : Integer(0)) - Integer(m(i, j));
  return bareiss_determinant(std::move(shifted));
}

std::vector<double> jacobi_eigenvalues(RealMatrix a) {
  const int n = a.rows();
  auto off_norm = [&] {
    double s = 0;
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q)
        if (p != q) s += a(p, q) * a(p, q);
    return std::sqrt(s);
  };
  for (int sweep = 0; sweep < kJacobiMaxSweeps && off_norm() >= kJacobiTolerance; ++sweep) {
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
      }
  }
  std::vector<double> values(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) values[static_cast<std::size_t>(i)] = a(i, i);
  std::sort(values.begin(), values.end(), std::greater<>());
  return values;
}

std::vector<std::pair<long, int>> integer_roots(const CharPoly& p, long lo, long hi) {
  std::vector<std::pair<long, int>> roots;
  for (long t = lo; t <= hi; ++t) {
    const Integer z(t);
    if (p.evaluate(z) != 0) continue;
    roots.emplace_back(t, root_multiplicity(p, z));
  }
  return roots;
}

Spectrum eigenvalues_float(const LaplacianMatrix& l) {
  Spectrum s;
  s.values = jacobi_eigenvalues(l.matrix().cast<double>());
  if (l.order() > 0) s.exact_roots = integer_roots(char_poly(l), 0, l.order());
  return s;
}

int count_eigs(const LaplacianMatrix& l, const Rational& t, bool strict) {
  if (l.order() == 0) return 0;
  RootCounter counter(char_poly(l));
  return strict ? counter.count_above(t) : counter.count_at_least(t);
}

bool mu_equals(const LaplacianMatrix& l, int m, const Integer& t) {
  if (m < 1 || m > l.order())
    throw Error(ErrorKind::OutOfRange, "eigenvalue index " + std::to_string(m) + " out of range");
  return ExactSpectrum(l).mu_equals(m, Rational(t));
}

ExactSpectrum::ExactSpectrum(const LaplacianMatrix& l)
    : poly_(l.order() > 0 ? lapbound::char_poly(l)
                          : throw Error(ErrorKind::Precondition, "empty matrix has no spectrum")),
      counter_(poly_) {}

int ExactSpectrum::compare_mu(int m, const Rational& t) const {
  if (m < 1 || m > order())
    throw Error(ErrorKind::OutOfRange, "eigenvalue index " + std::to_string(m) + " out of range");
  if (counter_.count_above(t) >= m) return 1;
  if (counter_.count_at_least(t) >= m) return 0;
  return -1;
}

bool ExactSpectrum::mu_equals(int m, const Rational& t) const { return compare_mu(m, t) == 0; }

PrincipalSubmatrix principal_submatrix(const LaplacianMatrix& l, VertexSet subset) {
  subset &= first_vertices(l.order());
  PrincipalSubmatrix out;
  out.vertices = members(subset);
  const int k = static_cast<int>(out.vertices.size());
  out.block = IntMatrix(k);
  out.induced = IntMatrix(k);
  out.outside_degree.assign(static_cast<std::size_t>(k), 0);
  for (int i = 0; i < k; ++i) {
    long inside = 0;
    for (int j = 0; j < k; ++j) {
      const long entry = l(out.vertices[i], out.vertices[j]);
      out.block(i, j) = entry;
      if (i != j) {
        out.induced(i, j) = entry;
        inside -= entry;
      }
    }
    out.induced(i, i) = inside;
    out.outside_degree[static_cast<std::size_t>(i)] = out.block(i, i) - inside;
  }
  return out;
}

QuotientMatrix quotient_matrix(const IntMatrix& m, const std::vector<std::vector<int>>& partition) {
  const int n = m.rows();
  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  for (std::size_t b = 0; b < partition.size(); ++b) {
    if (partition[b].empty()) throw Error(ErrorKind::InvalidPartition, "empty block");
    for (int v : partition[b]) {
      if (v < 0 || v >= n) throw Error(ErrorKind::InvalidPartition, "block index out of range");
      if (owner[static_cast<std::size_t>(v)] != -1)
        throw Error(ErrorKind::InvalidPartition, "blocks overlap at " + std::to_string(v));
      owner[static_cast<std::size_t>(v)] = static_cast<int>(b);
    }
  }
  if (std::find(owner.begin(), owner.end(), -1) != owner.end())
    throw Error(ErrorKind::InvalidPartition, "blocks do not cover every index");

  const int k = static_cast<int>(partition.size());
  QuotientMatrix q{RatMatrix(k), {}};
  for (const auto& block : partition) q.block_sizes.push_back(static_cast<int>(block.size()));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      long total = 0;
      for (int u : partition[static_cast<std::size_t>(i)])
        for (int v : partition[static_cast<std::size_t>(j)]) total += m(u, v);
      q.entries(i, j) = Rational(Integer(total), Integer(q.block_sizes[static_cast<std::size_t>(i)]));
      q.entries(i, j).canonicalize();
    }
  return q;
}

RealMatrix QuotientMatrix::symmetrized() const {
  const int k = blocks();
  RealMatrix s(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      // B_ij = q_ij b_i is symmetric for a quotient of a symmetric matrix.
      const double bi = block_sizes[static_cast<std::size_t>(i)];
      const double bj = block_sizes[static_cast<std::size_t>(j)];
      const Rational block_sum = entries(i, j) * block_sizes[static_cast<std::size_t>(i)];
      s(i, j) = block_sum.get_d() / std::sqrt(bi * bj);
    }
  return s;
}

}  // namespace lapbound
