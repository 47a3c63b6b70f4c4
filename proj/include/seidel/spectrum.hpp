#ifndef SEIDEL_SPECTRUM_HPP
#define SEIDEL_SPECTRUM_HPP

#include "errors.hpp"
#include "graph.hpp"
#include "polynomial.hpp"
#include "switching.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

namespace seidel {

inline constexpr double default_convergence_tolerance = 1e-10;
inline constexpr double default_grouping_tolerance = 1e-7;
inline constexpr double default_interlacing_slack = 1e-8;

struct Eigenvalue {
  double value;
  int multiplicity;
};

/// Eigenvalues sorted non-increasing.
class Spectrum {
public:
  Spectrum() = default;
  explicit Spectrum(std::vector<double> values) : values_(std::move(values)) {
    std::sort(values_.begin(), values_.end(), std::greater<>());
  }

  const std::vector<double>& values() const { return values_; }
  int size() const { return static_cast<int>(values_.size()); }
  /// 0-based: operator[](0) is the largest eigenvalue.
  double operator[](int i) const { return values_[static_cast<std::size_t>(i)]; }

  double sum() const {
    double s = 0.0;
    for (double v : values_)
      s += v;
    return s;
  }

  /// Runs of values within `tol` of the run's first value are merged; the run's mean is reported.
  std::vector<Eigenvalue> grouped(double tol = default_grouping_tolerance) const {
    std::vector<Eigenvalue> out;
    std::size_t i = 0;
    while (i < values_.size()) {
      std::size_t j = i;
      double acc = 0.0;
      while (j < values_.size() && values_[i] - values_[j] <= tol)
        acc += values_[j++];
      out.push_back({acc / static_cast<double>(j - i), static_cast<int>(j - i)});
      i = j;
    }
    return out;
  }

private:
  std::vector<double> values_;
};

struct EigenResult {
  Spectrum spectrum;
  int sweeps = 0;
  double max_residual = 0.0; // max over eigenpairs of ||m v - lambda v||
};

/// Cyclic Jacobi rotations on a symmetric matrix. Converges when the off-diagonal Frobenius
/// norm falls below `tol` times the matrix norm.
inline EigenResult jacobi_eigen(const IntMatrix& m, double tol = default_convergence_tolerance, int max_sweeps = 100) {
  if (!m.is_symmetric())
    throw argument_error("Jacobi eigensolver expects a symmetric matrix");
  if (!(tol > 0.0))
    throw argument_error("tolerance must be positive");
  const int n = m.order();
  const auto sz = static_cast<std::size_t>(n);
  std::vector<double> a(sz * sz), v(sz * sz, 0.0);
  auto A = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * sz + static_cast<std::size_t>(j)]; };
  auto V = [&](int i, int j) -> double& { return v[static_cast<std::size_t>(i) * sz + static_cast<std::size_t>(j)]; };
  double norm = 0.0;
  for (int i = 0; i < n; ++i) {
    V(i, i) = 1.0;
    for (int j = 0; j < n; ++j) {
      A(i, j) = static_cast<double>(m(i, j));
      norm += A(i, j) * A(i, j);
    }
  }
  norm = std::sqrt(norm);
  const double target = tol * std::max(1.0, norm);

  auto off_norm = [&] {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        s += 2.0 * A(i, j) * A(i, j);
    return std::sqrt(s);
  };

  int sweep = 0;
  while (off_norm() > target) {
    if (sweep == max_sweeps)
      throw convergence_error("Jacobi eigensolver did not converge", sweep);
    ++sweep;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = A(p, q);
        if (std::abs(apq) < 1e-300)
          continue;
        const double theta = (A(q, q) - A(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = A(k, p), akq = A(k, q);
          A(k, p) = c * akp - s * akq;
          A(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = A(p, k), aqk = A(q, k);
          A(p, k) = c * apk - s * aqk;
          A(q, k) = s * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          const double vkp = V(k, p), vkq = V(k, q);
          V(k, p) = c * vkp - s * vkq;
          V(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  EigenResult out;
  out.sweeps = sweep;
  std::vector<double> eig(sz);
  for (int i = 0; i < n; ++i) {
    eig[static_cast<std::size_t>(i)] = A(i, i);
    double r2 = 0.0;
    for (int row = 0; row < n; ++row) {
      double mv = 0.0;
      for (int k = 0; k < n; ++k)
        mv += static_cast<double>(m(row, k)) * V(k, i);
      const double d = mv - A(i, i) * V(row, i);
      r2 += d * d;
    }
    out.max_residual = std::max(out.max_residual, std::sqrt(r2));
  }
  out.spectrum = Spectrum(std::move(eig));
  return out;
}

inline Spectrum eigenvalues_numeric(const IntMatrix& m, double tol = default_convergence_tolerance) {
  return jacobi_eigen(m, tol).spectrum;
}

inline Spectrum seidel_spectrum(const Graph& g, double tol = default_convergence_tolerance) {
  return eigenvalues_numeric(seidel_matrix(g), tol);
}

/// Exact Seidel characteristic polynomial.
inline IntPolynomial seidel_char_poly(const Graph& g) {
  const auto s = seidel_matrix(g);
  if (fits_int64_char_poly(s))
    return to_big(char_poly_int64(s));
  return char_poly_exact(s);
}

/// Exact Seidel cospectrality: identical characteristic polynomials.
inline bool seidel_cospectral(const Graph& g, const Graph& h) {
  if (g.order() != h.order())
    return false;
  return seidel_char_poly(g) == seidel_char_poly(h);
}

/// Cauchy interlacing of a principal submatrix spectrum inside the full one:
/// sup[i] >= sub[i] >= sup[i + n - m] (0-based), with `slack`.
inline bool interlacing_check(const Spectrum& sub, const Spectrum& sup, double slack = default_interlacing_slack) {
  const int m = sub.size();
  const int n = sup.size();
  if (m > n)
    return false;
  for (int i = 0; i < m; ++i) {
    if (sup[i] + slack < sub[i])
      return false;
    if (sub[i] + slack < sup[i + n - m])
      return false;
  }
  return true;
}

} // namespace seidel

#endif
