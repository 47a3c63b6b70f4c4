#ifndef SEIDEL_POLYNOMIAL_HPP
#define SEIDEL_POLYNOMIAL_HPP

#include "errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace seidel {

using BigInt = boost::multiprecision::cpp_int;

/// Dense square integer matrix, row-major.
class IntMatrix {
public:
  IntMatrix() = default;
  explicit IntMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {
    if (n < 0)
      throw argument_error("negative matrix order");
  }

  int order() const { return n_; }
  std::int64_t& operator()(int i, int j) { return a_[index(i, j)]; }
  std::int64_t operator()(int i, int j) const { return a_[index(i, j)]; }

  bool is_symmetric() const {
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        if ((*this)(i, j) != (*this)(j, i))
          return false;
    return true;
  }

  std::int64_t trace() const {
    std::int64_t t = 0;
    for (int i = 0; i < n_; ++i)
      t += (*this)(i, i);
    return t;
  }

  std::int64_t max_abs() const {
    std::int64_t m = 0;
    for (auto x : a_)
      m = std::max(m, x < 0 ? -x : x);
    return m;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
  }

  int n_ = 0;
  std::vector<std::int64_t> a_;
};

/// Polynomial with coefficients in a commutative ring, constant term first.
/// The zero polynomial has no coefficients.
template <class Int>
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial constant(Int v) { return Polynomial(std::vector<Int>{std::move(v)}); }
  /// x - root
  static Polynomial linear(Int root) { return Polynomial(std::vector<Int>{Int(-root), Int(1)}); }
  static Polynomial x() { return Polynomial(std::vector<Int>{Int(0), Int(1)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Int>& coeffs() const { return c_; }
  Int coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(i)] : Int(0); }
  Int leading() const { return c_.empty() ? Int(0) : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == Int(1); }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Int> r(std::max(a.c_.size(), b.c_.size()), Int(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i)
      r[i] += b.c_[i];
    return Polynomial(std::move(r));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Int> r(std::max(a.c_.size(), b.c_.size()), Int(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i)
      r[i] -= b.c_[i];
    return Polynomial(std::move(r));
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero())
      return {};
    std::vector<Int> r(a.c_.size() + b.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        r[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(r));
  }

  friend Polynomial operator*(const Int& s, const Polynomial& p) { return constant(s) * p; }

  Polynomial pow(int e) const {
    Polynomial result = constant(Int(1));
    for (int i = 0; i < e; ++i)
      result = result * *this;
    return result;
  }

  /// Divides by (x - root). Returns the quotient and remainder p(root).
  std::pair<Polynomial, Int> divide_linear(const Int& root) const {
    if (c_.empty())
      return {{}, Int(0)};
    std::vector<Int> q(c_.size() - 1, Int(0));
    Int carry(0);
    for (std::size_t i = c_.size(); i-- > 0;) {
      Int cur = c_[i] + carry * root;
      if (i == 0)
        return {Polynomial(std::move(q)), cur};
      q[i - 1] = cur;
      carry = cur;
    }
    return {Polynomial(std::move(q)), Int(0)};
  }

  /// Removes the largest power of (x - root); returns that power.
  int strip_root(const Int& root, Polynomial& rest) const {
    rest = *this;
    int m = 0;
    while (rest.degree() >= 1) {
      auto [q, r] = rest.divide_linear(root);
      if (r != Int(0))
        break;
      rest = std::move(q);
      ++m;
    }
    return m;
  }

  Int eval(const Int& x) const {
    Int acc(0);
    for (std::size_t i = c_.size(); i-- > 0;)
      acc = acc * x + c_[i];
    return acc;
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
  void trim() {
    while (!c_.empty() && c_.back() == Int(0))
      c_.pop_back();
  }

  std::vector<Int> c_;
};

using IntPolynomial = Polynomial<BigInt>;

template <class Int>
double eval_double(const Polynomial<Int>& p, double x) {
  double acc = 0.0;
  const auto& c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;)
    acc = acc * x + static_cast<double>(c[i]);
  return acc;
}

/// "x^3 - 10x^2 - 23x + 132"
template <class Int>
std::string to_string(const Polynomial<Int>& p, const std::string& var = "x") {
  if (p.is_zero())
    return "0";
  std::string out;
  const auto& c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    Int v = c[i];
    if (v == Int(0))
      continue;
    const bool neg = v < Int(0);
    if (neg)
      v = -v;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    const std::string mag = boost::lexical_cast<std::string>(v);
    if (i == 0 || v != Int(1))
      out += mag;
    if (i >= 1)
      out += var;
    if (i >= 2)
      out += "^" + std::to_string(i);
  }
  return out;
}

namespace detail {

/// Berkowitz: char poly of the leading k x k block from that of the (k-1) x (k-1) block via a
/// Toeplitz product. Ring operations only, so any commutative ring (including Z/2^64) works.
template <class Int, class Entry>
std::vector<Int> berkowitz(int n, Entry&& at) {
  // Coefficients highest degree first while building.
  std::vector<Int> poly{Int(1)};
  for (int k = 0; k < n; ++k) {
    // Block [[A, C], [R, a]] with A the leading k x k block.
    std::vector<Int> toeplitz(static_cast<std::size_t>(k) + 2, Int(0));
    toeplitz[0] = Int(1);
    toeplitz[1] = Int(0) - at(k, k);
    std::vector<Int> vec(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
      vec[static_cast<std::size_t>(i)] = at(i, k); // C
    for (int m = 2; m <= k + 1; ++m) {
      Int dot(0);
      for (int i = 0; i < k; ++i)
        dot += at(k, i) * vec[static_cast<std::size_t>(i)]; // R A^(m-2) C
      toeplitz[static_cast<std::size_t>(m)] = Int(0) - dot;
      if (m == k + 1)
        break;
      std::vector<Int> next(static_cast<std::size_t>(k), Int(0));
      for (int i = 0; i < k; ++i) {
        Int acc(0);
        for (int j = 0; j < k; ++j)
          acc += at(i, j) * vec[static_cast<std::size_t>(j)];
        next[static_cast<std::size_t>(i)] = acc;
      }
      vec = std::move(next);
    }
    std::vector<Int> grown(poly.size() + 1, Int(0));
    for (std::size_t i = 0; i < grown.size(); ++i)
      for (std::size_t j = 0; j < poly.size() && j <= i; ++j)
        grown[i] += toeplitz[i - j] * poly[j];
    poly = std::move(grown);
  }
  std::reverse(poly.begin(), poly.end());
  return poly;
}

} // namespace detail

/// det(xI - m), exact over arbitrary-precision integers.
inline IntPolynomial char_poly_exact(const IntMatrix& m) {
  if (!m.is_symmetric())
    throw argument_error("char_poly_exact expects a symmetric matrix");
  std::vector<BigInt> entries(static_cast<std::size_t>(m.order()) * static_cast<std::size_t>(m.order()));
  for (int i = 0; i < m.order(); ++i)
    for (int j = 0; j < m.order(); ++j)
      entries[static_cast<std::size_t>(i * m.order() + j)] = m(i, j);
  const int n = m.order();
  auto at = [&](int i, int j) -> const BigInt& { return entries[static_cast<std::size_t>(i * n + j)]; };
  return IntPolynomial(detail::berkowitz<BigInt>(n, at));
}

/// log2 of a Hadamard-type bound on every coefficient of det(xI - m):
/// |c_{n-k}| <= C(n,k) * (sqrt(k) * max|m_ij|)^k.
inline double log2_coefficient_bound(const IntMatrix& m) {
  const int n = m.order();
  const double entry = static_cast<double>(std::max<std::int64_t>(1, m.max_abs()));
  double best = 0.0;
  for (int k = 1; k <= n; ++k) {
    const double log_binom = (std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0)) / std::log(2.0);
    best = std::max(best, log_binom + k * (0.5 * std::log2(static_cast<double>(k)) + std::log2(entry)));
  }
  return best;
}

/// True when every coefficient of det(xI - m) provably fits in int64.
inline bool fits_int64_char_poly(const IntMatrix& m) { return log2_coefficient_bound(m) < 62.0; }

/// det(xI - m) computed in wrapping 64-bit arithmetic. Exact whenever fits_int64_char_poly(m):
/// Berkowitz never divides, so the result is correct modulo 2^64.
inline Polynomial<std::int64_t> char_poly_int64(const IntMatrix& m) {
  const int n = m.order();
  auto at = [&](int i, int j) { return static_cast<std::uint64_t>(m(i, j)); };
  auto wrapped = detail::berkowitz<std::uint64_t>(n, at);
  std::vector<std::int64_t> out(wrapped.size());
  std::transform(wrapped.begin(), wrapped.end(), out.begin(),
                 [](std::uint64_t v) { return static_cast<std::int64_t>(v); });
  return Polynomial<std::int64_t>(std::move(out));
}

inline IntPolynomial to_big(const Polynomial<std::int64_t>& p) {
  std::vector<BigInt> c;
  c.reserve(p.coeffs().size());
  for (auto v : p.coeffs())
    c.emplace_back(v);
  return IntPolynomial(std::move(c));
}

} // namespace seidel

#endif
