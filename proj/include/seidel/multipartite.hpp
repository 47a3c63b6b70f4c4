#ifndef SEIDEL_MULTIPARTITE_HPP
#define SEIDEL_MULTIPARTITE_HPP

#include "errors.hpp"
#include "graph.hpp"
#include "polynomial.hpp"
#include "spectrum.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace seidel {

/// Exact real number (a + b*sqrt(d)) / c in lowest terms: d square-free, c > 0, b == 0 iff d == 1.
class Surd {
public:
  constexpr Surd() = default;
  Surd(std::int64_t a, std::int64_t b = 0, std::int64_t d = 1, std::int64_t c = 1) : a_(a), b_(b), d_(d), c_(c) {
    if (c == 0)
      throw argument_error("surd with zero denominator");
    if (d < 0)
      throw argument_error("surd of a negative radicand");
    normalize();
  }

  static Surd integer(std::int64_t v) { return Surd(v); }

  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }
  std::int64_t d() const { return d_; }
  std::int64_t c() const { return c_; }
  bool is_integer() const { return b_ == 0 && c_ == 1; }

  double to_double() const {
    return (static_cast<double>(a_) + static_cast<double>(b_) * std::sqrt(static_cast<double>(d_))) /
           static_cast<double>(c_);
  }

  std::string to_string() const {
    if (b_ == 0)
      return c_ == 1 ? std::to_string(a_) : std::to_string(a_) + "/" + std::to_string(c_);
    std::string s;
    if (a_ != 0)
      s += std::to_string(a_) + (b_ > 0 ? "+" : "-");
    else if (b_ < 0)
      s += "-";
    const std::int64_t mb = b_ < 0 ? -b_ : b_;
    if (mb != 1)
      s += std::to_string(mb);
    s += "sqrt(" + std::to_string(d_) + ")";
    if (c_ != 1)
      s = (a_ != 0 ? "(" + s + ")" : s) + "/" + std::to_string(c_);
    return s;
  }

  friend bool operator==(const Surd&, const Surd&) = default;

private:
  void normalize() {
    if (b_ == 0 || d_ == 0) {
      b_ = 0;
      d_ = 1;
    }
    for (std::int64_t f = 2; f * f <= d_; ++f) {
      while (d_ % (f * f) == 0) {
        d_ /= f * f;
        b_ *= f;
      }
    }
    if (d_ == 1) {
      a_ += b_;
      b_ = 0;
    }
    if (c_ < 0) {
      a_ = -a_;
      b_ = -b_;
      c_ = -c_;
    }
    const std::int64_t g = std::gcd(std::gcd(a_, b_), c_);
    if (g > 1) {
      a_ /= g;
      b_ /= g;
      c_ /= g;
    }
  }

  std::int64_t a_ = 0, b_ = 0, d_ = 1, c_ = 1;
};

struct ClosedFormEigenvalue {
  Surd value;
  int multiplicity;
};

/// Distinct exact eigenvalues, strictly decreasing, with multiplicities.
class ClosedFormSpectrum {
public:
  ClosedFormSpectrum() = default;

  /// Merges equal values, drops zero multiplicities, sorts decreasing.
  explicit ClosedFormSpectrum(std::vector<ClosedFormEigenvalue> entries) {
    for (auto& e : entries) {
      if (e.multiplicity < 0)
        throw argument_error("negative multiplicity");
      if (e.multiplicity == 0)
        continue;
      auto it = std::find_if(entries_.begin(), entries_.end(), [&](const auto& x) { return x.value == e.value; });
      if (it != entries_.end())
        it->multiplicity += e.multiplicity;
      else
        entries_.push_back(e);
    }
    std::sort(entries_.begin(), entries_.end(),
              [](const auto& x, const auto& y) { return x.value.to_double() > y.value.to_double(); });
  }

  const std::vector<ClosedFormEigenvalue>& entries() const { return entries_; }

  int order() const {
    int n = 0;
    for (const auto& e : entries_)
      n += e.multiplicity;
    return n;
  }

  /// Every eigenvalue listed with repetition, non-increasing.
  std::vector<double> expanded() const {
    std::vector<double> out;
    for (const auto& e : entries_)
      out.insert(out.end(), static_cast<std::size_t>(e.multiplicity), e.value.to_double());
    return out;
  }

  friend bool operator==(const ClosedFormSpectrum& x, const ClosedFormSpectrum& y) {
    if (x.entries_.size() != y.entries_.size())
      return false;
    for (std::size_t i = 0; i < x.entries_.size(); ++i)
      if (!(x.entries_[i].value == y.entries_[i].value) || x.entries_[i].multiplicity != y.entries_[i].multiplicity)
        return false;
    return true;
  }

private:
  std::vector<ClosedFormEigenvalue> entries_;
};

inline ClosedFormSpectrum spectrum_empty(int n) {
  if (n < 1)
    throw argument_error("order must be positive");
  return ClosedFormSpectrum({{Surd(n - 1), 1}, {Surd(-1), n - 1}});
}

inline ClosedFormSpectrum spectrum_complete(int n) {
  if (n < 1)
    throw argument_error("order must be positive");
  return ClosedFormSpectrum({{Surd(1), n - 1}, {Surd(1 - n), 1}});
}

inline ClosedFormSpectrum spectrum_bipartite(int p, int q) {
  if (p < 1 || q < 1)
    throw argument_error("part sizes must be positive");
  return ClosedFormSpectrum({{Surd(p + q - 1), 1}, {Surd(-1), p + q - 1}});
}

/// K_{p,...,p} with k parts: {[2p-1]^(k-1), [-1]^(n-k), [2p-1-n]^1}, n = kp.
inline ClosedFormSpectrum spectrum_balanced(int k, int p) {
  if (k < 1 || p < 1)
    throw argument_error("spectrum_balanced needs k >= 1 and p >= 1");
  const int n = k * p;
  return ClosedFormSpectrum({{Surd(2 * p - 1), k - 1}, {Surd(-1), n - k}, {Surd(2 * p - 1 - n), 1}});
}

/// Degree-k factor f with det(xI - S) = (x+1)^(n-k) f(x) for S the Seidel matrix of K_spec:
/// f(x) = prod_i (x - 2p_i + 1) + sum_j p_j prod_{i != j} (x - 2p_i + 1).
inline IntPolynomial reduced_poly_f(const MultipartiteSpec& spec) {
  const auto parts = spec.parts();
  const std::size_t k = parts.size();
  std::vector<IntPolynomial> linear(k);
  for (std::size_t i = 0; i < k; ++i)
    linear[i] = IntPolynomial::linear(BigInt(2 * parts[i] - 1));
  IntPolynomial product = IntPolynomial::constant(BigInt(1));
  for (const auto& l : linear)
    product = product * l;
  IntPolynomial sum;
  for (std::size_t j = 0; j < k; ++j) {
    IntPolynomial others = IntPolynomial::constant(BigInt(parts[j]));
    for (std::size_t i = 0; i < k; ++i)
      if (i != j)
        others = others * linear[i];
    sum = sum + others;
  }
  return product + sum;
}

/// (x+1)^(n-k) f(x): the full Seidel characteristic polynomial of K_spec.
inline IntPolynomial multipartite_char_poly(const MultipartiteSpec& spec) {
  const int n = spec.order();
  const int k = spec.num_parts();
  return IntPolynomial::linear(BigInt(-1)).pow(n - k) * reduced_poly_f(spec);
}

/// Coefficients (c2, c1, c0) of the monic cubic x^3 + c2 x^2 + c1 x + c0 carrying the three
/// non-(-1) Seidel eigenvalues of K_{p,q,r}: (3 - n, 3 - 2n, 4pqr - n + 1).
inline std::tuple<std::int64_t, std::int64_t, std::int64_t> tripartite_cubic(std::int64_t p, std::int64_t q,
                                                                            std::int64_t r) {
  if (p < 1 || q < 1 || r < 1)
    throw argument_error("tripartite parts must be positive");
  const std::int64_t n = p + q + r;
  return {3 - n, 3 - 2 * n, 4 * p * q * r - n + 1};
}

/// The n eigenvalues of the Seidel matrix of K_spec without a general eigensolver: n-k copies of
/// -1, 2p-1 with multiplicity s-1 for each part size p occurring s times, and one root of the
/// secular equation 1 + sum s*p / (x - (2p-1)) = 0 per distinct part size, found by bisection.
inline Spectrum multipartite_spectrum(const MultipartiteSpec& spec) {
  const int n = spec.order();
  const int k = spec.num_parts();
  std::vector<double> values(static_cast<std::size_t>(n - k), -1.0);

  std::vector<std::pair<int, int>> sizes; // (part size, count), decreasing size
  for (int p : spec.parts()) {
    if (!sizes.empty() && sizes.back().first == p)
      ++sizes.back().second;
    else
      sizes.emplace_back(p, 1);
  }
  for (auto [p, s] : sizes)
    values.insert(values.end(), static_cast<std::size_t>(s - 1), 2.0 * p - 1.0);

  auto secular = [&](double x) {
    double h = 1.0;
    for (auto [p, s] : sizes)
      h += static_cast<double>(s) * p / (x - (2.0 * p - 1.0));
    return h;
  };
  // h decreases on every interval between consecutive poles, from +inf to -inf, and on
  // (-inf, smallest pole) from 1 to -inf.
  auto bisect = [&](double lo, double hi) {
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi)
        break;
      if (secular(mid) > 0.0)
        lo = mid;
      else
        hi = mid;
    }
    return 0.5 * (lo + hi);
  };
  for (std::size_t i = 0; i + 1 < sizes.size(); ++i)
    values.push_back(bisect(2.0 * sizes[i + 1].first - 1.0, 2.0 * sizes[i].first - 1.0));
  const double smallest_pole = 2.0 * sizes.back().first - 1.0;
  values.push_back(bisect(smallest_pole - n - 1.0, smallest_pole));
  return Spectrum(std::move(values));
}

namespace detail {

inline std::optional<std::int64_t> to_int64(const BigInt& v) {
  if (v > BigInt(INT64_MAX) || v < BigInt(INT64_MIN))
    return std::nullopt;
  return static_cast<std::int64_t>(v);
}

} // namespace detail

/// Exact roots of a monic integer polynomial when it splits into integer linear factors and at
/// most one irreducible quadratic. Integer roots are searched in [-bound, bound].
inline std::optional<ClosedFormSpectrum> closed_form_roots(const IntPolynomial& poly, std::int64_t bound) {
  if (!poly.is_monic())
    return std::nullopt;
  std::vector<ClosedFormEigenvalue> roots;
  IntPolynomial rest = poly;
  for (std::int64_t r = -bound; r <= bound && rest.degree() > 2; ++r) {
    IntPolynomial stripped;
    const int m = rest.strip_root(BigInt(r), stripped);
    if (m > 0) {
      roots.push_back({Surd(r), m});
      rest = std::move(stripped);
    }
  }
  if (rest.degree() > 2)
    return std::nullopt;
  if (rest.degree() == 2) {
    // Integer roots of the quadratic are caught by the discriminant being a perfect square.
    const auto b = detail::to_int64(rest.coeff(1));
    const auto c = detail::to_int64(rest.coeff(0));
    if (!b || !c)
      return std::nullopt;
    const std::int64_t disc = *b * *b - 4 * *c;
    if (disc < 0)
      return std::nullopt;
    if (disc == 0) {
      roots.push_back({Surd(-*b, 0, 1, 2), 2});
    } else {
      roots.push_back({Surd(-*b, 1, disc, 2), 1});
      roots.push_back({Surd(-*b, -1, disc, 2), 1});
    }
  } else if (rest.degree() == 1) {
    const auto c = detail::to_int64(rest.coeff(0));
    if (!c)
      return std::nullopt;
    roots.push_back({Surd(-*c), 1});
  }
  return ClosedFormSpectrum(std::move(roots));
}

/// Exact Seidel spectrum of K_spec when the reduced polynomial splits as closed_form_roots allows.
inline std::optional<ClosedFormSpectrum> closed_form_spectrum(const MultipartiteSpec& spec) {
  auto roots = closed_form_roots(reduced_poly_f(spec), spec.order());
  if (!roots)
    return std::nullopt;
  auto entries = roots->entries();
  entries.push_back({Surd(-1), spec.order() - spec.num_parts()});
  return ClosedFormSpectrum(std::move(entries));
}

struct ClauseResult {
  bool ok = true;
  std::string violation; // first violated inequality, empty when ok
};

/// Per-clause outcome of the eigenvalue bounds for complete k-partite graphs (k >= 2):
///   (1) l_1 >= .. >= l_{k-1} > 0 > l_k = .. = l_{n-1} = -1 >= l_n
///   (2) 2p_1-1 >= l_1 >= 2p_2-1 >= l_2 >= .. >= 2p_{k-1}-1 >= l_{k-1} >= 2p_k-1
///   (3) (2-k)p_k - 1 >= l_n >= 2p_k - n - 1
///   (4) p_i > p_{i+1} implies 2p_i-1 > l_i > 2p_{i+1}-1
struct BoundsReport {
  std::array<ClauseResult, 4> clauses;
  bool all_pass() const {
    return std::all_of(clauses.begin(), clauses.end(), [](const auto& c) { return c.ok; });
  }
};

inline BoundsReport check_bounds_lemma(const MultipartiteSpec& spec, const Spectrum& s, double tol = 1e-8) {
  const int n = spec.order();
  const int k = spec.num_parts();
  if (s.size() != n)
    throw argument_error("spectrum length " + std::to_string(s.size()) + " does not match order " + std::to_string(n));
  if (k < 2)
    throw argument_error("bounds check needs at least two parts");

  auto lam = [&](int i) { return s[i - 1]; }; // 1-based
  auto bound = [&](int i) { return 2.0 * spec.parts()[static_cast<std::size_t>(i - 1)] - 1.0; };
  auto fail = [](ClauseResult& c, std::string msg) {
    if (c.ok) {
      c.ok = false;
      c.violation = std::move(msg);
    }
  };
  auto idx = [](const char* name, int i) { return std::string(name) + "_" + std::to_string(i); };

  BoundsReport r;
  auto& c1 = r.clauses[0];
  for (int i = 1; i <= k - 1; ++i)
    if (!(lam(i) > tol))
      fail(c1, idx("l", i) + " > 0");
  if (!(lam(k) < -tol))
    fail(c1, "0 > " + idx("l", k));
  for (int i = k; i <= n - 1; ++i)
    if (std::abs(lam(i) + 1.0) > tol)
      fail(c1, idx("l", i) + " = -1");
  if (n >= 2 && lam(n - 1) + tol < lam(n))
    fail(c1, idx("l", n - 1) + " >= " + idx("l", n));

  auto& c2 = r.clauses[1];
  for (int i = 1; i <= k - 1; ++i) {
    if (bound(i) + tol < lam(i))
      fail(c2, "2p_" + std::to_string(i) + "-1 >= " + idx("l", i));
    if (lam(i) + tol < bound(i + 1))
      fail(c2, idx("l", i) + " >= 2p_" + std::to_string(i + 1) + "-1");
  }

  auto& c3 = r.clauses[2];
  const double pk = spec.parts()[static_cast<std::size_t>(k - 1)];
  if ((2.0 - k) * pk - 1.0 + tol < lam(n))
    fail(c3, "(2-k)p_k-1 >= l_n");
  if (lam(n) + tol < 2.0 * pk - n - 1.0)
    fail(c3, "l_n >= 2p_k-n-1");

  auto& c4 = r.clauses[3];
  for (int i = 1; i <= k - 1; ++i) {
    if (spec.parts()[static_cast<std::size_t>(i - 1)] <= spec.parts()[static_cast<std::size_t>(i)])
      continue;
    if (!(bound(i) - lam(i) > tol))
      fail(c4, "2p_" + std::to_string(i) + "-1 > " + idx("l", i));
    if (!(lam(i) - bound(i + 1) > tol))
      fail(c4, idx("l", i) + " > 2p_" + std::to_string(i + 1) + "-1");
  }
  return r;
}

} // namespace seidel

#endif
