#ifndef SEIDEL_TRIPARTITE_HPP
#define SEIDEL_TRIPARTITE_HPP

// Complete tripartite graphs K_{p,q,r} and K_{x,y,z} are Seidel cospectral exactly when
// x+y+z = p+q+r and xyz = pqr; distinct triples are never switching equivalent, so K_{p,q,r}
// is S-determined iff that system has no other solution.

#include "errors.hpp"
#include "graph.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace seidel {

/// Part sizes p >= q >= r >= 1 of a complete tripartite graph.
class Triple {
public:
  Triple() = default;
  Triple(std::int64_t a, std::int64_t b, std::int64_t c) : v_{a, b, c} {
    if (a < 1 || b < 1 || c < 1)
      throw argument_error("triple entries must be positive");
    std::sort(v_.begin(), v_.end(), std::greater<>());
  }

  std::int64_t p() const { return v_[0]; }
  std::int64_t q() const { return v_[1]; }
  std::int64_t r() const { return v_[2]; }
  std::int64_t sum() const { return v_[0] + v_[1] + v_[2]; }
  std::int64_t product() const { return v_[0] * v_[1] * v_[2]; }
  const std::array<std::int64_t, 3>& values() const { return v_; }

  bool contains(std::int64_t x) const { return v_[0] == x || v_[1] == x || v_[2] == x; }
  Triple scaled(std::int64_t k) const { return Triple(k * v_[0], k * v_[1], k * v_[2]); }
  MultipartiteSpec spec() const {
    return MultipartiteSpec({static_cast<int>(v_[0]), static_cast<int>(v_[1]), static_cast<int>(v_[2])});
  }

  std::string to_string() const {
    return "(" + std::to_string(v_[0]) + "," + std::to_string(v_[1]) + "," + std::to_string(v_[2]) + ")";
  }

  friend bool operator==(const Triple&, const Triple&) = default;
  friend auto operator<=>(const Triple&, const Triple&) = default;

private:
  std::array<std::int64_t, 3> v_{1, 1, 1};
};

/// Positive divisors of v in increasing order.
inline std::vector<std::int64_t> divisors(std::int64_t v) {
  std::vector<std::int64_t> small, large;
  for (std::int64_t d = 1; d * d <= v; ++d) {
    if (v % d == 0) {
      small.push_back(d);
      if (d != v / d)
        large.push_back(v / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

/// Deterministic trial division.
inline bool is_prime(std::int64_t v) {
  if (v < 2)
    return false;
  for (std::int64_t d = 2; d * d <= v; ++d)
    if (v % d == 0)
      return false;
  return true;
}

/// Triples other than t with the same sum and product, lexicographically descending.
/// Walks divisors x of P = pqr, then divisors y of P/x, with z = P/(xy).
inline std::vector<Triple> cospectral_mates(const Triple& t) {
  const std::int64_t n = t.sum();
  const std::int64_t prod = t.product();
  std::vector<Triple> out;
  for (std::int64_t x : divisors(prod)) {
    if (x > n - 2)
      break;
    if (x * x * x < prod)
      continue; // x is the largest entry
    const std::int64_t rest = prod / x;
    for (std::int64_t y : divisors(rest)) {
      if (y > x)
        break;
      const std::int64_t z = rest / y;
      if (z > y)
        continue;
      if (x + y + z != n)
        continue;
      Triple m(x, y, z);
      if (m != t)
        out.push_back(m);
    }
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

inline bool is_s_determined(const Triple& t) { return cospectral_mates(t).empty(); }

/// All triples p >= q >= r >= 1 with p + q + r = n, lexicographically descending.
inline std::vector<Triple> triples_of_order(std::int64_t n) {
  std::vector<Triple> out;
  for (std::int64_t p = n - 2; p >= 1; --p)
    for (std::int64_t q = std::min(p, n - p - 1); q >= 1; --q) {
      const std::int64_t r = n - p - q;
      if (r < 1 || r > q)
        continue;
      out.emplace_back(p, q, r);
    }
  return out;
}

/// Number of partitions of n into exactly three positive parts: round(n^2 / 12).
inline std::int64_t triple_count(std::int64_t n) { return n < 3 ? 0 : (n * n + 6) / 12; }

struct CospectralFamily {
  std::int64_t sum = 0;
  std::int64_t product = 0;
  std::vector<Triple> members; // descending, at least two

  friend bool operator==(const CospectralFamily&, const CospectralFamily&) = default;
};

struct ScanReport {
  std::int64_t n = 0;
  std::vector<CospectralFamily> families; // ascending product
  std::int64_t determined_count = 0;
  std::int64_t total_triples = 0;

  friend bool operator==(const ScanReport&, const ScanReport&) = default;
};

inline constexpr std::int64_t max_scan_order = 10000;

/// Groups every triple of order n by product; groups of two or more are cospectral families.
inline ScanReport scan_order(std::int64_t n) {
  if (n < 3 || n > max_scan_order)
    throw argument_error("scan order must lie in 3.." + std::to_string(max_scan_order));
  std::map<std::int64_t, std::vector<Triple>> by_product;
  ScanReport report;
  report.n = n;
  for (std::int64_t p = 1; p <= n - 2; ++p)
    for (std::int64_t q = 1; q <= p; ++q) {
      const std::int64_t r = n - p - q;
      if (r < 1 || r > q)
        continue;
      by_product[p * q * r].emplace_back(p, q, r);
      ++report.total_triples;
    }
  for (auto& [prod, members] : by_product) {
    if (members.size() == 1) {
      ++report.determined_count;
      continue;
    }
    std::sort(members.begin(), members.end(), std::greater<>());
    report.families.push_back({n, prod, std::move(members)});
  }
  return report;
}

/// scan_order for every n in [first, last], split across workers by n, merged in ascending n.
inline std::vector<ScanReport> scan_range(std::int64_t first, std::int64_t last, int workers = 1) {
  if (first > last)
    throw argument_error("empty scan range");
  if (first < 3 || last > max_scan_order)
    throw argument_error("scan order must lie in 3.." + std::to_string(max_scan_order));
  std::vector<ScanReport> out(static_cast<std::size_t>(last - first + 1));
  parallel_intervals(out.size(), workers, [&](std::uint64_t a, std::uint64_t b, int) {
    for (auto i = a; i < b; ++i)
      out[i] = scan_order(first + static_cast<std::int64_t>(i));
  });
  return out;
}

enum class ConditionKind {
  Balanced,    // p = q = r
  PrimePowers, // all entries powers of one prime a (a^0 = 1 allowed)
  PrimeMax,    // max entry prime
  AbAbA,       // (ab, ab, a), a != b primes; the pair (2,3) is the exception
  AbAb1,       // (ab, ab, 1), a > b primes, a != 2b - 1
  Pq1SmallQ,   // (p, q, 1) with q <= 4
};

inline std::string condition_name(ConditionKind k) {
  switch (k) {
  case ConditionKind::Balanced:
    return "BALANCED";
  case ConditionKind::PrimePowers:
    return "PRIME_POWERS";
  case ConditionKind::PrimeMax:
    return "PRIME_MAX";
  case ConditionKind::AbAbA:
    return "AB_AB_A";
  case ConditionKind::AbAb1:
    return "AB_AB_1";
  case ConditionKind::Pq1SmallQ:
    return "PQ1_SMALL_Q";
  }
  return "UNKNOWN";
}

/// A named sufficient condition for S-determination. `exception` marks a matched shape whose
/// statement excludes these parameters, so it does not imply S-determination.
struct Condition {
  ConditionKind kind;
  std::vector<std::int64_t> params;
  bool exception = false;

  std::string to_string() const {
    std::string s = condition_name(kind);
    if (!params.empty()) {
      s += "(";
      for (std::size_t i = 0; i < params.size(); ++i)
        s += (i ? "," : "") + std::to_string(params[i]);
      s += ")";
    }
    if (exception)
      s += " exception";
    return s;
  }

  friend bool operator==(const Condition&, const Condition&) = default;
};

namespace detail {

/// The prime a with v = a^e (e >= 1), if any.
inline std::optional<std::int64_t> prime_base(std::int64_t v) {
  if (v < 2)
    return std::nullopt;
  std::int64_t a = v;
  for (std::int64_t d = 2; d * d <= v; ++d)
    if (v % d == 0) {
      a = d;
      break;
    }
  while (v % a == 0)
    v /= a;
  if (v != 1)
    return std::nullopt;
  return a;
}

/// Primes (a, b), a != b, with v = a*b.
inline std::optional<std::pair<std::int64_t, std::int64_t>> two_prime_product(std::int64_t v) {
  for (std::int64_t d = 2; d * d <= v; ++d)
    if (v % d == 0) {
      const std::int64_t e = v / d;
      if (d != e && is_prime(d) && is_prime(e))
        return std::pair{d, e};
      return std::nullopt;
    }
  return std::nullopt;
}

} // namespace detail

/// Every named sufficient condition t satisfies (plus matched exceptions).
inline std::vector<Condition> classify_conditions(const Triple& t) {
  std::vector<Condition> out;
  const auto p = t.p(), q = t.q(), r = t.r();

  if (p == q && q == r)
    out.push_back({ConditionKind::Balanced, {}});

  if (auto a = detail::prime_base(p)) {
    auto power_of_a = [&](std::int64_t v) { return v == 1 || detail::prime_base(v) == a; };
    if (power_of_a(q) && power_of_a(r))
      out.push_back({ConditionKind::PrimePowers, {*a}});
  }

  if (is_prime(p))
    out.push_back({ConditionKind::PrimeMax, {}});

  // (ab, ab, a): p == q, r a prime dividing p, p / r a different prime.
  if (p == q && r >= 2 && is_prime(r) && p % r == 0) {
    const std::int64_t b = p / r;
    if (b != r && is_prime(b))
      out.push_back({ConditionKind::AbAbA, {r, b}, r == 2 && b == 3});
  }

  if (p == q && r == 1) {
    if (auto ab = detail::two_prime_product(p)) {
      const auto [b, a] = *ab; // b < a
      out.push_back({ConditionKind::AbAb1, {a, b}, a == 2 * b - 1});
    }
  }

  if (r == 1 && q <= 4)
    out.push_back({ConditionKind::Pq1SmallQ, {q}});

  return out;
}

/// Only the conditions that imply S-determination.
inline std::vector<Condition> sufficient_conditions(const Triple& t) {
  auto all = classify_conditions(t);
  std::erase_if(all, [](const Condition& c) { return c.exception; });
  return all;
}

/// (k(2k-1), k(2k-1), 1) and ((2k-1)^2, k, k): equal sum and product for every k >= 1.
inline std::pair<Triple, Triple> family_prr(std::int64_t k) {
  if (k < 1)
    throw argument_error("family_prr needs k >= 1");
  const std::int64_t m = 2 * k - 1;
  return {Triple(k * m, k * m, 1), Triple(m * m, k, k)};
}

/// For q > 4, a pair (p, q, 1) / mate with equal sum and product; absent for q <= 4.
/// Odd q: ((q-1)^2/2, q, 1) and (q(q-1)/2, (q-1)/2, 2).
/// Even q = ab with a = 2, b = q/2 > 2: p = (b-1)(ab-a-b+2), mate (b(ab-a-b+2), b-1, a).
inline std::optional<std::pair<Triple, Triple>> family_pq1(std::int64_t q) {
  if (q <= 4)
    return std::nullopt;
  if (q % 2 == 1) {
    const std::int64_t h = (q - 1) / 2;
    return std::pair{Triple((q - 1) * h, q, 1), Triple(q * h, h, 2)};
  }
  const std::int64_t a = 2;
  const std::int64_t b = q / a;
  const std::int64_t w = a * b - a - b + 2;
  return std::pair{Triple((b - 1) * w, q, 1), Triple(b * w, b - 1, a)};
}

/// Orders where the parametric 7k - alpha pair degenerates or leaves the positive integers.
inline const std::map<std::int64_t, std::pair<Triple, Triple>>& special_order_pairs() {
  static const std::map<std::int64_t, std::pair<Triple, Triple>> table{
      {14, {Triple(8, 3, 3), Triple(6, 6, 2)}},    // k=3, alpha=7 gives a negative entry
      {22, {Triple(9, 8, 5), Triple(10, 6, 6)}},
      {24, {Triple(12, 10, 2), Triple(16, 5, 3)}},
      {30, {Triple(20, 7, 3), Triple(21, 5, 4)}},
      {36, {Triple(21, 13, 2), Triple(26, 7, 3)}},
      {42, {Triple(24, 16, 2), Triple(32, 6, 4)}},
  };
  return table;
}

/// A pair of distinct cospectral triples of order n >= 13; absent for n = 15 and n = 18.
/// Writes n = 7k - alpha with the smallest k giving alpha in 1..7 and pairs
/// (alpha, 3k, 4k - 2alpha) with (2alpha, k, 6k - 3alpha).
inline std::optional<std::pair<Triple, Triple>> family_7k_alpha(std::int64_t n) {
  if (n < 13)
    throw argument_error("no cospectral tripartite pair exists below order 13");
  if (n == 15 || n == 18)
    return std::nullopt;
  const auto& special = special_order_pairs();
  if (auto it = special.find(n); it != special.end())
    return it->second;
  const std::int64_t k = n / 7 + 1;
  const std::int64_t alpha = 7 * k - n;
  return std::pair{Triple(alpha, 3 * k, 4 * k - 2 * alpha), Triple(2 * alpha, k, 6 * k - 3 * alpha)};
}

/// k * m for every mate m of t. Each is a mate of k * t; the converse fails in general.
inline std::vector<Triple> scaling_mates(const Triple& t, std::int64_t k) {
  if (k < 1)
    throw argument_error("scale factor must be positive");
  std::vector<Triple> out;
  for (const auto& m : cospectral_mates(t))
    out.push_back(m.scaled(k));
  return out;
}

} // namespace seidel

#endif
