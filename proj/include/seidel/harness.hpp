#ifndef SEIDEL_HARNESS_HPP
#define SEIDEL_HARNESS_HPP

// Machine-checkable verification jobs. Each job runs one claim over a bounded instance space and
// reports pass/fail; a failure carries the least failing instance as its witness.

#include "errors.hpp"
#include "graph.hpp"
#include "graph6.hpp"
#include "json_io.hpp"
#include "multipartite.hpp"
#include "parallel.hpp"
#include "spectrum.hpp"
#include "switching.hpp"
#include "tripartite.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace seidel {

enum class JobStatus { Pass, Fail, Skipped };

inline std::string status_name(JobStatus s) {
  switch (s) {
  case JobStatus::Pass:
    return "pass";
  case JobStatus::Fail:
    return "fail";
  case JobStatus::Skipped:
    return "skipped";
  }
  return "unknown";
}

struct VerificationJob {
  std::string id;
  json params = json::object();
  JobStatus status = JobStatus::Pass;
  std::optional<json> witness; // always set when status == Fail
  json stats = json::object();
  std::chrono::milliseconds elapsed{0};

  bool passed() const { return status == JobStatus::Pass; }
};

struct HarnessParams {
  int main_n_max = 7;
  int tuples_n_max = 10;
  int tuples_k = 3;
  int bipartite_n_max = 14;
  std::vector<int> si_spec{2, 2, 2, 1, 1, 1};
  int si_n_max = 24;
  int remark_n_max = 200;
  int prime_bound = 50;
  int workers = 1;
};

namespace detail {

class JobTimer {
public:
  explicit JobTimer(VerificationJob& job) : job_(job), start_(std::chrono::steady_clock::now()) {}
  ~JobTimer() {
    job_.elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_);
  }
  JobTimer(const JobTimer&) = delete;
  JobTimer& operator=(const JobTimer&) = delete;

private:
  VerificationJob& job_;
  std::chrono::steady_clock::time_point start_;
};

inline void fail(VerificationJob& job, json witness) {
  if (job.status != JobStatus::Fail) {
    job.status = JobStatus::Fail;
    job.witness = std::move(witness);
  }
}

inline json spec_json(const MultipartiteSpec& s) { return json(std::vector<int>(s.parts().begin(), s.parts().end())); }

inline std::vector<std::int64_t> as_int64(const IntPolynomial& p) {
  std::vector<std::int64_t> out;
  for (const auto& c : p.coeffs())
    out.push_back(static_cast<std::int64_t>(c));
  return out;
}

} // namespace detail

/// Switches g into complete multipartite form following the structure of a graph cospectral with
/// K_spec: isolate vertex 0, then switch with respect to all isolated vertices.
/// Returns the total switching set and the recognized parts, or nothing if the result is not
/// complete multipartite.
inline std::optional<std::pair<VertexSet, MultipartiteSpec>> multipartite_switching_form(const Graph& g) {
  if (g.order() == 0)
    return std::nullopt;
  const Graph descendant = isolate_vertex_form(g, 0);
  const VertexSet isolated = isolated_vertices(descendant);
  const VertexSet u = g.neighbors(0) ^ isolated;
  auto spec = recognize_complete_multipartite(switch_graph(g, u));
  if (!spec)
    return std::nullopt;
  return std::pair{u, *spec};
}

/// Every graph on n <= n_max vertices with the Seidel spectrum of some complete k-partite graph
/// is switching equivalent to a complete k-partite graph.
inline VerificationJob verify_main_theorem(int n_max, int workers = 1) {
  VerificationJob job;
  job.id = "main-theorem";
  job.params = {{"n_max", n_max}};
  detail::JobTimer timer(job);
  if (n_max < 1 || n_max > default_enumeration_cap)
    throw capacity_error("main-theorem n_max must lie in 1.." + std::to_string(default_enumeration_cap));

  std::uint64_t examined = 0, cospectral = 0, fallbacks = 0;
  json per_order = json::array();
  for (int n = 1; n <= n_max && job.status != JobStatus::Fail; ++n) {
    // Exact polynomial -> part counts of the complete multipartite graphs carrying it.
    std::map<std::vector<std::int64_t>, std::set<int>> targets;
    std::map<std::vector<std::int64_t>, std::vector<MultipartiteSpec>> target_specs;
    for (const auto& spec : partitions_of(n)) {
      const auto key = detail::as_int64(multipartite_char_poly(spec));
      targets[key].insert(spec.num_parts());
      target_specs[key].push_back(spec);
    }

    struct Slot {
      std::uint64_t cospectral = 0, fallbacks = 0;
      std::optional<std::uint64_t> first_failure;
      std::string reason;
    };
    const std::uint64_t total = labeled_graph_count(n);
    std::vector<Slot> slots(static_cast<std::size_t>(std::max(1, workers)));

    parallel_intervals(total, workers, [&](std::uint64_t first, std::uint64_t last, int w) {
      Slot& slot = slots[static_cast<std::size_t>(w)];
      for (std::uint64_t mask = first; mask < last; ++mask) {
        const Graph g = graph_from_edge_mask(n, mask);
        const auto key = char_poly_int64(seidel_matrix(g)).coeffs();
        auto it = targets.find(key);
        if (it == targets.end())
          continue;
        ++slot.cospectral;
        auto form = multipartite_switching_form(g);
        if (form) {
          int k = form->second.num_parts();
          if (k == 1 && n >= 2)
            k = 2; // the edgeless graph switches to K_{n-1,1}
          if (it->second.count(k))
            continue;
        }
        // Structural route failed; decide directly against each cospectral target.
        ++slot.fallbacks;
        bool found = false;
        for (const auto& spec : target_specs[key])
          if (switching_equivalent(g, complete_multipartite(spec))) {
            found = true;
            break;
          }
        if (!found) {
          slot.first_failure = mask;
          slot.reason = "no switching to a cospectral complete multipartite graph";
          return; // later masks in this interval cannot be smaller
        }
      }
    });

    std::uint64_t n_cospectral = 0;
    for (const auto& s : slots) {
      n_cospectral += s.cospectral;
      fallbacks += s.fallbacks;
    }
    for (const auto& s : slots)
      if (s.first_failure) {
        const Graph g = graph_from_edge_mask(n, *s.first_failure);
        detail::fail(job, {{"n", n}, {"mask", *s.first_failure}, {"graph6", graph6_encode(g)}, {"reason", s.reason}});
        break;
      }
    examined += total;
    cospectral += n_cospectral;
    per_order.push_back({{"n", n}, {"graphs", total}, {"cospectral_with_multipartite", n_cospectral}});
  }
  job.stats = {{"graphs_examined", examined},
               {"cospectral_with_multipartite", cospectral},
               {"fallback_searches", fallbacks},
               {"per_order", per_order}};
  return job;
}

/// Distinct k-tuples (k >= 3) of equal order give complete multipartite graphs that are not
/// switching equivalent.
inline VerificationJob verify_distinct_tuples(int n_max, int k) {
  VerificationJob job;
  job.id = "distinct-tuples";
  job.params = {{"n_max", n_max}, {"k", k}};
  detail::JobTimer timer(job);
  if (k < 3)
    throw argument_error("distinct-tuples needs k >= 3");
  if (n_max > 14)
    throw capacity_error("distinct-tuples runs graph-level switching tests only up to n = 14");

  std::uint64_t pairs = 0;
  for (int n = k; n <= n_max && job.status != JobStatus::Fail; ++n) {
    const auto specs = partitions_of(n, k);
    for (std::size_t i = 0; i < specs.size() && job.status != JobStatus::Fail; ++i)
      for (std::size_t j = i + 1; j < specs.size(); ++j) {
        ++pairs;
        const auto cert = switching_equivalent(complete_multipartite(specs[i]), complete_multipartite(specs[j]));
        if (cert) {
          detail::fail(job, {{"first", detail::spec_json(specs[i])},
                             {"second", detail::spec_json(specs[j])},
                             {"certificate", to_json(*cert)}});
          break;
        }
      }
  }
  job.stats = {{"pairs_checked", pairs}};
  return job;
}

/// All complete bipartite graphs of one order are switching equivalent; the explicit switching
/// set (any s - q vertices of the larger side of K_{p,q}) turns K_{p,q} into K_{s,t}.
inline VerificationJob verify_bipartite_switching(int n_max) {
  VerificationJob job;
  job.id = "bipartite-switching";
  job.params = {{"n_max", n_max}};
  detail::JobTimer timer(job);
  if (n_max > 14)
    throw capacity_error("bipartite-switching runs graph-level tests only up to n = 14");

  std::uint64_t pairs = 0;
  for (int n = 2; n <= n_max && job.status != JobStatus::Fail; ++n) {
    const auto specs = partitions_of(n, 2);
    for (const auto& a : specs)
      for (const auto& b : specs) {
        if (job.status == JobStatus::Fail)
          break;
        ++pairs;
        const Graph ga = complete_multipartite(a);
        const Graph gb = complete_multipartite(b);
        const auto cert = switching_equivalent(ga, gb);
        if (!cert || !verify_certificate(ga, gb, *cert)) {
          detail::fail(job, {{"first", detail::spec_json(a)}, {"second", detail::spec_json(b)}, {"reason", "no certificate"}});
          break;
        }
        const int p = a.parts()[0], q = a.parts()[1];
        const int s = b.parts()[0], t = b.parts()[1];
        if (p <= s)
          continue;
        // U = the first s - q vertices of the p-side block.
        VertexSet u;
        for (int v = 0; v < s - q; ++v)
          u.insert(v);
        const Graph switched = switch_graph(ga, u);
        const auto spec = recognize_complete_multipartite(switched);
        if (!signature_conjugation_check(ga, switched, u) || !spec || *spec != MultipartiteSpec({s, t})) {
          detail::fail(job, {{"first", detail::spec_json(a)},
                             {"second", detail::spec_json(b)},
                             {"subset", u.indices()},
                             {"reason", "explicit switching set does not produce the second graph"}});
        }
      }
  }
  job.stats = {{"pairs_checked", pairs}};
  return job;
}

/// K with every distinct part size repeated at least three times has no other partition of its
/// order with the same Seidel characteristic polynomial.
inline VerificationJob verify_si_ge_3(const std::vector<int>& parts, int n_max) {
  VerificationJob job;
  job.id = "si-ge-3";
  const MultipartiteSpec spec(parts);
  job.params = {{"spec", detail::spec_json(spec)}, {"n_max", n_max}};
  detail::JobTimer timer(job);
  if (n_max > 24)
    throw capacity_error("si-ge-3 n_max is capped at 24");
  if (spec.order() > n_max)
    throw argument_error("spec order " + std::to_string(spec.order()) + " exceeds n_max");
  std::map<int, int> mult;
  for (int p : spec.parts())
    ++mult[p];
  for (auto [p, s] : mult)
    if (s < 3)
      throw argument_error("part size " + std::to_string(p) + " occurs fewer than three times");

  const auto target = multipartite_char_poly(spec);
  std::uint64_t compared = 0;
  for (const auto& other : partitions_of(spec.order())) {
    if (other == spec)
      continue;
    ++compared;
    if (multipartite_char_poly(other) == target) {
      detail::fail(job, {{"cospectral_partition", detail::spec_json(other)}});
      break;
    }
  }
  job.stats = {{"partitions_compared", compared}};
  return job;
}

/// Tripartite scan for n = 3..18: families exist exactly at n = 13, 14, 16, 17 and contain the
/// published pairs.
inline VerificationJob verify_computer_check() {
  VerificationJob job;
  job.id = "computer-check";
  job.params = {{"n_min", 3}, {"n_max", 18}};
  detail::JobTimer timer(job);

  const std::set<std::int64_t> expected_orders{13, 14, 16, 17};
  const std::vector<std::pair<Triple, Triple>> listed{
      {Triple(9, 2, 2), Triple(6, 6, 1)},  {Triple(8, 3, 3), Triple(6, 6, 2)}, {Triple(10, 2, 2), Triple(8, 5, 1)},
      {Triple(9, 5, 2), Triple(10, 3, 3)}, {Triple(9, 4, 4), Triple(8, 6, 3)},
  };
  json orders = json::array();
  std::map<std::int64_t, ScanReport> reports;
  for (std::int64_t n = 3; n <= 18; ++n) {
    reports[n] = scan_order(n);
    const bool has = !reports[n].families.empty();
    if (has)
      orders.push_back(n);
    if (has != (expected_orders.count(n) > 0))
      detail::fail(job, {{"n", n}, {"families", to_json(reports[n])["families"]}});
  }
  for (const auto& [a, b] : listed) {
    const auto& fams = reports[a.sum()].families;
    const bool present = std::any_of(fams.begin(), fams.end(), [&](const CospectralFamily& f) {
      return std::count(f.members.begin(), f.members.end(), a) && std::count(f.members.begin(), f.members.end(), b);
    });
    const bool same_poly = multipartite_char_poly(a.spec()) == multipartite_char_poly(b.spec());
    if (!present || !same_poly)
      detail::fail(job, {{"pair", json::array({to_json(a), to_json(b)})}, {"reason", "listed pair not reproduced"}});
  }
  job.stats = {{"orders_with_families", orders}};
  return job;
}

/// For 13 <= n <= n_max, n not 15 or 18, the 7k - alpha construction (or the table at the special
/// orders) yields distinct cospectral triples; every order 3..n_max has an S-determined triple.
inline VerificationJob verify_remark_families(int n_max) {
  VerificationJob job;
  job.id = "remark-families";
  job.params = {{"n_max", n_max}};
  detail::JobTimer timer(job);
  if (n_max < 13)
    throw argument_error("remark-families needs n_max >= 13");

  std::uint64_t pairs = 0;
  for (std::int64_t n = 13; n <= n_max; ++n) {
    const auto pair = family_7k_alpha(n);
    if (n == 15 || n == 18) {
      if (pair || !scan_order(n).families.empty())
        detail::fail(job, {{"n", n}, {"reason", "order expected to have only S-determined triples"}});
      continue;
    }
    ++pairs;
    if (!pair) {
      detail::fail(job, {{"n", n}, {"reason", "no pair produced"}});
      continue;
    }
    const auto& [a, b] = *pair;
    const auto mates = cospectral_mates(a);
    if (a == b || a.sum() != n || b.sum() != n || a.product() != b.product() ||
        std::find(mates.begin(), mates.end(), b) == mates.end())
      detail::fail(job, {{"n", n}, {"pair", json::array({to_json(a), to_json(b)})}});
  }

  // At least one S-determined triple per order: (n-2, 1, 1) carries PQ1_SMALL_Q.
  for (std::int64_t n = 3; n <= n_max; ++n) {
    const Triple t(n - 2, 1, 1);
    if (sufficient_conditions(t).empty() || !is_s_determined(t))
      detail::fail(job, {{"n", n}, {"triple", to_json(t)}, {"reason", "no S-determined triple found"}});
  }
  job.stats = {{"pairs_checked", pairs}};
  return job;
}

/// Primes a != b <= bound: K_{ab,ab,a} has no mate except at (a,b) = (2,3), whose only mate is
/// (8,3,3); for a > b, K_{ab,ab,1} has a mate iff a = 2b - 1 and then exactly (a^2, b, b).
inline VerificationJob verify_ababa_and_abab1(int prime_bound) {
  VerificationJob job;
  job.id = "ababa-abab1";
  job.params = {{"prime_bound", prime_bound}};
  detail::JobTimer timer(job);
  if (prime_bound > 50)
    throw capacity_error("prime bound is capped at 50");

  std::vector<std::int64_t> primes;
  for (std::int64_t v = 2; v <= prime_bound; ++v)
    if (is_prime(v))
      primes.push_back(v);

  std::uint64_t pairs = 0;
  for (auto a : primes)
    for (auto b : primes) {
      if (a == b)
        continue;
      ++pairs;
      const Triple ababa(a * b, a * b, a);
      const auto mates = cospectral_mates(ababa);
      const std::vector<Triple> want =
          (a == 2 && b == 3) ? std::vector<Triple>{Triple(8, 3, 3)} : std::vector<Triple>{};
      if (mates != want)
        detail::fail(job, {{"a", a}, {"b", b}, {"triple", to_json(ababa)}, {"mates", to_json(mates)}});

      if (a > b) {
        const Triple abab1(a * b, a * b, 1);
        const auto m1 = cospectral_mates(abab1);
        const std::vector<Triple> want1 =
            (a == 2 * b - 1) ? std::vector<Triple>{Triple(a * a, b, b)} : std::vector<Triple>{};
        if (m1 != want1)
          detail::fail(job, {{"a", a}, {"b", b}, {"triple", to_json(abab1)}, {"mates", to_json(m1)}});
      }
    }
  job.stats = {{"prime_pairs", pairs}};
  return job;
}

/// Stable job ids, in suite order.
inline const std::vector<std::string>& job_ids() {
  static const std::vector<std::string> ids{"main-theorem",  "distinct-tuples", "bipartite-switching", "si-ge-3",
                                            "computer-check", "remark-families", "ababa-abab1"};
  return ids;
}

inline VerificationJob run_job(const std::string& id, const HarnessParams& p) {
  if (id == "main-theorem")
    return verify_main_theorem(p.main_n_max, p.workers);
  if (id == "distinct-tuples")
    return verify_distinct_tuples(p.tuples_n_max, p.tuples_k);
  if (id == "bipartite-switching")
    return verify_bipartite_switching(p.bipartite_n_max);
  if (id == "si-ge-3")
    return verify_si_ge_3(p.si_spec, p.si_n_max);
  if (id == "computer-check")
    return verify_computer_check();
  if (id == "remark-families")
    return verify_remark_families(p.remark_n_max);
  if (id == "ababa-abab1")
    return verify_ababa_and_abab1(p.prime_bound);
  throw argument_error("unknown job id '" + id + "'");
}

/// Runs the given jobs in order; "all" expands to every job.
inline std::vector<VerificationJob> run_suite(const std::vector<std::string>& ids, const HarnessParams& p) {
  std::vector<std::string> expanded;
  for (const auto& id : ids) {
    if (id == "all")
      expanded.insert(expanded.end(), job_ids().begin(), job_ids().end());
    else
      expanded.push_back(id);
  }
  for (const auto& id : expanded)
    if (std::find(job_ids().begin(), job_ids().end(), id) == job_ids().end())
      throw argument_error("unknown job id '" + id + "'");
  std::vector<VerificationJob> out;
  for (const auto& id : expanded)
    out.push_back(run_job(id, p));
  return out;
}

/// Suite report. Elapsed times are included only on request so that reports stay reproducible.
inline json to_json(const std::vector<VerificationJob>& jobs, bool with_timing) {
  json arr = json::array();
  for (const auto& j : jobs) {
    arr.push_back({{"id", j.id},
                   {"status", status_name(j.status)},
                   {"params", j.params},
                   {"witness", j.witness ? *j.witness : json(nullptr)},
                   {"stats", j.stats},
                   {"elapsed_ms", with_timing ? json(j.elapsed.count()) : json(nullptr)}});
  }
  return arr;
}

} // namespace seidel

#endif
