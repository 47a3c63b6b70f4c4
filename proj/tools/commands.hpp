#ifndef SEIDEL_TOOLS_COMMANDS_HPP
#define SEIDEL_TOOLS_COMMANDS_HPP

// Command bodies for the seidel CLI, kept apart from argument parsing so tests can drive them.

#include <seidel/seidel.hpp>

#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

namespace seidel::cli {

enum ExitCode { exit_ok = 0, exit_fail = 1, exit_usage = 2, exit_negative = 3 };

struct Output {
  json data;
  std::string table;
  int exit_code = exit_ok;
};

struct Options {
  double tolerance = default_grouping_tolerance;
  int workers = 1;
};

/// "K:p,q,r" is a multipartite spec; anything else is graph6.
inline Graph parse_graph_arg(const std::string& text) {
  if (text.rfind("K:", 0) == 0) {
    try {
      return complete_multipartite(MultipartiteSpec::parse(std::string_view(text).substr(2)));
    } catch (const parse_error& e) {
      throw parse_error(e.message(), e.offset() + 2);
    }
  }
  return graph6_decode(text);
}

/// One graph6 string per line; blank lines are skipped.
inline std::vector<std::string> read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw argument_error("cannot open '" + path + "'");
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
      line.pop_back();
    if (!line.empty())
      out.push_back(line);
  }
  return out;
}

/// "(x+1)^a(f)" when g is complete multipartite, otherwise the expanded polynomial.
inline std::string factored_string(const Graph& g, const IntPolynomial& full) {
  const auto spec = recognize_complete_multipartite(g);
  if (!spec)
    return to_string(full);
  const int e = spec->order() - spec->num_parts();
  if (e == 0)
    return to_string(full);
  const std::string f = "(" + to_string(reduced_poly_f(*spec)) + ")";
  return e == 1 ? "(x+1)" + f : "(x+1)^" + std::to_string(e) + f;
}

inline std::string format_double(double v) {
  std::ostringstream os;
  os << std::setprecision(10) << (std::abs(v) < 5e-13 ? 0.0 : v);
  return os.str();
}

inline Output cmd_spectrum(const std::vector<std::string>& inputs, const Options& opt) {
  Output out;
  out.data = json::array();
  std::ostringstream table;
  for (const auto& text : inputs) {
    const Graph g = parse_graph_arg(text);
    const auto poly = seidel_char_poly(g);
    const auto spectrum = seidel_spectrum(g);
    json entry{{"input", text},
               {"order", g.order()},
               {"polynomial", to_json(poly)},
               {"factored", factored_string(g, poly)},
               {"spectrum", to_json(spectrum, opt.tolerance)}};
    table << text << " (n=" << g.order() << ")\n  poly: " << entry["factored"].get<std::string>() << "\n  eigenvalues:";
    for (const auto& e : spectrum.grouped(opt.tolerance)) {
      table << ' ' << format_double(e.value);
      if (e.multiplicity > 1)
        table << " x" << e.multiplicity;
    }
    table << '\n';
    out.data.push_back(std::move(entry));
  }
  out.table = table.str();
  return out;
}

inline Output cmd_equivalent(const std::string& a, const std::string& b) {
  const Graph g = parse_graph_arg(a);
  const Graph h = parse_graph_arg(b);
  if (g.order() != h.order())
    throw argument_error("orders differ: " + std::to_string(g.order()) + " vs " + std::to_string(h.order()));
  Output out;
  const auto cert = switching_equivalent(g, h);
  if (cert) {
    out.data = {{"equivalent", true}, {"certificate", to_json(*cert)}};
    std::ostringstream t;
    t << "equivalent\n  subset:";
    for (int v : cert->subset.indices())
      t << ' ' << v;
    t << "\n  perm:";
    for (int v : cert->perm)
      t << ' ' << v;
    t << '\n';
    out.table = t.str();
  } else {
    out.data = {{"equivalent", false}};
    out.table = "not-equivalent\n";
    out.exit_code = exit_negative;
  }
  return out;
}

inline Output cmd_classify(std::int64_t p, std::int64_t q, std::int64_t r) {
  const Triple t(p, q, r);
  const auto mates = cospectral_mates(t);
  json conditions = json::array(), exceptions = json::array();
  for (const auto& c : classify_conditions(t))
    (c.exception ? exceptions : conditions).push_back(to_json(c));
  Output out;
  out.data = {{"triple", to_json(t)},
              {"mates", to_json(mates)},
              {"conditions", conditions},
              {"exceptions", exceptions},
              {"s_determined", mates.empty()}};
  std::ostringstream tb;
  tb << t.to_string() << (mates.empty() ? " S-determined" : " not S-determined") << "\n  mates:";
  for (const auto& m : mates)
    tb << ' ' << m.to_string();
  tb << "\n  conditions:";
  for (const auto& c : classify_conditions(t))
    if (!c.exception)
      tb << ' ' << c.to_string();
  tb << '\n';
  out.table = tb.str();
  return out;
}

inline Output cmd_scan(std::int64_t first, std::int64_t last, const Options& opt) {
  Output out;
  out.data = json::array();
  std::ostringstream tb;
  for (const auto& r : scan_range(first, last, opt.workers)) {
    out.data.push_back(to_json(r));
    tb << "n=" << r.n << " triples=" << r.total_triples << " determined=" << r.determined_count;
    for (const auto& f : r.families) {
      tb << "\n  product " << f.product << ':';
      for (const auto& m : f.members)
        tb << ' ' << m.to_string();
    }
    tb << '\n';
  }
  out.table = tb.str();
  return out;
}

inline Output cmd_family(const std::string& name, std::int64_t param) {
  std::optional<std::pair<Triple, Triple>> pair;
  if (name == "prr")
    pair = family_prr(param);
  else if (name == "pq1")
    pair = family_pq1(param);
  else if (name == "7k")
    pair = family_7k_alpha(param);
  else
    throw argument_error("unknown family '" + name + "' (expected prr, pq1 or 7k)");
  Output out;
  out.data = {{"family", name}, {"param", param}};
  if (pair) {
    out.data["pair"] = json::array({to_json(pair->first), to_json(pair->second)});
    out.table = pair->first.to_string() + " " + pair->second.to_string() + "\n";
  } else {
    out.data["pair"] = nullptr;
    out.table = "none\n";
    out.exit_code = exit_negative;
  }
  return out;
}

inline Output cmd_verify(const std::vector<std::string>& ids, const HarnessParams& params, bool timing) {
  const auto jobs = run_suite(ids, params);
  Output out;
  out.data = to_json(jobs, timing);
  std::ostringstream tb;
  bool all = true;
  for (const auto& j : jobs) {
    all = all && j.passed();
    tb << std::left << std::setw(22) << j.id << status_name(j.status);
    if (timing)
      tb << "  " << j.elapsed.count() << " ms";
    if (j.witness)
      tb << "  witness " << j.witness->dump();
    tb << '\n';
  }
  out.table = tb.str();
  out.exit_code = all ? exit_ok : exit_negative;
  return out;
}

} // namespace seidel::cli

#endif
