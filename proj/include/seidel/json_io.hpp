#ifndef SEIDEL_JSON_IO_HPP
#define SEIDEL_JSON_IO_HPP

// JSON forms of the library's interchange values.
//   polynomial       ["c0", "c1", ...]  decimal strings, constant term first
//   spectrum         [{"value": v, "multiplicity": m}, ...]
//   closed form      [{"value": {"a","b","d","c"}, "multiplicity": m}, ...]
//   certificate      {"subset": [...], "perm": [...]}
//   scan report      {"n", "families": [{"sum","product","members"}], "determined_count", "total_triples"}

#include "multipartite.hpp"
#include "polynomial.hpp"
#include "spectrum.hpp"
#include "switching.hpp"
#include "tripartite.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace seidel {

using json = nlohmann::ordered_json;

inline json to_json(const IntPolynomial& p) {
  json arr = json::array();
  for (const auto& c : p.coeffs())
    arr.push_back(c.str());
  return arr;
}

inline IntPolynomial polynomial_from_json(const json& j) {
  std::vector<BigInt> c;
  for (const auto& s : j)
    c.emplace_back(s.get<std::string>());
  return IntPolynomial(std::move(c));
}

inline json to_json(const Spectrum& s, double tol = default_grouping_tolerance) {
  json arr = json::array();
  for (const auto& e : s.grouped(tol))
    arr.push_back({{"value", e.value}, {"multiplicity", e.multiplicity}});
  return arr;
}

inline json to_json(const Surd& s) { return {{"a", s.a()}, {"b", s.b()}, {"d", s.d()}, {"c", s.c()}}; }

inline json to_json(const ClosedFormSpectrum& s) {
  json arr = json::array();
  for (const auto& e : s.entries())
    arr.push_back({{"value", to_json(e.value)}, {"multiplicity", e.multiplicity}});
  return arr;
}

inline json to_json(const SwitchingCertificate& c) {
  return {{"subset", c.subset.indices()}, {"perm", c.perm}};
}

inline SwitchingCertificate certificate_from_json(const json& j) {
  SwitchingCertificate c;
  for (int v : j.at("subset"))
    c.subset.insert(v);
  c.perm = j.at("perm").get<std::vector<int>>();
  return c;
}

inline json to_json(const Triple& t) { return json::array({t.p(), t.q(), t.r()}); }

inline json to_json(const std::vector<Triple>& ts) {
  json arr = json::array();
  for (const auto& t : ts)
    arr.push_back(to_json(t));
  return arr;
}

inline json to_json(const Condition& c) {
  return {{"name", condition_name(c.kind)}, {"params", c.params}, {"exception", c.exception}};
}

inline json to_json(const ScanReport& r) {
  json fams = json::array();
  for (const auto& f : r.families)
    fams.push_back({{"sum", f.sum}, {"product", f.product}, {"members", to_json(f.members)}});
  return {{"n", r.n}, {"families", fams}, {"determined_count", r.determined_count}, {"total_triples", r.total_triples}};
}

} // namespace seidel

#endif
