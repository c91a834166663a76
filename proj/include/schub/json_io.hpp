#pragma once

// JSON forms of the core types. Layouts are canonical (sorted keys and
// terms, coefficients as decimal strings), so parse -> serialize is the
// identity on bytes for anything this library emitted.
//
//   Permutation       [4,1,3,2]
//   IntPolynomial     [[[3],"1"],[[3,0,1],"1"]]          terms ascending
//   PipeDream         {"n":4,"crossings":[[1,1],[1,2]]}  row-major cells
//   SemExpansion      {"n":3,"degree":2,"terms":[{"a":[1,1],"coeff":"1"},...]}
//   SchubertExpansion {"n":4,"terms":[{"w":[2,3,1],"coeff":"1"},...]}

#include <json.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "schub/bases.hpp"
#include "schub/perm.hpp"
#include "schub/pipedream.hpp"
#include "schub/poly.hpp"
#include "schub/schubert.hpp"

namespace schub {

using Json = nlohmann::ordered_json;

inline Json perm_to_json(const Permutation& w) { return Json(w.word()); }

inline Permutation perm_from_json(const Json& j) {
  return Permutation::from_word(j.get<std::vector<int>>());
}

inline Json poly_to_json(const IntPolynomial& f) {
  Json terms = Json::array();
  for (const auto& [ev, c] : f.terms()) terms.push_back(Json::array({ev.exponents(), c.str()}));
  return terms;
}

inline IntPolynomial poly_from_json(const Json& j) {
  IntPolynomial f;
  for (const auto& term : j)
    f.add_term(ExponentVector(term.at(0).get<std::vector<int>>()), BigInt(term.at(1).get<std::string>()));
  return f;
}

inline Json pipedream_to_json(const PipeDream& d) {
  Json cells = Json::array();
  for (auto [r, c] : d.crossings()) cells.push_back(Json::array({r, c}));
  return Json{{"n", d.size()}, {"crossings", std::move(cells)}};
}

inline PipeDream pipedream_from_json(const Json& j) {
  std::vector<std::pair<int, int>> cells;
  for (const auto& cell : j.at("crossings")) cells.emplace_back(cell.at(0).get<int>(), cell.at(1).get<int>());
  return PipeDream::from_crossings(j.at("n").get<int>(), cells);
}

inline Json sem_expansion_to_json(const SemExpansion& e) {
  Json terms = Json::array();
  for (const auto& [a, c] : e.terms) terms.push_back(Json{{"a", a.a}, {"coeff", c.str()}});
  return Json{{"n", e.n}, {"degree", e.degree}, {"terms", std::move(terms)}};
}

inline SemExpansion sem_expansion_from_json(const Json& j) {
  SemExpansion e;
  e.n = j.at("n").get<int>();
  e.degree = j.at("degree").get<int>();
  for (const auto& term : j.at("terms"))
    e.terms.emplace(SemVector(term.at("a").get<std::vector<int>>()),
                    BigInt(term.at("coeff").get<std::string>()));
  return e;
}

inline Json schubert_expansion_to_json(const SchubertExpansion& e) {
  Json terms = Json::array();
  for (const auto& [w, c] : e.terms) terms.push_back(Json{{"w", w.word()}, {"coeff", c.str()}});
  return Json{{"n", e.n}, {"terms", std::move(terms)}};
}

inline SchubertExpansion schubert_expansion_from_json(const Json& j) {
  SchubertExpansion e;
  e.n = j.at("n").get<int>();
  for (const auto& term : j.at("terms"))
    e.terms.emplace(perm_from_json(term.at("w")), BigInt(term.at("coeff").get<std::string>()));
  return e;
}

inline void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << j.dump(2) << '\n';
  if (!out) throw std::runtime_error("write failed: " + path);
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  return Json::parse(in);
}

// FNV-1a, 64-bit; cheap integrity check for the polynomial cache.
inline std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char byte : data) {
    h ^= byte;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace schub
