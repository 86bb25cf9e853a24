#ifndef BOHR_IO_HPP
#define BOHR_IO_HPP

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bohr/gelfand.hpp"
#include "bohr/kochen_specker.hpp"
#include "bohr/sigma.hpp"
#include "bohr/states.hpp"

// JSON encodings of the library's values. Every decoder throws ParseError on
// structural problems and lets DomainError through for mathematical ones.
namespace bohr::io {

using nlohmann::json;

inline json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
}

inline const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

inline std::size_t to_index(const json& j) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    throw ParseError("expected a nonnegative integer");
  return j.get<std::size_t>();
}

// Rationals: "p/q" strings or JSON integers.
inline Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ParseError("expected a rational (string \"p/q\" or integer)");
}

inline json rational_to_json(const Rational& q) { return to_string(q); }

// Complex scalars: [re, im] pairs, or a bare rational for a real value.
inline GaussianRational scalar_from_json(const json& j) {
  if (j.is_array()) {
    if (j.size() != 2) throw ParseError("complex entry must be a [re, im] pair");
    return {rational_from_json(j[0]), rational_from_json(j[1])};
  }
  return rational_from_json(j);
}

inline json scalar_to_json(const GaussianRational& z) { return json::array({to_string(z.re()), to_string(z.im())}); }

inline CMatrix matrix_from_json(const json& j) {
  const std::size_t rows = to_index(field(j, "rows"));
  const std::size_t cols = to_index(field(j, "cols"));
  const json& entries = field(j, "entries");
  if (!entries.is_array() || entries.size() != rows * cols) throw ParseError("matrix entry count does not match rows × cols");
  std::vector<GaussianRational> e;
  for (const auto& z : entries) e.push_back(scalar_from_json(z));
  if (rows == 0 || cols == 0) throw ParseError("matrix dimensions must be positive");
  return CMatrix(rows, cols, std::move(e));
}

inline json matrix_to_json(const CMatrix& m) {
  json entries = json::array();
  for (const auto& z : m.entries()) entries.push_back(scalar_to_json(z));
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

/// {"n": 3, "atoms": [...]} or {"n": 3, "generators": [...]}.
inline Context context_from_json(const json& j) {
  const std::size_t n = to_index(field(j, "n"));
  if (n == 0) throw ParseError("context dimension must be positive");
  auto matrices = [&](const char* key) {
    std::vector<CMatrix> out;
    const json& arr = field(j, key);
    if (!arr.is_array()) throw ParseError(std::string("'") + key + "' must be an array");
    for (const auto& m : arr) {
      out.push_back(matrix_from_json(m));
      if (out.back().rows() != n || out.back().cols() != n) throw ParseError("matrix does not match context dimension");
    }
    return out;
  };
  if (j.contains("atoms")) return Context::from_atoms(matrices("atoms"));
  if (j.contains("generators")) {
    const auto gens = matrices("generators");
    return context_from_commuting(gens, n);
  }
  throw ParseError("context needs 'atoms' or 'generators'");
}

inline json context_to_json(const Context& c) {
  json atoms = json::array();
  for (const auto& a : c.atoms()) atoms.push_back(matrix_to_json(a));
  return {{"n", c.dim()}, {"atoms", std::move(atoms)}};
}

/// A list of contexts: a bare array, or an object with "seeds"/"contexts".
inline std::vector<Context> contexts_from_json(const json& j) {
  const json* arr = &j;
  if (j.is_object()) arr = j.contains("seeds") ? &j.at("seeds") : &field(j, "contexts");
  if (!arr->is_array()) throw ParseError("expected an array of contexts");
  std::vector<Context> out;
  for (const auto& c : *arr) out.push_back(context_from_json(c));
  return out;
}

/// Refinement keys are "i,j" for every related pair with i ≠ j.
inline json poset_to_json(const ContextPoset& p) {
  json contexts = json::array();
  for (const auto& c : p.contexts()) contexts.push_back(context_to_json(c));
  json leq = json::array();
  json refinement = json::object();
  for (std::size_t i = 0; i < p.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < p.size(); ++j) {
      row.push_back(p.leq(i, j) ? 1 : 0);
      if (i != j && p.leq(i, j)) refinement[std::to_string(i) + "," + std::to_string(j)] = p.refinement(i, j);
    }
    leq.push_back(std::move(row));
  }
  return {{"n", p.dim()}, {"contexts", std::move(contexts)}, {"leq", std::move(leq)}, {"refinement", std::move(refinement)}};
}

/// Keeps the file's context order. A present "leq" must agree with the
/// recomputed order.
inline ContextPoset poset_from_json(const json& j) {
  auto p = ContextPoset::from_contexts(contexts_from_json(j));
  if (j.is_object() && j.contains("leq")) {
    const json& leq = j.at("leq");
    if (!leq.is_array() || leq.size() != p.size()) throw ParseError("'leq' has the wrong size");
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (!leq[i].is_array() || leq[i].size() != p.size()) throw ParseError("'leq' has the wrong size");
      for (std::size_t j2 = 0; j2 < p.size(); ++j2)
        if ((to_index(leq[i][j2]) != 0) != p.leq(i, j2)) throw ParseError("'leq' disagrees with the contexts");
    }
  }
  return p;
}

/// {"poset": <label or inline poset>, "assignment": {"<idx>": [atoms]}}.
/// Contexts missing from the assignment get the zero projection.
inline SigmaOpen sigma_from_json(const json& j, const PosetPtr& poset) {
  const json& assignment = field(j, "assignment");
  if (!assignment.is_object()) throw ParseError("'assignment' must be an object");
  std::vector<std::uint64_t> masks(poset->size(), 0);
  for (const auto& [key, atoms] : assignment.items()) {
    std::size_t c = 0;
    try {
      std::size_t used = 0;
      c = std::stoul(key, &used);
      if (used != key.size()) throw ParseError("bad context index '" + key + "'");
    } catch (const std::logic_error&) {
      throw ParseError("bad context index '" + key + "'");
    }
    if (c >= poset->size()) throw DomainError("assignment names context " + key + " outside the poset");
    if (!atoms.is_array()) throw ParseError("atom list must be an array");
    for (const auto& a : atoms) {
      const std::size_t idx = to_index(a);
      if (idx >= poset->context(c).size()) throw DomainError("atom index out of range at context " + key);
      masks[c] |= std::uint64_t{1} << idx;
    }
  }
  return SigmaOpen(poset, std::move(masks));
}

inline json sigma_to_json(const SigmaOpen& s, const json& poset_ref) {
  json assignment = json::object();
  for (std::size_t c = 0; c < s.masks().size(); ++c) {
    json atoms = json::array();
    for (std::size_t a = 0; a < 64; ++a)
      if (s.mask(c) >> a & 1U) atoms.push_back(a);
    assignment[std::to_string(c)] = std::move(atoms);
  }
  return {{"poset", poset_ref}, {"assignment", std::move(assignment)}};
}

inline State state_from_json(const json& j) { return State(matrix_from_json(field(j, "rho"))); }
inline json state_to_json(const State& s) { return {{"rho", matrix_to_json(s.rho())}}; }

// Endpoints: rationals, "-inf", "inf".
inline RationalOpen open_from_json(const json& j) {
  const json& ivs = field(j, "intervals");
  if (!ivs.is_array()) throw ParseError("'intervals' must be an array");
  std::vector<RationalOpen::Interval> out;
  for (const auto& iv : ivs) {
    if (!iv.is_array() || iv.size() != 2) throw ParseError("interval must be a [low, high] pair");
    auto endpoint = [](const json& e, const char* infinite) -> std::optional<Rational> {
      if (e.is_string() && e.get<std::string>() == infinite) return std::nullopt;
      return rational_from_json(e);
    };
    out.push_back({endpoint(iv[0], "-inf"), endpoint(iv[1], "inf")});
  }
  return RationalOpen(std::move(out));
}

inline json open_to_json(const RationalOpen& u) {
  json ivs = json::array();
  for (const auto& iv : u.intervals())
    ivs.push_back(json::array({iv.low ? to_string(*iv.low) : "-inf", iv.high ? to_string(*iv.high) : "inf"}));
  return {{"intervals", std::move(ivs)}};
}

inline RaySet rayset_from_json(const json& j) {
  const std::size_t dim = to_index(field(j, "dim"));
  std::vector<Ray> rays;
  for (const auto& r : field(j, "rays")) {
    if (!r.is_array()) throw ParseError("ray must be an array");
    Ray ray;
    for (const auto& z : r) ray.push_back(scalar_from_json(z));
    rays.push_back(std::move(ray));
  }
  std::vector<std::vector<std::size_t>> bases;
  for (const auto& b : field(j, "bases")) {
    if (!b.is_array()) throw ParseError("basis must be an array");
    std::vector<std::size_t> basis;
    for (const auto& i : b) basis.push_back(to_index(i));
    bases.push_back(std::move(basis));
  }
  return RaySet(dim, std::move(rays), std::move(bases));
}

inline json rayset_to_json(const RaySet& rs) {
  json rays = json::array();
  for (const auto& r : rs.rays()) {
    json ray = json::array();
    for (const auto& z : r) ray.push_back(z.is_real() ? json(to_string(z.re())) : scalar_to_json(z));
    rays.push_back(std::move(ray));
  }
  return {{"dim", rs.dim()}, {"rays", std::move(rays)}, {"bases", rs.bases()}};
}

}  // namespace bohr::io

#endif  // BOHR_IO_HPP
