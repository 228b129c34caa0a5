#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "symdet/coset_matrix.hpp"
#include "symdet/cosets.hpp"
#include "symdet/errors.hpp"
#include "symdet/group.hpp"
#include "symdet/rational.hpp"
#include "symdet/slope.hpp"
#include "symdet/spectral.hpp"

namespace symdet {

// Insertion-ordered JSON so report keys come out in the documented order and
// serialization is byte-deterministic.
using Json = nlohmann::ordered_json;

inline Json parse_json_text(const std::string& text) {
  Json j = Json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw input_error("malformed JSON: " + text);
  return j;
}

// ---- scalars ---------------------------------------------------------------

// Rationals travel as strings "p/q" (or plain "p"); integer JSON numbers are
// also accepted on input for convenience.
inline Rat rat_from_json(const Json& j) {
  if (j.is_string()) return rat_from_string(j.get<std::string>());
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<std::int64_t>()));
  throw input_error("expected a rational as a string \"p/q\" or an integer, got " +
                    j.dump());
}

inline Json rat_to_json(const Rat& q) { return Json(rat_to_string(q)); }

inline Json mpz_to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return Json(static_cast<std::int64_t>(z.get_si()));
  return Json(z.get_str());
}

namespace detail {

inline std::int64_t checked_integer(const Json& j, const std::string& what) {
  if (!j.is_number_integer())
    throw input_error(what + " must be an integer, got " + j.dump());
  return j.get<std::int64_t>();
}

inline std::uint32_t positive_u32(const Json& j, const std::string& what) {
  const std::int64_t v = checked_integer(j, what);
  if (v <= 0 || v > 0xFFFFFFFFLL)
    throw input_error(what + " out of range: " + j.dump());
  return static_cast<std::uint32_t>(v);
}

inline std::vector<std::uint32_t> index_list(const Json& j,
                                             const std::string& what) {
  if (!j.is_array()) throw input_error(what + " must be an array of indices");
  std::vector<std::uint32_t> out;
  out.reserve(j.size());
  for (const auto& entry : j) {
    const std::int64_t v = checked_integer(entry, what + " entry");
    if (v < 0 || v > 0xFFFFFFFFLL)
      throw input_error(what + " entry out of range: " + entry.dump());
    out.push_back(static_cast<std::uint32_t>(v));
  }
  return out;
}

inline std::vector<std::vector<std::uint32_t>> index_rows(
    const Json& j, const std::string& what) {
  if (!j.is_array()) throw input_error(what + " must be an array of arrays");
  std::vector<std::vector<std::uint32_t>> out;
  out.reserve(j.size());
  for (const auto& row : j) out.push_back(index_list(row, what + " row"));
  return out;
}

}  // namespace detail

// ---- group and subgroup specs ----------------------------------------------

inline GroupSpec group_spec_from_json(const Json& j) {
  if (!j.is_object()) throw input_error("group spec must be a JSON object");
  if (!j.contains("family") || !j.at("family").is_string())
    throw input_error("group spec needs a string \"family\"");
  const std::string family = j.at("family").get<std::string>();
  GroupSpec spec;
  if (family == "cyclic") {
    spec.family = GroupSpec::Family::Cyclic;
    if (!j.contains("n")) throw input_error("cyclic spec needs \"n\"");
    spec.n = detail::positive_u32(j.at("n"), "cyclic order \"n\"");
  } else if (family == "dihedral") {
    spec.family = GroupSpec::Family::Dihedral;
    if (!j.contains("n")) throw input_error("dihedral spec needs \"n\"");
    spec.n = detail::positive_u32(j.at("n"), "dihedral rotation order \"n\"");
  } else if (family == "quaternion") {
    spec.family = GroupSpec::Family::Quaternion;
  } else if (family == "psl2") {
    spec.family = GroupSpec::Family::Psl2;
    if (!j.contains("p")) throw input_error("psl2 spec needs \"p\"");
    spec.p = detail::positive_u32(j.at("p"), "psl2 prime \"p\"");
  } else if (family == "direct_sum") {
    spec.family = GroupSpec::Family::DirectSum;
    if (!j.contains("summands") || !j.at("summands").is_array() ||
        j.at("summands").empty())
      throw input_error("direct_sum spec needs a non-empty \"summands\" array");
    for (const auto& s : j.at("summands"))
      spec.summands.push_back(group_spec_from_json(s));
  } else if (family == "table") {
    spec.family = GroupSpec::Family::Table;
    if (!j.contains("table"))
      throw input_error("table spec needs a \"table\" array of rows");
    spec.table = detail::index_rows(j.at("table"), "multiplication table");
    if (j.contains("labels")) {
      if (!j.at("labels").is_array())
        throw input_error("\"labels\" must be an array of strings");
      for (const auto& l : j.at("labels")) {
        if (!l.is_string()) throw input_error("\"labels\" must hold strings");
        spec.labels.push_back(l.get<std::string>());
      }
    }
  } else if (family == "perm") {
    spec.family = GroupSpec::Family::Perm;
    if (!j.contains("generators"))
      throw input_error("perm spec needs \"generators\" (one-line images)");
    spec.generators =
        detail::index_rows(j.at("generators"), "permutation generators");
  } else {
    throw input_error("unknown group family: " + family);
  }
  return spec;
}

inline Json group_spec_to_json(const GroupSpec& spec) {
  Json j;
  switch (spec.family) {
    case GroupSpec::Family::Cyclic:
      j["family"] = "cyclic";
      j["n"] = spec.n;
      break;
    case GroupSpec::Family::Dihedral:
      j["family"] = "dihedral";
      j["n"] = spec.n;
      break;
    case GroupSpec::Family::Quaternion:
      j["family"] = "quaternion";
      break;
    case GroupSpec::Family::Psl2:
      j["family"] = "psl2";
      j["p"] = spec.p;
      break;
    case GroupSpec::Family::DirectSum: {
      j["family"] = "direct_sum";
      Json arr = Json::array();
      for (const auto& s : spec.summands) arr.push_back(group_spec_to_json(s));
      j["summands"] = std::move(arr);
      break;
    }
    case GroupSpec::Family::Table:
      j["family"] = "table";
      j["table"] = spec.table;
      if (!spec.labels.empty()) j["labels"] = spec.labels;
      break;
    case GroupSpec::Family::Perm:
      j["family"] = "perm";
      j["generators"] = spec.generators;
      break;
  }
  return j;
}

// {"generators": [indices]} (empty list = trivial subgroup) or
// {"members": [indices]} (must already be closed).
inline Subgroup subgroup_from_json(const FiniteGroup& g, const Json& j) {
  if (!j.is_object()) throw input_error("subgroup spec must be a JSON object");
  const bool has_gens = j.contains("generators");
  const bool has_members = j.contains("members");
  if (has_gens == has_members)
    throw input_error(
        "subgroup spec needs exactly one of \"generators\" or \"members\"");
  std::vector<std::uint32_t> idx = detail::index_list(
      j.at(has_gens ? "generators" : "members"), "subgroup element list");
  for (auto v : idx)
    if (v >= g.order())
      throw input_error("subgroup element index out of range: " +
                        std::to_string(v));
  if (has_gens) return subgroup_closure(g, std::move(idx), /*allow_empty=*/true);
  return subgroup_from_members(g, std::move(idx));
}

inline Json subgroup_to_json(const Subgroup& h) {
  return Json{{"members", h.members}};
}

// ---- legends and matrices --------------------------------------------------

// Legend rows pair each variable name with the labels of the group elements in
// its class, ascending by element index.
inline Json legend_to_json(const VariableLegend& legend, const FiniteGroup& g) {
  Json classes = Json::array();
  for (std::size_t i = 0; i < legend.names.size(); ++i) {
    std::vector<std::string> labels;
    labels.reserve(legend.members[i].size());
    for (auto e : legend.members[i]) labels.push_back(g.label(e));
    classes.push_back(Json{{"name", legend.names[i]}, {"elements", labels}});
  }
  return Json{{"names", legend.names}, {"classes", std::move(classes)}};
}

inline Json poly_matrix_to_json(const PolyMatrix& m,
                                const std::vector<std::string>& names) {
  Json rows = Json::array();
  for (std::uint32_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::uint32_t j = 0; j < m.cols(); ++j)
      row.push_back(canonical_string(m.at(i, j), names));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline RatMatrix rat_matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty())
    throw input_error("matrix must be a non-empty array of rows");
  const auto rows = static_cast<std::uint32_t>(j.size());
  const Json& first = j.at(0);
  if (!first.is_array() || first.empty())
    throw input_error("matrix rows must be non-empty arrays");
  const auto cols = static_cast<std::uint32_t>(first.size());
  RatMatrix m(rows, cols, Rat(0));
  for (std::uint32_t i = 0; i < rows; ++i) {
    const Json& row = j.at(i);
    if (!row.is_array() || row.size() != cols)
      throw input_error("matrix rows differ in length");
    for (std::uint32_t c = 0; c < cols; ++c) m.at(i, c) = rat_from_json(row.at(c));
  }
  return m;
}

inline Json rat_matrix_to_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (std::uint32_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::uint32_t j = 0; j < m.cols(); ++j) row.push_back(rat_to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

// ---- filling specs ----------------------------------------------------------

struct ParsedFillingSpec {
  FillingSpec spec;
  SymCosetSystem system;  // legend retained so reports stay self-describing
};

// {"group": GroupSpec, "subgroup": {...}, "values": {"a": "0", "b": "1", ...}}
// The value object must assign every class letter of the legend, no extras.
inline ParsedFillingSpec filling_spec_from_json(const Json& j) {
  if (!j.is_object()) throw input_error("filling spec must be a JSON object");
  if (!j.contains("group")) throw input_error("filling spec needs \"group\"");
  if (!j.contains("subgroup")) throw input_error("filling spec needs \"subgroup\"");
  if (!j.contains("values") || !j.at("values").is_object())
    throw input_error("filling spec needs a \"values\" object");
  FiniteGroup g = build_group(group_spec_from_json(j.at("group")));
  Subgroup h = subgroup_from_json(g, j.at("subgroup"));
  SymCosetSystem sys = sym_coset_matrix(g, h);
  const Json& vals = j.at("values");
  for (const auto& item : vals.items()) {
    bool known = false;
    for (const auto& name : sys.legend.names) known = known || name == item.key();
    if (!known)
      throw input_error("value assigned to unknown class \"" + item.key() + "\"");
  }
  std::vector<Rat> values;
  values.reserve(sys.legend.names.size());
  for (const auto& name : sys.legend.names) {
    if (!vals.contains(name))
      throw input_error("missing class value \"" + name + "\"");
    values.push_back(rat_from_json(vals.at(name)));
  }
  FillingSpec spec{std::move(g), std::move(h), std::move(values)};
  return {std::move(spec), std::move(sys)};
}

// ---- reports ----------------------------------------------------------------

inline Json slope_rank_to_json(const SlopeRank& s) {
  return Json{{"m", mpz_to_json(s.slope.m)},
              {"n", mpz_to_json(s.slope.n)},
              {"fillrank", s.dim}};
}

inline Json fill_rank_report_to_json(const FillRankReport& r) {
  Json slopes = Json::array();
  for (const auto& s : r.slopes) slopes.push_back(slope_rank_to_json(s));
  return Json{{"slopes", std::move(slopes)},
              {"k", r.k},
              {"residual_degrees", r.residual_degrees},
              {"slope_bound", r.slope_bound},
              {"complete", r.complete}};
}

inline Json slope_scan_to_json(const SlopeScan& s) {
  Json slopes = Json::array();
  for (const auto& entry : s.slopes) slopes.push_back(slope_rank_to_json(entry));
  return Json{{"slopes", std::move(slopes)},
              {"residual_degrees", s.residual_degrees},
              {"complete", s.complete}};
}

inline Json spectrum_to_json(const Spectrum& s) {
  Json eigs = Json::array();
  for (const auto& e : s.eigenvalues)
    eigs.push_back(Json{{"value", rat_to_json(e.value)},
                        {"algebraic_multiplicity", e.algebraic_multiplicity},
                        {"eigenspace_dim", e.eigenspace_dim}});
  return Json{{"eigenvalues", std::move(eigs)},
              {"residual_degrees", s.residual_degrees},
              {"complete", s.complete}};
}

inline Json verification_to_json(const Verification& v) {
  return Json{{"kind", v.kind == VerificationKind::Symbolic ? "symbolic"
                                                            : "probabilistic"},
              {"failure_bound", rat_to_json(v.failure_bound)}};
}

inline Json eigenform_to_json(const LinearEigenform& f,
                              const std::vector<std::string>& names) {
  return Json{{"form", canonical_string(f.form(), names)},
              {"multiplicity", f.multiplicity},
              {"verification", verification_to_json(f.verification)}};
}

inline Json eigenforms_to_json(const std::vector<LinearEigenform>& forms,
                               const std::vector<std::string>& names) {
  Json arr = Json::array();
  for (const auto& f : forms) arr.push_back(eigenform_to_json(f, names));
  return arr;
}

inline Json boundary_identity_report_to_json(
    const BoundaryIdentityReport& r, const std::vector<std::string>& names) {
  Json j{{"invariance_ok", r.invariance_ok},
         {"symmetry_ok", r.symmetry_ok},
         {"inversion_ok", r.inversion_ok}};
  if (r.invariance_witness) {
    const auto& w = *r.invariance_witness;
    j["invariance_witness"] = Json{{"g", w[0]}, {"i", w[1]}, {"j", w[2]}};
  }
  if (r.symmetry_witness) {
    const auto& w = *r.symmetry_witness;
    j["symmetry_witness"] = Json{{"i", w[0]}, {"j", w[1]}};
  }
  if (r.inversion_witness) j["inversion_witness"] = *r.inversion_witness;
  if (r.recovered) {
    Json vals;
    for (std::size_t i = 0; i < r.recovered->size(); ++i)
      vals[names[i]] = rat_to_json((*r.recovered)[i]);
    j["recovered"] = std::move(vals);
  }
  return j;
}

}  // namespace symdet
