#pragma once

// File formats and reports: .mod.json modules, module expressions such as
// "P(2)+I(2)+2*S(3)", ideal files, and JSON serialization of results.
//
// .mod.json:
//   { "algebra": "alg_b.qa", "dim": [0,1,1],
//     "arrows": { "a": [[0]], "b": [[1]] } }
// Matrices are row-major lists of rows; entries are integers or strings
// such as "-2/3". Arrows with a zero-sized matrix may be omitted.

#include "taureg/ar.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace taureg {

using Json = nlohmann::ordered_json;

std::string read_text_file(const std::string& path);

/// Directory part of a path ("" for a bare file name).
std::string parent_directory(const std::string& path);

Rational json_rational(const Json& v);

struct ModuleTerm {
  char kind = 'P';  ///< 'P', 'I' or 'S'
  std::string vertex;
  int multiplicity = 1;
};

/// "P(2)+I(2)+S(3)", "2*P(2)", "0". Throws std::invalid_argument.
std::vector<ModuleTerm> parse_module_expression(std::string_view text);

/// Generators of a two-sided ideal, one combination per line ('#' comments).
std::vector<RelationPoly> parse_ideal_file(const Quiver& q, std::string_view text);

template <typename Scalar>
Representation<Scalar> module_from_expression(const AlgebraPtr<Scalar>& a, std::string_view text) {
  std::vector<Representation<Scalar>> parts;
  for (const auto& t : parse_module_expression(text)) {
    const auto v = a->quiver().vertex_index(t.vertex);
    if (!v) throw std::invalid_argument("unknown vertex '" + t.vertex + "' in module expression");
    Representation<Scalar> m = t.kind == 'P' ? projective(a, *v) : t.kind == 'I' ? injective(a, *v) : simple(a, *v);
    for (int k = 0; k < t.multiplicity; ++k) parts.push_back(m);
  }
  if (parts.empty()) return zero_module(a);
  return direct_sum(parts);
}

template <typename Scalar>
Representation<Scalar> module_from_json(const AlgebraPtr<Scalar>& a, const Json& j) {
  const auto& q = a->quiver();
  if (!j.contains("dim") || !j["dim"].is_array()) throw std::invalid_argument("module file: missing \"dim\"");
  std::vector<int> dims = j["dim"].get<std::vector<int>>();
  if (static_cast<int>(dims.size()) != q.num_vertices())
    throw std::invalid_argument("module file: \"dim\" has " + std::to_string(dims.size()) + " entries, expected " +
                                std::to_string(q.num_vertices()));
  for (int d : dims)
    if (d < 0) throw std::invalid_argument("module file: negative dimension");
  std::vector<Matrix<Scalar>> maps;
  for (const auto& ar : q.arrows) maps.push_back(zeros<Scalar>(dims[ar.target], dims[ar.source]));
  if (j.contains("arrows")) {
    for (const auto& [name, rows] : j["arrows"].items()) {
      const auto idx = q.arrow_index(name);
      if (!idx) throw std::invalid_argument("module file: unknown arrow '" + name + "'");
      Matrix<Scalar>& m = maps[static_cast<std::size_t>(*idx)];
      if (!rows.is_array() || static_cast<Index>(rows.size()) != m.rows())
        throw std::invalid_argument("module file: arrow '" + name + "' needs " + std::to_string(m.rows()) + " rows");
      for (Index r = 0; r < m.rows(); ++r) {
        const auto& row = rows[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<Index>(row.size()) != m.cols())
          throw std::invalid_argument("module file: arrow '" + name + "' needs " + std::to_string(m.cols()) + " columns");
        for (Index c = 0; c < m.cols(); ++c)
          m(r, c) = FieldTraits<Scalar>::from_rational(json_rational(row[static_cast<std::size_t>(c)]));
      }
    }
  }
  return make_representation(a, std::move(dims), std::move(maps));
}

template <typename Scalar>
Json matrix_json(const Matrix<Scalar>& m) {
  Json rows = Json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Index c = 0; c < m.cols(); ++c) {
      const std::string s = FieldTraits<Scalar>::to_string(m(r, c));
      if (s.find('/') == std::string::npos && s.size() < 16) row.push_back(std::stoll(s));
      else row.push_back(s);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

template <typename Scalar>
Json module_to_json(const Representation<Scalar>& m, const std::string& algebra_path) {
  Json j;
  j["algebra"] = algebra_path;
  j["dim"] = m.dims();
  Json arrows = Json::object();
  const auto& q = m.algebra()->quiver();
  for (int a = 0; a < q.num_arrows(); ++a) arrows[q.arrows[static_cast<std::size_t>(a)].name] = matrix_json(m.arrow_map(a));
  j["arrows"] = std::move(arrows);
  return j;
}

template <typename Scalar>
Ideal<Scalar> ideal_from_generators(const AlgebraPtr<Scalar>& a, const std::vector<RelationPoly>& gens) {
  std::vector<Vector<Scalar>> v;
  for (const auto& g : gens) v.push_back(a->element(g));
  return generate_ideal(*a, v);
}

/// Basis elements of an ideal written as path combinations.
template <typename Scalar>
std::vector<std::string> ideal_strings(const Algebra<Scalar>& a, const Ideal<Scalar>& ideal) {
  std::vector<std::string> out;
  for (Index c = 0; c < ideal.dim(); ++c) {
    std::string s;
    for (int k = 0; k < a.dim(); ++k) {
      const Scalar& x = ideal.span(k, c);
      if (is_zero(x)) continue;
      const std::string coeff = FieldTraits<Scalar>::to_string(x);
      if (!s.empty()) s += " + ";
      if (coeff != "1") s += coeff + " ";
      s += path_string(a.quiver(), a.basis_path(k));
    }
    out.push_back(s);
  }
  return out;
}

inline Json proj_dim_json(const ProjDim& pd) {
  if (pd.kind == ProjDim::Kind::Finite) return pd.value;
  return pd.str();
}

inline Json scan_json(const RankScanReport& r) {
  Json j;
  j["r"] = r.r;
  j["certified"] = r.certified;
  j["violations"] = r.violations;
  j["seed"] = r.seed;
  j["trials"] = r.trials;
  j["t_max"] = r.t_max;
  j["certificates"] = r.certificates;
  j["upper_bounds"] = r.upper_bounds;
  j["field"] = r.field;
  return j;
}

template <typename Scalar>
Json verdict_json(const Verdict<Scalar>& v) {
  Json j;
  j["outcome"] = v.outcome_name();
  j["witness_rank"] = v.witness_rank;
  j["generic_rank"] = v.generic_rank;
  j["presentation_rank"] = v.presentation_rank;
  j["certified"] = v.certified;
  j["certificate"] = v.certificate;
  j["note"] = v.note;
  j["p1"] = v.presentation.p1.mult;
  j["p0"] = v.presentation.p0.mult;
  j["field"] = FieldTraits<Scalar>::name();
  return j;
}

template <typename Scalar>
Json hierarchy_json(const HierarchyReport<Scalar>& h) {
  Json j;
  j["projective"] = h.projective;
  j["pd_at_most_1"] = h.pd_at_most_1;
  j["rigid"] = h.rigid;
  j["tau_rigid"] = h.tau_rigid;
  j["partial_tilting"] = h.partial_tilting;
  j["tau_regular"] = h.tau_regular;
  j["proj_dim"] = proj_dim_json(h.pd);
  j["e"] = h.e;
  j["E"] = h.E;
  j["verdict"] = verdict_json(h.verdict);
  j["violations"] = h.violations;
  return j;
}

template <typename Scalar>
Json reduction_json(const Algebra<Scalar>& a, const ReductionReport<Scalar>& r) {
  const auto& b = *r.quotient.algebra;
  Json j;
  j["ideal_dim"] = r.ideal.dim();
  j["ideal"] = ideal_strings(a, r.ideal);
  j["quotient"] = {{"dim", b.dim()}, {"vertices", b.quiver().vertices}, {"arrows", Json::array()},
                   {"relations", Json::array()}};
  for (const auto& ar : b.quiver().arrows)
    j["quotient"]["arrows"].push_back(ar.name + ": " + b.quiver().vertices[static_cast<std::size_t>(ar.source)] +
                                      " -> " + b.quiver().vertices[static_cast<std::size_t>(ar.target)]);
  for (const auto& rel : b.presentation().relations) j["quotient"]["relations"].push_back(relation_string(b.quiver(), rel));
  j["dim_over_b"] = r.over_b.dims();
  j["pd_a"] = proj_dim_json(r.pd_a);
  j["pd_b"] = proj_dim_json(r.pd_b);
  j["e_a"] = r.e_a;
  j["e_b"] = r.e_b;
  j["E_a"] = r.E_a;
  j["E_b"] = r.E_b;
  j["tau_rigid_a"] = r.tau_rigid_a;
  j["tau_rigid_b"] = r.tau_rigid_b;
  j["tau_regular_a"] = verdict_json(r.regular_a);
  j["tau_regular_b"] = verdict_json(r.regular_b);
  j["e_b_le_e_a"] = r.e_shrinks;
  j["E_b_le_E_a"] = r.E_shrinks;
  return j;
}

}  // namespace taureg
