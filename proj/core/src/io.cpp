// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cfgpoly/io.hpp"

#include <string>

#include "cfgpoly/error.hpp"

namespace cfgpoly::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(Errc::kInvalidInput, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) bad(std::string("expected an object with field '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field '") + key + "'");
  return *it;
}

std::vector<std::string> strings(const Json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& s : j) {
    if (!s.is_string()) bad(std::string(what) + " must be an array of strings");
    out.push_back(s.get<std::string>());
  }
  return out;
}

Json index_list(const std::vector<std::size_t>& v, const std::vector<std::string>& labels) {
  Json out = Json::array();
  for (std::size_t i : v) out.push_back(labels.at(i));
  return out;
}

}  // namespace

Json to_json(const Rat& r) { return to_string(r); }

Rat rat_from_json(const Json& j) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return parse_rat(std::to_string(j.get<long long>()));
  bad("rational must be a string \"p/q\" or an integer");
}

Json to_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (const auto& c : m.row(i)) row.push_back(to_json(c));
    rows.push_back(std::move(row));
  }
  return rows;
}

RatMatrix matrix_from_json(const Json& j, std::size_t cols) {
  if (!j.is_array()) bad("matrix must be an array of rows");
  std::vector<std::vector<Rat>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) bad("matrix rows must be arrays");
    std::vector<Rat> r;
    for (const auto& c : row) r.push_back(rat_from_json(c));
    if (!rows.empty() && r.size() != rows.front().size()) bad("matrix rows differ in length");
    rows.push_back(std::move(r));
  }
  return RatMatrix::stack(rows, rows.empty() ? cols : rows.front().size());
}

Json to_json(const VarSet& v) { return v.names(); }

VarSet varset_from_json(const Json& j) {
  auto names = strings(j, "vars");
  for (std::size_t a = 0; a < names.size(); ++a)
    for (std::size_t b = a + 1; b < names.size(); ++b)
      if (names[a] == names[b]) bad("duplicate variable '" + names[a] + "'");
  return VarSet(std::move(names));
}

Json to_json(const Poly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    terms.push_back({{"coeff", to_json(c)}, {"exps", e}});
  }
  return {{"vars", to_json(p.vars())}, {"terms", std::move(terms)}, {"text", to_string(p)}};
}

Poly poly_from_json(const Json& j) {
  const VarSet vars = varset_from_json(field(j, "vars"));
  Poly p(vars);
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) bad("terms must be an array");
  for (const auto& t : terms) {
    const Json& ex = field(t, "exps");
    if (!ex.is_array() || ex.size() != vars.size()) bad("exponent vector length must match vars");
    Exponents e;
    for (const auto& x : ex) {
      if (!x.is_number_unsigned() && !(x.is_number_integer() && x.get<long long>() >= 0)) {
        bad("exponents must be non-negative integers");
      }
      e.push_back(x.get<std::uint32_t>());
    }
    p.add_term(e, rat_from_json(field(t, "coeff")));
  }
  return p;
}

Json to_json(const LinearForm& f) { return to_json(f.to_poly()); }

Json to_json(const Configuration& w) {
  return {{"ground_set", w.ground_set()}, {"rows", to_json(w.basis())}};
}

Configuration config_from_json(const Json& j) {
  auto labels = strings(field(j, "ground_set"), "ground_set");
  const RatMatrix rows = matrix_from_json(field(j, "rows"), labels.size());
  return Configuration(std::move(labels), rows);
}

Json to_json(const GraphSpec& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges) edges.push_back({u, v});
  Json out{{"vertices", g.vertices}, {"edges", std::move(edges)}};
  if (!g.edge_labels.empty()) out["edge_labels"] = g.edge_labels;
  return out;
}

GraphSpec graph_from_json(const Json& j) {
  GraphSpec g;
  g.vertices = strings(field(j, "vertices"), "vertices");
  const Json& edges = field(j, "edges");
  if (!edges.is_array()) bad("edges must be an array");
  for (const auto& e : edges) {
    auto ends = strings(e, "edge");
    if (ends.size() != 2) bad("every edge needs exactly two endpoints");
    g.edges.emplace_back(ends[0], ends[1]);
  }
  if (j.contains("edge_labels")) g.edge_labels = strings(j["edge_labels"], "edge_labels");
  return g;
}

Json to_json(const ContactCert& c) {
  return {{"p", c.p},
          {"lambda", to_json(c.lambda)},
          {"ell", to_json(c.ell)},
          {"source_vars", to_json(c.source_vars)},
          {"target_vars", to_json(c.target_vars)}};
}

ContactCert cert_from_json(const Json& j) {
  const Json& pj = field(j, "p");
  if (!pj.is_number_unsigned() && !(pj.is_number_integer() && pj.get<long long>() >= 0)) {
    bad("p must be a non-negative integer");
  }
  const auto p = pj.get<std::size_t>();
  RatMatrix ell = matrix_from_json(field(j, "ell"), p);
  if (ell.rows() != p) throw Error(Errc::kDimensionMismatch, "ell must have p rows");
  return make_cert(std::move(ell), rat_from_json(field(j, "lambda")),
                   varset_from_json(field(j, "source_vars")),
                   varset_from_json(field(j, "target_vars")));
}

Json to_json(const SymbolicForm& q) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < q.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < q.size(); ++j) {
      Json coeffs = Json::array();
      for (const auto& c : q(i, j).coeffs) coeffs.push_back(to_json(c));
      row.push_back(std::move(coeffs));
    }
    rows.push_back(std::move(row));
  }
  return {{"vars", to_json(q.vars())}, {"size", q.size()}, {"entries", std::move(rows)}};
}

SymbolicForm form_from_json(const Json& j) {
  const VarSet vars = varset_from_json(field(j, "vars"));
  const auto r = field(j, "size").get<std::size_t>();
  const Json& rows = field(j, "entries");
  if (!rows.is_array() || rows.size() != r) bad("entries must have `size` rows");
  std::vector<LinearForm> entries;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != r) bad("entries must have `size` columns");
    for (const auto& coeffs : row) {
      if (!coeffs.is_array() || coeffs.size() != vars.size()) {
        bad("each entry lists one coefficient per variable");
      }
      LinearForm f(vars);
      for (std::size_t e = 0; e < vars.size(); ++e) f.coeffs[e] = rat_from_json(coeffs[e]);
      entries.push_back(std::move(f));
    }
  }
  return SymbolicForm::from_entries(vars, r, std::move(entries));
}

Json to_json(const Ideal& i) {
  Json gens = Json::array();
  for (const auto& g : i.gens) gens.push_back(to_json(g));
  return {{"vars", to_json(i.vars)}, {"gens", std::move(gens)}};
}

Ideal ideal_from_json(const Json& j) {
  const VarSet vars = varset_from_json(field(j, "vars"));
  const Json& gens = field(j, "gens");
  if (!gens.is_array()) bad("gens must be an array");
  std::vector<Poly> out;
  for (const auto& g : gens) {
    Poly p = poly_from_json(g);
    out.push_back(p.vars() == vars ? p : lift(p, vars));
  }
  return Ideal(vars, std::move(out));
}

Json to_json(const MatroidView& m) {
  Json bases = Json::array();
  for (const auto& b : m.bases()) bases.push_back(index_list(b, m.ground_set()));
  Json comps = Json::array();
  for (const auto& c : m.components()) comps.push_back(index_list(c, m.ground_set()));
  return {{"ground_set", m.ground_set()},
          {"rank", m.rank()},
          {"bases", std::move(bases)},
          {"components", std::move(comps)},
          {"connected", is_connected(m)}};
}

Json to_json(const HadamardProfile& h) {
  Json filtration = Json::array();
  for (const auto& f : h.filtration) filtration.push_back(f);
  return {{"dims", h.dims},
          {"exponent", h.exponent},
          {"hadamard_dim", h.hadamard_dim},
          {"filtration", std::move(filtration)}};
}

Json to_json(const ReductionReport& r) {
  return {{"original", to_json(r.original)},
          {"reduced", to_json(r.reduced)},
          {"F", index_list(r.f, r.original.ground_set())},
          {"nu", r.nu},
          {"bound", r.bound},
          {"cert", to_json(r.cert)}};
}

Json to_json(const DropResult& d) {
  return {{"element", d.element},
          {"reduced", to_json(d.reduced)},
          {"cert", to_json(d.cert)}};
}

Json to_json(const ClassLabel& l) {
  Json out{{"rank", l.rank},
           {"r2", l.r2},
           {"class_id", std::string(class_name(l.id))},
           {"normal_form", to_json(l.normal_form)},
           {"cross_check_ok", l.cross_check_ok}};
  out["cert"] = l.cert ? to_json(*l.cert) : Json();
  if (l.matroid_connected) out["matroid_connected"] = *l.matroid_connected;
  if (l.matroid_uniform) out["matroid_uniform"] = *l.matroid_uniform;
  if (l.two_component_minors) out["two_component_minors"] = *l.two_component_minors;
  return out;
}

Json to_json(const Fingerprint& f) {
  return {{"degree_counts", f.degree_counts},
          {"hilbert", f.hilbert},
          {"colon_linear_dims", f.colon_linear_dims}};
}

Json to_json(const FamilyEvidence& e) {
  return {{"m", to_json(e.m)},
          {"intersection_equal", e.intersection_equal},
          {"first_component_recovered", e.first_component_recovered},
          {"linear_form", to_json(e.linear_form.to_poly())},
          {"linear_shape_ok", e.linear_shape_ok},
          {"recovered_m", to_json(e.recovered_m)},
          {"invariant", {to_json(e.invariant.first), to_json(e.invariant.second)}}};
}

Json to_json(const FamilyEvidenceReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) entries.push_back(to_json(e));
  return {{"entries", std::move(entries)},
          {"invariants_separate", r.invariants_separate},
          {"all_ok", r.all_ok}};
}

}  // namespace cfgpoly::io
