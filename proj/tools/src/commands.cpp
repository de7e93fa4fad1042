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

#include "commands.hpp"

#include <chrono>
#include <sstream>

#include "cfgpoly/error.hpp"
#include "cfgpoly/family.hpp"
#include "parallel.hpp"

namespace cfgpoly::cli {

namespace {

Json with_config(const Configuration& w, Json out) {
  out["config"] = io::to_json(w);
  return out;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

MonomialOrder parse_order(const std::string& name) {
  if (name == "grevlex") return MonomialOrder::kGrevlex;
  if (name == "eliminate-first") return MonomialOrder::kEliminateFirst;
  throw Error(Errc::kInvalidInput, "unknown monomial order '" + name + "'");
}

Poly product_of_variables(const VarSet& vars, std::size_t first, std::size_t last) {
  Poly p = Poly::constant(vars, 1);
  for (std::size_t i = first; i < last; ++i) p = p * Poly::variable(vars, i);
  return p;
}

}  // namespace

std::vector<Rat> parse_rat_list(const std::string& text) {
  std::vector<Rat> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw Error(Errc::kInvalidInput, "empty entry in list '" + text + "'");
    out.push_back(parse_rat(item));
  }
  if (out.empty()) throw Error(Errc::kInvalidInput, "empty list");
  return out;
}

Rat random_nonzero_rat(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(1, 5), den(1, 4), sign(0, 1);
  Rat r(num(rng) * (sign(rng) ? -1 : 1), den(rng));
  r.canonicalize();
  return r;
}

Json cmd_psi(const std::string& config) {
  const Configuration w = load_config(read_json(config));
  return with_config(w, {{"psi", io::to_json(psi_det(w))}});
}

Json cmd_psi_basis(const std::string& config) {
  const Configuration w = load_config(read_json(config));
  return with_config(w, {{"psi", io::to_json(psi_basis_expansion(w))}});
}

Json cmd_matroid_poly(const std::string& config) {
  const Configuration w = load_config(read_json(config));
  const MatroidView m = matroid(w);
  return {{"matroid", io::to_json(m)}, {"matroid_polynomial", io::to_json(matroid_polynomial(m))}};
}

Json cmd_kirchhoff(const std::string& graph) {
  const GraphSpec g = load_graph(read_json(graph));
  const KirchhoffResult k = kirchhoff(g);
  return {{"graph", io::to_json(g)},
          {"config", io::to_json(k.config)},
          {"psi", io::to_json(k.psi)}};
}

Json cmd_hadamard(const std::string& config, unsigned s) {
  if (s == 0) throw Error(Errc::kInvalidInput, "--s must be positive");
  const Configuration w = load_config(read_json(config));
  const Configuration h = hadamard_power(w, s);
  return {{"s", s}, {"dim", h.rank()}, {"power", io::to_json(h)}};
}

Json cmd_filtration(const std::string& config, unsigned s_max) {
  const Configuration w = load_config(read_json(config));
  return with_config(w, {{"profile", io::to_json(hadamard_dims(w, s_max))}});
}

Json cmd_reduce(const std::string& config) {
  const Configuration w = load_config(read_json(config));
  const ReductionReport r = reduce_variables(w);
  Json out = io::to_json(r);
  out["cert_verified"] = check_cert(psi_det(r.original), psi_det(r.reduced), r.cert);
  out["minimal"] = !try_drop_variable(r.reduced).has_value();
  return out;
}

Json cmd_drop_var(const std::string& config) {
  const Configuration w = load_config(read_json(config));
  const auto d = try_drop_variable(w);
  if (!d) return {{"droppable", false}};
  Json out = io::to_json(*d);
  out["droppable"] = true;
  out["label"] = w.ground_set().at(d->element);
  out["cert_verified"] = check_cert(psi_det(w), psi_det(d->reduced), d->cert);
  return out;
}

Json cmd_check_cert(const std::string& phi, const std::string& psi, const std::string& cert) {
  const Poly f = load_poly(read_json(phi));
  const Poly g = load_poly(read_json(psi));
  const ContactCert c = load_cert(read_json(cert));
  return {{"valid", check_cert(f, g, c)}};
}

Json cmd_classify(const std::string& config, bool ideal_cross_check) {
  const Configuration w = load_config(read_json(config));
  ClassifyOptions opts;
  opts.ideal_cross_check = ideal_cross_check;
  const ClassLabel label = classify(w, opts);
  Json out = io::to_json(label);
  out["cert_verified"] = label.cert && check_cert(psi_det(w), label.normal_form, *label.cert);
  return with_config(w, std::move(out));
}

Json cmd_minors_ideal(const std::string& config, const std::string& form, bool reduced) {
  if (config.empty() == form.empty()) {
    throw Error(Errc::kInvalidInput, "pass exactly one of --config and --form");
  }
  const SymbolicForm q = config.empty() ? load_form(read_json(form))
                                        : configuration_form(load_config(read_json(config)));
  const Ideal i = submaximal_minors_ideal(q);
  return io::to_json(reduced ? groebner(i) : i);
}

Json cmd_groebner(const std::string& ideal, const std::string& order, std::size_t budget) {
  const Ideal i = load_ideal(read_json(ideal));
  GroebnerOptions opts;
  opts.order = parse_order(order);
  opts.pair_budget = budget;
  GroebnerStats stats;
  const auto basis = groebner_basis(i.gens, opts, &stats);
  return {{"order", order},
          {"ideal", io::to_json(Ideal(i.vars, basis))},
          {"verified", verify_groebner(basis, opts.order)},
          {"stats", {{"pairs_reduced", stats.pairs_reduced},
                     {"zero_reductions", stats.zero_reductions}}}};
}

Json cmd_ideal_eq(const std::string& a, const std::string& b) {
  const Ideal i = load_ideal(read_json(a));
  const Ideal j = load_ideal(read_json(b));
  return {{"equal", ideal_equal(i, j)}, {"a_in_b", contains(j, i)}, {"b_in_a", contains(i, j)}};
}

Json cmd_ideal_intersect(const std::string& a, const std::string& b) {
  return io::to_json(intersect(load_ideal(read_json(a)), load_ideal(read_json(b))));
}

Json cmd_family_psi_m(const std::string& m) {
  const Rat mm = parse_rat(m);
  const SymbolicForm q = q_m(mm);
  return {{"m", io::to_json(mm)}, {"form", io::to_json(q)}, {"psi", io::to_json(psi_m(mm))}};
}

FamilyCheck family_checks(const Rat& m, std::uint64_t seed, std::size_t tuples,
                          std::size_t max_k) {
  FamilyCheck out{m, Json::object(), {}};
  std::mt19937_64 rng(seed ^ fnv1a(to_string(m)));
  const Poly target = psi_m(m);

  std::size_t verified = 0;
  for (std::size_t t = 0; t < tuples; ++t) {
    FamilyParams p;
    p.b1 = random_nonzero_rat(rng);
    p.a1 = m * p.b1;
    p.a2 = random_nonzero_rat(rng);
    p.b2 = random_nonzero_rat(rng);
    if (check_cert(psi_det(family_config(p)), target, lemma54_cert(p))) ++verified;
  }
  out.checks["parameter_certs"] = {
      {"pass", verified == tuples}, {"tuples", tuples}, {"verified", verified}};

  out.evidence = family_evidence(m);
  const FamilyEvidence& e = out.evidence;
  out.checks["decomposition"] = {{"pass", e.intersection_equal}};

  const Rat inv = Rat(1) / m;
  out.checks["inversion"] = {{"pass", check_cert(target, psi_m(inv), inversion_cert(m))},
                             {"target_m", io::to_json(inv)}};

  out.checks["recovery"] = {
      {"pass", e.first_component_recovered && e.linear_shape_ok && e.recovered_m == m},
      {"first_component_recovered", e.first_component_recovered},
      {"linear_form", io::to_json(e.linear_form)},
      {"linear_shape_ok", e.linear_shape_ok},
      {"recovered_m", io::to_json(e.recovered_m)},
      {"invariant", {io::to_json(e.invariant.first), io::to_json(e.invariant.second)}}};

  Json tower = Json::array();
  bool tower_ok = true;
  for (std::size_t k = 1; k <= max_k; ++k) {
    const Configuration w = coloop_tower(m, k);
    const Poly psi = psi_det(w);
    const Poly base = lift(psi_det(family_config({m, 1, 1, 1})), psi.vars());
    const bool remark = psi == base * product_of_variables(psi.vars(), 6, 6 + k);
    const Poly nf = psi_m_k(m, k);
    const bool product = nf == lift(target, nf.vars()) * product_of_variables(nf.vars(), 6, 6 + k);
    const bool cert = check_cert(psi, nf, tower_cert(m, k));
    tower_ok = tower_ok && remark && product && cert;
    tower.push_back({{"k", k}, {"coloop_product", remark}, {"normal_form_product", product},
                     {"cert", cert}});
  }
  out.checks["tower"] = {{"pass", tower_ok}, {"levels", std::move(tower)}};
  return out;
}

Json cmd_family_verify(const std::string& m_list, unsigned jobs, std::uint64_t seed,
                       bool timings) {
  std::vector<Rat> ms = parse_rat_list(m_list);
  std::sort(ms.begin(), ms.end());
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
  for (const Rat& m : ms)
    if (is_zero(m)) throw Error(Errc::kZeroM, "m must be nonzero");

  std::vector<FamilyCheck> results(ms.size());
  std::vector<double> millis(ms.size());
  parallel_for(ms.size(), jobs, [&](std::size_t i) {
    const auto start = std::chrono::steady_clock::now();
    results[i] = family_checks(ms[i], seed);
    millis[i] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                    .count();
  });

  Json entries = Json::array();
  bool all = true;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    Json entry{{"m", io::to_json(ms[i])}, {"checks", results[i].checks}};
    bool ok = true;
    for (const auto& [name, c] : results[i].checks.items()) ok = ok && c["pass"].get<bool>();
    entry["pass"] = ok;
    if (timings) entry["time_ms"] = millis[i];
    all = all && ok;
    entries.push_back(std::move(entry));
  }

  // Invariants of distinct parameters must agree exactly when m m' = 1.
  bool separate = true;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    for (std::size_t j = i + 1; j < ms.size(); ++j) {
      const auto& a = results[i].evidence;
      const auto& b = results[j].evidence;
      if (!a.linear_shape_ok || !b.linear_shape_ok) continue;
      separate = separate && ((a.invariant == b.invariant) == (ms[i] * ms[j] == 1));
    }
  }
  return {{"seed", seed}, {"entries", std::move(entries)}, {"invariants_separate", separate},
          {"all_pass", all && separate}};
}

Json cmd_family_tower(const std::string& m, std::size_t k) {
  const Rat mm = parse_rat(m);
  const Configuration w = coloop_tower(mm, k);
  const Poly psi = psi_det(w);
  const Poly nf = psi_m_k(mm, k);
  const ContactCert c = tower_cert(mm, k);
  return {{"m", io::to_json(mm)},
          {"k", k},
          {"config", io::to_json(w)},
          {"psi", io::to_json(psi)},
          {"psi_m_k", io::to_json(nf)},
          {"product_matches",
           nf == lift(psi_m(mm), nf.vars()) * product_of_variables(nf.vars(), 6, 6 + k)},
          {"cert", io::to_json(c)},
          {"cert_verified", check_cert(psi, nf, c)}};
}

}  // namespace cfgpoly::cli
