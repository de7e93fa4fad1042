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

#include "suite.hpp"

#include <array>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "cfgpoly/combinatorics.hpp"
#include "cfgpoly/error.hpp"
#include "commands.hpp"
#include "parallel.hpp"

namespace cfgpoly::cli {

namespace {

struct Outcome {
  bool pass = false;
  Json detail = Json::object();
};

struct Item {
  std::string id;
  int criterion;
  std::string title;
  std::function<Outcome(const SuiteOptions&)> run;
};

std::mt19937_64 rng_for(const SuiteOptions& o, const std::string& id) {
  return std::mt19937_64(o.seed ^ std::stoull(fnv1a_hex(id), nullptr, 16));
}

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Configuration random_config(std::mt19937_64& rng) {
  const int r = uniform(rng, 1, 4);
  const int n = uniform(rng, r, 8);
  RatMatrix m(r, n);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = uniform(rng, -3, 3);
  return Configuration(m);
}

RatMatrix random_invertible(std::mt19937_64& rng, std::size_t p) {
  for (;;) {
    RatMatrix m(p, p);
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < p; ++j) m(i, j) = uniform(rng, -2, 2);
    if (!is_zero(determinant(m))) return m;
  }
}

Poly random_poly(std::mt19937_64& rng, const VarSet& vars) {
  Poly p(vars);
  const int terms = uniform(rng, 1, 4);
  for (int t = 0; t < terms; ++t) {
    Exponents e(vars.size(), 0);
    const int deg = uniform(rng, 1, 3);
    for (int d = 0; d < deg; ++d) ++e[uniform(rng, 0, static_cast<int>(vars.size()) - 1)];
    p.add_term(e, random_nonzero_rat(rng));
  }
  return p;
}

GraphSpec random_connected_graph(std::mt19937_64& rng) {
  const int v = uniform(rng, 2, 6);
  GraphSpec g;
  for (int i = 0; i < v; ++i) g.vertices.push_back("v" + std::to_string(i));
  for (int i = 1; i < v; ++i) {
    g.edges.emplace_back(g.vertices[uniform(rng, 0, i - 1)], g.vertices[i]);
  }
  const int extra = uniform(rng, 0, 4);
  for (int k = 0; k < extra; ++k) {
    const int a = uniform(rng, 0, v - 1), b = uniform(rng, 0, v - 1);
    if (a != b) g.edges.emplace_back(g.vertices[a], g.vertices[b]);
  }
  return g;
}

// Number of spanning trees from the reduced Laplacian.
Rat spanning_tree_count(const GraphSpec& g) {
  const std::size_t v = g.vertices.size();
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < v; ++i) index[g.vertices[i]] = i;
  RatMatrix lap(v - 1, v - 1);
  for (const auto& [a, b] : g.edges) {
    const std::size_t i = index.at(a), j = index.at(b);
    if (i == j) continue;
    if (i < v - 1) lap(i, i) += 1;
    if (j < v - 1) lap(j, j) += 1;
    if (i < v - 1 && j < v - 1) {
      lap(i, j) -= 1;
      lap(j, i) -= 1;
    }
  }
  return v == 1 ? Rat(1) : determinant(lap);
}

bool all_coefficients_one(const Poly& p) {
  for (const auto& [e, c] : p.terms())
    if (c != 1) return false;
  return true;
}

std::string canonical(const Configuration& w) { return io::to_json(w).dump(); }

// ---------------------------------------------------------------------------

Outcome psi_oracle(const SuiteOptions& o) {
  auto rng = rng_for(o, "psi-oracle");
  std::size_t agree = 0;
  for (int t = 0; t < 200; ++t) {
    const Configuration w = random_config(rng);
    if (psi_det(w) == psi_basis_expansion(w)) ++agree;
  }
  return {agree == 200, {{"cases", 200}, {"agree", agree}}};
}

Outcome kirchhoff_k3(const SuiteOptions&) {
  GraphSpec g{{"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}}, {}};
  const Poly psi = kirchhoff(g).psi;
  const VarSet x = VarSet::numbered("x", 3);
  const Poly x1 = Poly::variable(x, 0), x2 = Poly::variable(x, 1), x3 = Poly::variable(x, 2);
  const Poly expected = x1 * x2 + x2 * x3 + x3 * x1;
  return {psi == lift(expected, psi.vars()), {{"psi", to_string(psi)}}};
}

Outcome kirchhoff_k4(const SuiteOptions&) {
  GraphSpec g{{"1", "2", "3", "4"}, {}, {}};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) g.edges.emplace_back(g.vertices[i], g.vertices[j]);
  const Poly psi = kirchhoff(g).psi;
  return {psi.terms().size() == 16 && all_coefficients_one(psi),
          {{"monomials", psi.terms().size()}, {"unit_coefficients", all_coefficients_one(psi)}}};
}

Outcome kirchhoff_random(const SuiteOptions& o) {
  auto rng = rng_for(o, "kirchhoff-random");
  std::size_t ok = 0;
  for (int t = 0; t < 20; ++t) {
    const GraphSpec g = random_connected_graph(rng);
    const KirchhoffResult k = kirchhoff(g);
    const Poly via_bases = matroid_polynomial(matroid(k.config));
    if (all_coefficients_one(k.psi) && k.psi == via_bases &&
        Rat(static_cast<long>(k.psi.terms().size())) == spanning_tree_count(g)) {
      ++ok;
    }
  }
  return {ok == 20, {{"graphs", 20}, {"agree", ok}}};
}

Outcome hadamard_laws(const SuiteOptions& o) {
  auto rng = rng_for(o, "hadamard-laws");
  std::size_t monotone = 0, bounded = 0, semigroup = 0, projection = 0, filtration = 0;
  const std::size_t cases = 200;
  for (std::size_t t = 0; t < cases; ++t) {
    const Configuration w = random_config(rng);
    const std::size_t n = w.ground_set().size(), r = w.rank();
    const HadamardProfile h = hadamard_dims(w, 4);
    bool mono = true, bound = true, filt = true;
    for (std::size_t s = 0; s < h.dims.size(); ++s) {
      if (s > 0 && h.dims[s] < h.dims[s - 1]) mono = false;
      if (h.dims[s] > std::min<std::size_t>(n, binomial(r + s, s + 1))) bound = false;
      if (s < h.filtration.size() && h.filtration[s].size() != h.dims[s]) filt = false;
    }
    monotone += mono;
    bounded += bound;
    filtration += filt;

    std::vector<Configuration> powers{w};
    for (unsigned s = 2; s <= 4; ++s) powers.push_back(hadamard_power(w, s));
    bool semi = true;
    for (unsigned s = 1; s <= 3; ++s)
      for (unsigned s2 = 1; s + s2 <= 4; ++s2)
        semi = semi && hadamard_product(powers[s - 1], powers[s2 - 1]) == powers[s + s2 - 1];
    semigroup += semi;

    std::vector<std::size_t> f;
    for (std::size_t e = 0; e < n; ++e)
      if (uniform(rng, 0, 1)) f.push_back(e);
    const unsigned s = static_cast<unsigned>(uniform(rng, 1, 4));
    projection += restrict(powers[s - 1], f) == hadamard_power(restrict(w, f), s);
  }
  const bool pass = monotone == cases && bounded == cases && semigroup == cases &&
                    projection == cases && filtration == cases;
  return {pass,
          {{"cases", cases}, {"monotone", monotone}, {"bound", bounded}, {"semigroup", semigroup},
           {"projection", projection}, {"filtration_sizes", filtration}}};
}

Outcome hadamard_examples(const SuiteOptions&) {
  RatMatrix v(2, 5);
  for (int j = 0; j < 5; ++j) {
    v(0, j) = 1;
    v(1, j) = j + 1;
  }
  const auto vander = hadamard_dims(Configuration(v), 5).dims;
  const auto coloop = hadamard_dims(Configuration(RatMatrix::from_ints({{1, 0, 0, 1},
                                                                       {0, 1, 0, 1},
                                                                       {0, 0, 1, 1}})),
                                    3)
                          .dims;
  const auto free2 = hadamard_dims(Configuration(RatMatrix::identity(2)), 3).dims;
  const bool pass = vander == std::vector<std::size_t>{2, 3, 4, 5, 5} &&
                    coloop == std::vector<std::size_t>{3, 4, 4} &&
                    free2 == std::vector<std::size_t>{2, 2, 2};
  return {pass, {{"vandermonde_n5", vander}, {"i3_plus_ones", coloop}, {"free_rank2", free2}}};
}

Outcome reduction(const SuiteOptions& o) {
  auto rng = rng_for(o, "reduction");
  std::size_t ok = 0;
  const std::size_t cases = 100;
  for (std::size_t t = 0; t < cases; ++t) {
    const Configuration w = random_config(rng);
    const ReductionReport r = reduce_variables(w);
    const std::size_t r2 = hadamard_power(w, 2).rank();
    if (r.f.size() == r2 && r.reduced.ground_set().size() == r2 && r.nu <= r.bound &&
        r.bound == binomial(w.rank() + 1, 2) &&
        check_cert(psi_det(w), psi_det(r.reduced), r.cert) && !try_drop_variable(r.reduced)) {
      ++ok;
    }
  }
  return {ok == cases, {{"cases", cases}, {"ok", ok}}};
}

Outcome rank2_sweep(const SuiteOptions& o) {
  const std::array<int, 4> values{0, 1, -1, 2};
  std::set<std::string> seen;
  std::vector<Configuration> unique;
  std::size_t total = 0;
  for (std::size_t n = 2; n <= 4; ++n) {
    std::size_t limit = 1;
    for (std::size_t i = 0; i < 2 * n; ++i) limit *= values.size();
    for (std::size_t code = 0; code < limit; ++code) {
      RatMatrix m(2, n);
      std::size_t c = code;
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < n; ++j, c /= values.size()) m(i, j) = values[c % values.size()];
      Configuration w(m);
      if (w.rank() != 2) continue;
      ++total;
      if (seen.insert(canonical(w)).second) unique.push_back(std::move(w));
    }
  }
  std::vector<std::string> ids(unique.size());
  std::vector<char> verified(unique.size());
  parallel_for(unique.size(), o.jobs, [&](std::size_t i) {
    const ClassLabel l = classify(unique[i]);
    ids[i] = class_name(l.id);
    verified[i] = l.cert && check_cert(psi_det(unique[i]), l.normal_form, *l.cert);
  });
  std::map<std::string, std::size_t> counts;
  std::size_t good = 0;
  for (std::size_t i = 0; i < unique.size(); ++i) {
    ++counts[ids[i]];
    good += verified[i];
  }
  GraphSpec k3{{"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}}, {}};
  const bool k3_conic = classify(kirchhoff(k3).config).id == ClassId::kConic;
  return {counts.size() == 2 && good == unique.size() && k3_conic,
          {{"matrices", total}, {"configurations", unique.size()}, {"classes", counts},
           {"certs_verified", good}, {"k3_conic", k3_conic}}};
}

Outcome rank3_sweep(const SuiteOptions& o) {
  std::vector<std::array<int, 3>> cols;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        if (a || b || c) cols.push_back({a, b, c});
  std::vector<std::vector<std::size_t>> picks{{}};
  for (std::size_t i = 0; i < cols.size(); ++i) {
    picks.push_back({i});
    for (std::size_t j = i; j < cols.size(); ++j) {
      picks.push_back({i, j});
      for (std::size_t k = j; k < cols.size(); ++k) picks.push_back({i, j, k});
    }
  }
  std::vector<Configuration> reduced(picks.size());
  parallel_for(picks.size(), o.jobs, [&](std::size_t t) {
    RatMatrix m(3, 3 + picks[t].size());
    for (std::size_t i = 0; i < 3; ++i) m(i, i) = 1;
    for (std::size_t k = 0; k < picks[t].size(); ++k)
      for (std::size_t i = 0; i < 3; ++i) m(i, 3 + k) = cols[picks[t][k]][i];
    reduced[t] = reduce_variables(Configuration(m)).reduced;
  });
  std::set<std::string> seen;
  std::vector<const Configuration*> unique;
  for (const auto& w : reduced)
    if (seen.insert(canonical(w)).second) unique.push_back(&w);

  std::vector<ClassLabel> labels(unique.size());
  std::vector<char> verified(unique.size());
  parallel_for(unique.size(), o.jobs, [&](std::size_t i) {
    labels[i] = classify(*unique[i]);
    verified[i] = labels[i].cert && check_cert(psi_det(*unique[i]), labels[i].normal_form,
                                               *labels[i].cert);
  });
  std::map<std::size_t, std::set<std::string>> classes;
  std::size_t good = 0, consistent = 0, connectivity_checked = 0;
  for (std::size_t i = 0; i < unique.size(); ++i) {
    classes[labels[i].r2].insert(std::string(class_name(labels[i].id)));
    good += verified[i];
    consistent += labels[i].cross_check_ok;
    connectivity_checked += labels[i].matroid_connected.has_value();
  }
  Json counts = Json::object();
  bool shape = classes.size() == 4;
  const std::map<std::size_t, std::size_t> expected{{3, 1}, {4, 2}, {5, 2}, {6, 1}};
  for (const auto& [r2, names] : classes) {
    counts[std::to_string(r2)] = names;
    shape = shape && expected.count(r2) && expected.at(r2) == names.size();
  }
  return {shape && good == unique.size() && consistent == unique.size(),
          {{"matrices", picks.size()}, {"reduced_configurations", unique.size()},
           {"classes_by_r2", counts}, {"certs_verified", good}, {"cross_checks_ok", consistent},
           {"connectivity_checked", connectivity_checked}}};
}

Outcome representatives(const SuiteOptions&) {
  const std::array ids{ClassId::kRank1,       ClassId::kProduct2,     ClassId::kConic,
                       ClassId::kR3D3,        ClassId::kR4OneZero,    ClassId::kR4AllNonzero,
                       ClassId::kR5Dependent, ClassId::kR5Independent, ClassId::kR6Generic};
  Json detail = Json::object();
  bool pass = true;
  for (ClassId id : ids) {
    const Configuration w = class_representative(id);
    const ClassLabel l = classify(w);
    const bool ok = l.id == id && l.normal_form == normal_form(id) && l.cert &&
                    check_cert(psi_det(w), l.normal_form, *l.cert) && l.cross_check_ok &&
                    form_determinant(normal_form_matrix(id)) == normal_form(id);
    detail[std::string(class_name(id))] = ok;
    pass = pass && ok;
  }
  return {pass, detail};
}

Outcome conic_steps_item(const SuiteOptions&) {
  const VarSet y = VarSet::numbered("y", 3);
  const VarSet x = VarSet::numbered("x", 3);
  const Poly x1 = Poly::variable(x, 0), x2 = Poly::variable(x, 1), x3 = Poly::variable(x, 2);
  const Poly k3 = x1 * x2 + x2 * x3 + x3 * x1;
  const Poly conic = normal_form(ClassId::kConic);
  const bool cert_ok = check_cert(rename(conic, y), k3, conic_cert(y, x));
  RatMatrix ell = RatMatrix::identity(3);
  for (const auto& s : conic_steps()) ell = ell * s;
  const Poly pulled = substitute_linear(k3, ell, y);
  return {cert_ok && pulled == rename(conic, y),
          {{"k3_after_steps", to_string(pulled)}, {"cert", cert_ok}}};
}

Outcome fingerprints(const SuiteOptions&) {
  const Fingerprint dep = separating_invariant(normal_form_matrix(ClassId::kR5Dependent));
  const Fingerprint ind = separating_invariant(normal_form_matrix(ClassId::kR5Independent));
  return {!(dep == ind),
          {{"r5_dependent", io::to_json(dep)}, {"r5_independent", io::to_json(ind)}}};
}

Outcome q0_minors(const SuiteOptions&) {
  const SymbolicForm q = normal_form_matrix(ClassId::kR5Dependent);
  const VarSet& y = q.vars();
  auto v = [&](std::size_t i) { return Poly::variable(y, i - 1); };
  const Ideal a(y, {v(1) * v(2) - v(4) * v(4), v(3), v(5)});
  const Ideal b(y, {v(1) * v(3) - v(5) * v(5), v(2), v(4)});
  const Ideal i2 = submaximal_minors_ideal(q);
  const bool equal = ideal_equal(i2, intersect(a, b));
  const Ideal g = groebner(i2);
  return {equal && verify_groebner(g.gens),
          {{"equal", equal}, {"reduced_basis_size", g.gens.size()}}};
}

Outcome family_item(const Rat& m, const SuiteOptions& o) {
  const FamilyCheck c = family_checks(m, o.seed);
  bool pass = true;
  for (const auto& [name, check] : c.checks.items()) pass = pass && check["pass"].get<bool>();
  return {pass, c.checks};
}

Outcome family_invariants(const SuiteOptions&) {
  const FamilyEvidenceReport r = family_evidence_report({Rat(2), Rat(3), Rat(5)});
  std::set<std::pair<Rat, Rat>> pairs;
  Json inv = Json::array();
  for (const auto& e : r.entries) {
    pairs.insert(e.invariant);
    inv.push_back({io::to_json(e.invariant.first), io::to_json(e.invariant.second)});
  }
  return {r.all_ok && r.invariants_separate && pairs.size() == 3,
          {{"invariants", inv}, {"separate", r.invariants_separate}}};
}

Outcome cert_algebra(const SuiteOptions& o) {
  auto rng = rng_for(o, "cert-algebra");
  std::size_t ok = 0;
  const std::size_t cases = 100;
  for (std::size_t t = 0; t < cases; ++t) {
    const std::size_t p = static_cast<std::size_t>(uniform(rng, 1, 5));
    const VarSet x = VarSet::numbered("x", p), y = VarSet::numbered("y", p),
                 z = VarSet::numbered("z", p);
    const ContactCert c2 = make_cert(random_invertible(rng, p), random_nonzero_rat(rng), y, z);
    const ContactCert c1 = make_cert(random_invertible(rng, p), random_nonzero_rat(rng), x, y);
    const Poly chi = random_poly(rng, z);
    const Poly psi = scale(substitute_linear(chi, c2.ell, y), c2.lambda);
    const Poly phi = scale(substitute_linear(psi, c1.ell, x), c1.lambda);
    const ContactCert c12 = compose_certs(c1, c2);
    if (check_cert(phi, psi, c1) && check_cert(psi, chi, c2) && check_cert(phi, chi, c12) &&
        check_cert(psi, phi, invert_cert(c1)) && check_cert(chi, phi, invert_cert(c12)) &&
        check_cert(phi, phi, compose_certs(c1, invert_cert(c1)))) {
      ++ok;
    }
  }
  return {ok == cases, {{"cases", cases}, {"ok", ok}}};
}

std::vector<Item> items() {
  std::vector<Item> out{
      {"psi-oracle", 1, "determinant and basis expansion agree", psi_oracle},
      {"kirchhoff-k3", 2, "K3 gives x1x2+x2x3+x3x1", kirchhoff_k3},
      {"kirchhoff-k4", 2, "K4 has 16 unit monomials", kirchhoff_k4},
      {"kirchhoff-random", 2, "Kirchhoff polynomial counts spanning trees", kirchhoff_random},
      {"hadamard-laws", 3, "monotonicity, bound, semigroup and projection laws", hadamard_laws},
      {"hadamard-examples", 3, "Hadamard dimension sequences of small examples",
       hadamard_examples},
      {"reduction", 4, "reduction to r2 variables with verified certificates", reduction},
      {"rank2-sweep", 5, "rank 2 has exactly two classes", rank2_sweep},
      {"rank3-sweep", 6, "rank 3 class counts 1, 2, 2, 1 for r2 = 3..6", rank3_sweep},
      {"class-representatives", 6, "normal forms classify to themselves", representatives},
      {"conic-steps", 5, "K3 reaches y1y2 - y3^2 through four substitutions", conic_steps_item},
      {"fingerprints", 6, "ideal fingerprints separate the r2 = 5 classes", fingerprints},
      {"q0-minors", 7, "I2(Q0) is the intersection of two components", q0_minors},
  };
  for (const char* m : {"1", "2", "3", "1/2", "5"}) {
    const Rat mm = parse_rat(m);
    out.push_back({std::string("family-m=") + m, 8, std::string("family checks for m = ") + m,
                   [mm](const SuiteOptions& o) { return family_item(mm, o); }});
  }
  out.push_back({"family-invariants", 8, "recovered invariants distinct for m = 2, 3, 5",
                 family_invariants});
  out.push_back({"cert-algebra", 9, "composition and inversion preserve validity", cert_algebra});
  return out;
}

}  // namespace

std::string fnv1a_hex(const std::string& text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json verify_paper(const SuiteOptions& opts) {
  const std::vector<Item> list = items();
  std::vector<Outcome> outcomes(list.size());
  std::vector<std::string> errors(list.size());
  parallel_for(list.size(), opts.jobs, [&](std::size_t i) {
    try {
      outcomes[i] = list[i].run(opts);
    } catch (const Error& e) {
      errors[i] = std::string(errc_name(e.code())) + ": " + e.what();
    }
  });

  Json checks = Json::array();
  std::size_t passed = 0;
  for (std::size_t i = 0; i < list.size(); ++i) {
    Json c{{"id", list[i].id},
           {"criterion", list[i].criterion},
           {"title", list[i].title},
           {"pass", errors[i].empty() && outcomes[i].pass}};
    if (errors[i].empty()) {
      c["detail"] = outcomes[i].detail;
    } else {
      c["error"] = errors[i];
    }
    passed += c["pass"].get<bool>();
    checks.push_back(std::move(c));
  }
  Json failed = Json::array();
  for (const auto& c : checks)
    if (!c["pass"].get<bool>()) failed.push_back(c["id"]);
  return {{"suite", "verify-paper"},
          {"seed", opts.seed},
          {"checks", checks},
          {"summary", {{"total", checks.size()}, {"passed", passed}, {"failed", failed}}},
          {"digest", fnv1a_hex(checks.dump())}};
}

}  // namespace cfgpoly::cli
