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

// Acceptance driver: one PASS/FAIL line per criterion. Library results are
// compared against the independent implementations in tests/support.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "cfgpoly/cert.hpp"
#include "cfgpoly/classify.hpp"
#include "cfgpoly/combinatorics.hpp"
#include "cfgpoly/configpoly.hpp"
#include "cfgpoly/configuration.hpp"
#include "cfgpoly/equivalence.hpp"
#include "cfgpoly/error.hpp"
#include "cfgpoly/family.hpp"
#include "cfgpoly/groebner.hpp"
#include "cfgpoly/ideals.hpp"
#include "cfgpoly/io.hpp"
#include "oracles.hpp"

namespace {

using namespace cfgpoly;
using oracle::Mat;
using oracle::Rng;

struct Verdict {
  bool pass = false;
  std::string detail;
};

std::string count(std::size_t ok, std::size_t total) {
  return std::to_string(ok) + "/" + std::to_string(total);
}

RatMatrix to_matrix(const Mat& m) { return RatMatrix::stack(m, m.empty() ? 0 : m[0].size()); }

Configuration random_config(Rng& rng) {
  const auto r = static_cast<std::size_t>(rng.uniform(1, 4));
  const auto n = static_cast<std::size_t>(rng.uniform(static_cast<int>(r), 8));
  return Configuration(to_matrix(rng.matrix(r, n, -3, 3)));
}

void parallel(std::size_t n, const std::function<void(std::size_t)>& fn) {
  const std::size_t jobs = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(jobs);
  for (std::size_t t = 0; t < jobs; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = t; i < n; i += jobs) fn(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

std::vector<std::vector<Poly>> poly_entries(const SymbolicForm& q) {
  std::vector<std::vector<Poly>> out(q.size());
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) out[i].push_back(q(i, j).to_poly());
  return out;
}

Poly oracle_psi(const Configuration& w) {
  if (w.rank() == 0) return Poly::constant(w.variables(), 1);
  return oracle::cofactor_det(oracle::gram_form(oracle::to_mat(w.basis()), w.variables()));
}

bool cert_ok(const Poly& phi, const Poly& psi, const ContactCert& c, Rng& rng) {
  return check_cert(phi, psi, c) && oracle::cert_holds_at_points(phi, psi, c, rng.engine());
}

// ---------------------------------------------------------------------------

Verdict criterion1() {
  Rng rng(oracle::kSeed + 1);
  std::size_t ok = 0;
  for (int t = 0; t < 200; ++t) {
    const Configuration w = random_config(rng);
    const Poly det = psi_det(w);
    const Poly cb = oracle::cauchy_binet(oracle::to_mat(w.basis()), w.variables());
    if (det == psi_basis_expansion(w) && det == cb && det == oracle_psi(w)) ++ok;
  }
  return {ok == 200, "psi_det = basis expansion = Cauchy-Binet oracle on " + count(ok, 200)};
}

GraphSpec to_spec(std::size_t v, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  GraphSpec g;
  for (std::size_t i = 0; i < v; ++i) g.vertices.push_back("v" + std::to_string(i));
  for (auto [a, b] : edges) g.edges.emplace_back(g.vertices[a], g.vertices[b]);
  return g;
}

bool matches_tree_oracle(std::size_t v,
                         const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  const Poly psi = kirchhoff(to_spec(v, edges)).psi;
  const Poly trees = oracle::spanning_tree_polynomial(v, edges, psi.vars());
  bool unit = true;
  for (const auto& [e, c] : psi.terms()) unit = unit && c == 1;
  return unit && psi == trees &&
         psi.num_terms() == oracle::spanning_trees(v, edges).size();
}

Verdict criterion2() {
  const std::vector<std::pair<std::size_t, std::size_t>> k3{{0, 1}, {1, 2}, {2, 0}};
  std::vector<std::pair<std::size_t, std::size_t>> k4;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) k4.emplace_back(i, j);

  const Poly psi3 = kirchhoff(to_spec(3, k3)).psi;
  const VarSet x = VarSet::numbered("x", 3);
  const Poly x1 = Poly::variable(x, 0), x2 = Poly::variable(x, 1), x3 = Poly::variable(x, 2);
  const bool k3_ok = matches_tree_oracle(3, k3) &&
                     rename(psi3, x) == x1 * x2 + x2 * x3 + x3 * x1;
  const Poly psi4 = kirchhoff(to_spec(4, k4)).psi;
  const bool k4_ok = matches_tree_oracle(4, k4) && psi4.num_terms() == 16;

  Rng rng(oracle::kSeed + 2);
  std::size_t ok = 0;
  for (int t = 0; t < 20; ++t) {
    const auto [v, edges] = rng.connected_graph(6, 4);
    ok += matches_tree_oracle(v, edges);
  }
  return {k3_ok && k4_ok && ok == 20,
          "K3 " + std::string(k3_ok ? "ok" : "bad") + ", K4 " + std::to_string(psi4.num_terms()) +
              " monomials, random graphs " + count(ok, 20)};
}

Verdict criterion3() {
  Rng rng(oracle::kSeed + 3);
  std::size_t mono = 0, bound = 0, proj = 0, semi = 0;
  const std::size_t cases = 200;
  for (std::size_t t = 0; t < cases; ++t) {
    const Configuration w = random_config(rng);
    const Mat rows = oracle::to_mat(w.basis());
    const std::size_t n = w.size(), r = w.rank();
    const HadamardProfile h = hadamard_dims(w, 4);
    bool m = h.dims.size() == 4, b = true, s_ok = true, p_ok = true;
    for (unsigned s = 1; s <= 4 && m; ++s) {
      const std::size_t d = oracle::hadamard_dim(rows, s);
      m = m && h.dim(s) == d && (s == 1 || d >= oracle::hadamard_dim(rows, s - 1));
      b = b && d <= std::min(n, binomial(r + s - 1, s));
    }
    for (unsigned a = 1; a <= 3; ++a)
      for (unsigned c = 1; a + c <= 4; ++c) {
        const Configuration prod = hadamard_product(hadamard_power(w, a), hadamard_power(w, c));
        s_ok = s_ok && oracle::same_row_space(oracle::to_mat(prod.basis()),
                                              oracle::hadamard_rows(rows, a + c));
      }
    std::vector<std::size_t> f;
    for (std::size_t e = 0; e < n; ++e)
      if (rng.uniform(0, 1)) f.push_back(e);
    if (f.empty()) f.push_back(0);
    for (unsigned s = 1; s <= 4; ++s) {
      const Configuration lhs = restrict(hadamard_power(w, s), f);
      Mat sub = rows;
      for (auto& row : sub) {
        std::vector<Rat> kept;
        for (std::size_t e : f) kept.push_back(row[e]);
        row = kept;
      }
      const Mat rhs = oracle::hadamard_rows(sub, s);
      p_ok = p_ok && (lhs.rank() == 0 ? oracle::gauss_rank(rhs) == 0
                                      : oracle::same_row_space(oracle::to_mat(lhs.basis()), rhs));
    }
    mono += m;
    bound += b;
    semi += s_ok;
    proj += p_ok;
  }
  return {mono == cases && bound == cases && proj == cases && semi == cases,
          "monotone " + count(mono, cases) + ", bound " + count(bound, cases) + ", projection " +
              count(proj, cases) + ", semigroup " + count(semi, cases)};
}

Verdict criterion4() {
  Rng rng(oracle::kSeed + 4);
  std::size_t ok = 0;
  const std::size_t cases = 100;
  for (std::size_t t = 0; t < cases; ++t) {
    const Configuration w = random_config(rng);
    const std::size_t r2 =
        oracle::gauss_rank(oracle::hadamard_rows(oracle::to_mat(w.basis()), 2));
    const ReductionReport rep = reduce_variables(w);
    const bool good = rep.f.size() == r2 && rep.reduced.size() == r2 &&
                      rep.nu <= binomial(w.rank() + 1, 2) &&
                      cert_ok(psi_det(w), psi_det(rep.reduced), rep.cert, rng) &&
                      !try_drop_variable(rep.reduced);
    ok += good;
  }
  return {ok == cases, "reductions verified " + count(ok, cases)};
}

Verdict criterion5() {
  const std::array<int, 4> values{0, 1, -1, 2};
  std::set<std::string> seen;
  std::vector<Configuration> unique;
  for (std::size_t n = 2; n <= 4; ++n) {
    std::size_t limit = 1;
    for (std::size_t i = 0; i < 2 * n; ++i) limit *= values.size();
    for (std::size_t code = 0; code < limit; ++code) {
      Mat m(2, std::vector<Rat>(n));
      std::size_t c = code;
      for (auto& row : m)
        for (auto& x : row) {
          x = values[c % values.size()];
          c /= values.size();
        }
      if (oracle::gauss_rank(m) != 2) continue;
      Configuration w(to_matrix(m));
      if (seen.insert(io::to_json(w).dump()).second) unique.push_back(std::move(w));
    }
  }
  std::vector<ClassId> ids(unique.size());
  std::vector<char> good(unique.size());
  parallel(unique.size(), [&](std::size_t i) {
    Rng rng(oracle::kSeed + 5 + i);
    const ClassLabel l = classify(unique[i]);
    ids[i] = l.id;
    good[i] = l.cert && cert_ok(psi_det(unique[i]), l.normal_form, *l.cert, rng);
  });
  std::map<ClassId, std::size_t> counts;
  std::size_t verified = 0;
  for (std::size_t i = 0; i < unique.size(); ++i) {
    ++counts[ids[i]];
    verified += good[i];
  }
  bool forms = true;
  for (const auto& [id, n] : counts)
    forms = forms && oracle::cofactor_det(poly_entries(normal_form_matrix(id))) == normal_form(id);

  GraphSpec k3{{"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}}, {}};
  const bool k3_conic = classify(kirchhoff(k3).config).id == ClassId::kConic;
  std::ostringstream d;
  d << unique.size() << " configurations, " << counts.size() << " classes (";
  const char* sep = "";
  for (const auto& [id, n] : counts) {
    d << sep << class_name(id) << "=" << n;
    sep = ", ";
  }
  d << "), certs " << count(verified, unique.size()) << ", K3 conic " << k3_conic;
  return {counts.size() == 2 && verified == unique.size() && forms && k3_conic, d.str()};
}

// U_{3,4} test: every 3-subset of the four columns is a basis.
bool uniform_34(const Configuration& w) {
  const Mat rows = oracle::to_mat(w.basis());
  for (const auto& pick : combinations(4, 3)) {
    Mat sub(3, std::vector<Rat>(3));
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) sub[i][j] = rows[i][pick[j]];
    if (oracle::cofactor_det(sub) == 0) return false;
  }
  return true;
}

Verdict criterion6() {
  std::vector<std::array<int, 3>> cols;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        if (a || b || c) cols.push_back({a, b, c});
  std::vector<std::vector<std::size_t>> picks;
  for (std::size_t k = 0; k <= 3; ++k)
    for (auto& p : multisets(cols.size(), k)) picks.push_back(std::move(p));

  std::vector<Configuration> reduced(picks.size());
  parallel(picks.size(), [&](std::size_t t) {
    RatMatrix m(3, 3 + picks[t].size());
    for (std::size_t i = 0; i < 3; ++i) m(i, i) = 1;
    for (std::size_t k = 0; k < picks[t].size(); ++k)
      for (std::size_t i = 0; i < 3; ++i) m(i, 3 + k) = cols[picks[t][k]][i];
    reduced[t] = reduce_variables(Configuration(m)).reduced;
  });
  std::set<std::string> seen;
  std::vector<const Configuration*> unique;
  for (const auto& w : reduced)
    if (seen.insert(io::to_json(w).dump()).second) unique.push_back(&w);

  std::vector<ClassLabel> labels(unique.size());
  std::vector<char> good(unique.size()), split_ok(unique.size(), 1);
  parallel(unique.size(), [&](std::size_t i) {
    Rng rng(oracle::kSeed + 6 + i);
    const Configuration& w = *unique[i];
    labels[i] = classify(w);
    const ClassLabel& l = labels[i];
    good[i] = l.cert && cert_ok(psi_det(w), l.normal_form, *l.cert, rng);
    if (l.r2 == 4) {
      split_ok[i] = uniform_34(w) == (l.id == ClassId::kR4AllNonzero);
    }
  });
  std::map<std::size_t, std::set<ClassId>> classes;
  std::size_t verified = 0, split = 0;
  for (std::size_t i = 0; i < unique.size(); ++i) {
    classes[labels[i].r2].insert(labels[i].id);
    verified += good[i];
    split += split_ok[i];
  }
  bool forms = true;
  std::ostringstream d;
  d << picks.size() << " matrices, " << unique.size() << " reduced; classes by r2:";
  for (const auto& [r2, ids] : classes) {
    d << " " << r2 << "->" << ids.size();
    for (ClassId id : ids)
      forms = forms &&
              oracle::cofactor_det(poly_entries(normal_form_matrix(id))) == normal_form(id);
  }
  const std::map<std::size_t, std::size_t> expected{{3, 1}, {4, 2}, {5, 2}, {6, 1}};
  bool shape = classes.size() == expected.size();
  for (const auto& [r2, ids] : classes)
    shape = shape && expected.count(r2) && expected.at(r2) == ids.size();
  d << "; certs " << count(verified, unique.size()) << "; r2=4 split vs U(3,4) "
    << count(split, unique.size());
  return {shape && forms && verified == unique.size() && split == unique.size(), d.str()};
}

Verdict criterion7() {
  const SymbolicForm q = normal_form_matrix(ClassId::kR5Dependent);
  const VarSet& y = q.vars();
  auto v = [&](std::size_t i) { return Poly::variable(y, i - 1); };
  const Ideal a(y, {v(1) * v(2) - v(4) * v(4), v(3), v(5)});
  const Ideal b(y, {v(1) * v(3) - v(5) * v(5), v(2), v(4)});

  // Minors recomputed by cofactor expansion from the form entries.
  const auto entries = poly_entries(q);
  std::vector<Poly> minors2;
  for (const auto& r : combinations(3, 2))
    for (const auto& c : combinations(3, 2))
      minors2.push_back(oracle::cofactor_det(std::vector<std::vector<Poly>>{
          {entries[r[0]][c[0]], entries[r[0]][c[1]]}, {entries[r[1]][c[0]], entries[r[1]][c[1]]}}));
  const Ideal i2_oracle(y, minors2);
  const bool same_gens = ideal_equal(i2_oracle, submaximal_minors_ideal(q));
  const bool equal = ideal_equal(i2_oracle, intersect(a, b));
  return {same_gens && equal, std::string("I2(Q0) = intersection: ") + (equal ? "true" : "false")};
}

Verdict criterion8() {
  const std::array<const char*, 5> ms{"1", "2", "3", "1/2", "5"};
  std::ostringstream d;
  bool all = true;
  std::map<std::string, std::pair<Rat, Rat>> invariants;
  for (const char* text : ms) {
    const Rat m = parse_rat(text);
    Rng rng(oracle::kSeed + 8);
    const Poly target = psi_m(m);
    bool form_ok = oracle::cofactor_det(poly_entries(q_m(m))) == target;
    std::size_t lemma = 0;
    for (int t = 0; t < 25; ++t) {
      FamilyParams p;
      p.b1 = rng.nonzero_rat();
      p.a1 = m * p.b1;
      p.a2 = rng.nonzero_rat();
      p.b2 = rng.nonzero_rat();
      const Configuration w = family_config(p);
      const Poly psi = psi_det(w);
      lemma += psi == oracle_psi(w) && cert_ok(psi, target, lemma54_cert(p), rng);
    }
    const FamilyEvidence e = family_evidence(m);
    const bool inversion = cert_ok(target, psi_m(Rat(1) / m), inversion_cert(m), rng);

    bool tower = true;
    for (std::size_t k = 1; k <= 3; ++k) {
      const Configuration w = coloop_tower(m, k);
      const Poly psi = psi_det(w);
      Poly expected = lift(psi_det(family_config({m, 1, 1, 1})), psi.vars());
      for (std::size_t i = 0; i < k; ++i) expected = expected * Poly::variable(psi.vars(), 6 + i);
      const Poly nf = psi_m_k(m, k);
      Poly nf_expected = lift(target, nf.vars());
      for (std::size_t i = 0; i < k; ++i)
        nf_expected = nf_expected * Poly::variable(nf.vars(), 6 + i);
      tower = tower && psi == expected && psi == oracle_psi(w) && nf == nf_expected &&
              cert_ok(psi, nf, tower_cert(m, k), rng);
    }
    const bool ok = form_ok && lemma == 25 && e.intersection_equal && inversion && tower;
    all = all && ok;
    invariants[text] = e.invariant;
    d << "m=" << text << ": (i) " << lemma << "/25" << (form_ok ? "" : " form-mismatch")
      << " (ii) " << (e.intersection_equal ? "ok" : "FAIL") << " (iii) "
      << (inversion ? "ok" : "FAIL") << " (v) " << (tower ? "ok" : "FAIL") << "; ";
  }
  const std::set<std::pair<Rat, Rat>> distinct{invariants["2"], invariants["3"], invariants["5"]};
  const bool expected_values = invariants["2"] == std::pair<Rat, Rat>(Rat(1, 2), 2) &&
                               invariants["3"] == std::pair<Rat, Rat>(Rat(1, 3), 3) &&
                               invariants["5"] == std::pair<Rat, Rat>(Rat(1, 5), 5);
  const bool iv = distinct.size() == 3 && expected_values;
  d << "(iv) invariants for 2,3,5 " << (iv ? "distinct" : "NOT distinct");
  return {all && iv, d.str()};
}

Verdict criterion9() {
  Rng rng(oracle::kSeed + 9);
  std::size_t ok = 0;
  const std::size_t cases = 100;
  for (std::size_t t = 0; t < cases; ++t) {
    const auto p = static_cast<std::size_t>(rng.uniform(1, 5));
    const VarSet x = VarSet::numbered("x", p), y = VarSet::numbered("y", p),
                 z = VarSet::numbered("z", p);
    const ContactCert c1 = make_cert(to_matrix(rng.invertible(p)), rng.nonzero_rat(), x, y);
    const ContactCert c2 = make_cert(to_matrix(rng.invertible(p)), rng.nonzero_rat(), y, z);
    const Poly chi = rng.poly(z, 4, 3);
    const Poly psi = scale(substitute_linear(chi, c2.ell, y), c2.lambda);
    const Poly phi = scale(substitute_linear(psi, c1.ell, x), c1.lambda);
    const ContactCert c12 = compose_certs(c1, c2);
    const bool good = cert_ok(phi, psi, c1, rng) && cert_ok(psi, chi, c2, rng) &&
                      cert_ok(phi, chi, c12, rng) && cert_ok(psi, phi, invert_cert(c1), rng) &&
                      cert_ok(chi, phi, invert_cert(c12), rng) &&
                      cert_ok(chi, psi, invert_cert(c2), rng);
    ok += good;
  }
  return {ok == cases, "compose/invert valid on " + count(ok, cases)};
}

std::string run_capture(const std::string& cmd) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return out;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  pclose(pipe);
  return out;
}

Verdict criterion10(const std::string& cli) {
  if (cli.empty()) return {false, "no --cli given"};
  const unsigned hw = std::max(2u, std::thread::hardware_concurrency());
  const std::string a = run_capture("'" + cli + "' verify-paper --jobs " + std::to_string(hw));
  const std::string b = run_capture("'" + cli + "' verify-paper --jobs 2");
  std::string digest;
  try {
    digest = nlohmann::json::parse(a).at("digest").get<std::string>();
  } catch (const std::exception&) {
    return {false, "report is not valid JSON"};
  }
  return {!a.empty() && a == b,
          std::to_string(a.size()) + " bytes, digest " + digest +
              (a == b ? ", identical" : ", DIFFERENT")};
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli;
  std::set<int> known;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--cli" && i + 1 < argc) {
      cli = argv[++i];
    } else if (arg == "--known-deviation" && i + 1 < argc) {
      known.insert(std::atoi(argv[++i]));
    } else {
      std::cerr << "usage: acceptance [--cli PATH] [--known-deviation N]...\n";
      return 2;
    }
  }
  const std::vector<std::function<Verdict()>> criteria{
      criterion1, criterion2, criterion3, criterion4, criterion5,
      criterion6, criterion7, criterion8, criterion9, [&] { return criterion10(cli); }};

  std::set<int> failed;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i + 1);
    Verdict v;
    try {
      v = criteria[i]();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    if (!v.pass) failed.insert(id);
    std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << v.detail
              << (v.pass || !known.count(id) ? "" : " [known deviation]") << std::endl;
  }
  bool unexpected = false;
  for (int id : failed) unexpected = unexpected || !known.count(id);
  std::cout << (criteria.size() - failed.size()) << "/" << criteria.size() << " criteria pass"
            << std::endl;
  return unexpected ? 1 : 0;
}
