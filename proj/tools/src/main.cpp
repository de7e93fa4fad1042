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

#include <CLI11.hpp>

#include <functional>
#include <iostream>

#include "cfgpoly/error.hpp"
#include "commands.hpp"
#include "suite.hpp"

namespace {

using cfgpoly::cli::Json;

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

int emit_error(std::string_view code, const std::string& message) {
  emit({{"error", {{"code", code}, {"message", message}}}});
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  namespace cli = cfgpoly::cli;
  CLI::App app{"Configuration polynomials: computation, reduction, classification"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "cfgpoly 0.1.0");

  std::function<Json()> action;
  std::string config, graph, form, phi, psi, cert, ideal, a, b, order = "grevlex", m, m_list;
  unsigned s = 2, s_max = 6, jobs = 1;
  std::size_t budget = 200000, k = 1;
  std::uint64_t seed = cli::kDefaultSeed;
  bool no_ideal_check = false, reduced = false, no_timings = false;

  auto config_cmd = [&](const char* name, const char* help, Json (*fn)(const std::string&)) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("--config", config, "Configuration JSON file, or - for stdin")->required();
    c->callback([&, fn] { action = [&, fn] { return fn(config); }; });
    return c;
  };

  config_cmd("psi", "configuration polynomial as a determinant", cli::cmd_psi);
  config_cmd("psi-basis", "configuration polynomial as a sum over bases", cli::cmd_psi_basis);
  config_cmd("matroid-poly", "matroid and its basis polynomial", cli::cmd_matroid_poly);
  config_cmd("reduce", "reduce to the minimal number of variables", cli::cmd_reduce);
  config_cmd("drop-var", "search for a variable the polynomial does not need",
             cli::cmd_drop_var);

  auto* kirchhoff = app.add_subcommand("kirchhoff", "Kirchhoff polynomial of a graph");
  kirchhoff->add_option("--graph", graph, "GraphSpec JSON file, or - for stdin")->required();
  kirchhoff->callback([&] { action = [&] { return cli::cmd_kirchhoff(graph); }; });

  auto* hadamard = config_cmd("hadamard", "s-th Hadamard power", nullptr);
  hadamard->add_option("--s", s, "exponent")->check(CLI::PositiveNumber);
  hadamard->callback([&] { action = [&] { return cli::cmd_hadamard(config, s); }; });

  auto* filtration = config_cmd("filtration", "Hadamard dimensions and filtration", nullptr);
  filtration->add_option("--s-max", s_max, "largest power computed")->check(CLI::PositiveNumber);
  filtration->callback([&] { action = [&] { return cli::cmd_filtration(config, s_max); }; });

  auto* check = app.add_subcommand("check-cert", "verify phi(t) = lambda psi(ell t)");
  check->add_option("--phi", phi, "source polynomial JSON")->required();
  check->add_option("--psi", psi, "target polynomial JSON")->required();
  check->add_option("--cert", cert, "certificate JSON")->required();
  check->callback([&] { action = [&] { return cli::cmd_check_cert(phi, psi, cert); }; });

  auto* classify = config_cmd("classify", "normal form of a rank 2 or 3 configuration", nullptr);
  classify->add_flag("--no-ideal-check", no_ideal_check, "skip the Groebner cross-check");
  classify->callback(
      [&] { action = [&] { return cli::cmd_classify(config, !no_ideal_check); }; });

  auto* minors = app.add_subcommand("minors-ideal", "ideal of submaximal minors");
  minors->add_option("--config", config, "Configuration JSON file");
  minors->add_option("--form", form, "symbolic form JSON file");
  minors->add_flag("--reduced", reduced, "return the reduced Groebner basis");
  minors->callback([&] { action = [&] { return cli::cmd_minors_ideal(config, form, reduced); }; });

  auto* gb = app.add_subcommand("groebner", "reduced Groebner basis");
  gb->add_option("--ideal", ideal, "Ideal JSON file")->required();
  gb->add_option("--order", order, "monomial order")
      ->check(CLI::IsMember({"grevlex", "eliminate-first"}));
  gb->add_option("--budget", budget, "maximum number of S-pairs reduced");
  gb->callback([&] { action = [&] { return cli::cmd_groebner(ideal, order, budget); }; });

  auto* eq = app.add_subcommand("ideal-eq", "compare two ideals");
  eq->add_option("--a", a, "Ideal JSON file")->required();
  eq->add_option("--b", b, "Ideal JSON file")->required();
  eq->callback([&] { action = [&] { return cli::cmd_ideal_eq(a, b); }; });

  auto* cap = app.add_subcommand("ideal-intersect", "intersect two ideals");
  cap->add_option("--a", a, "Ideal JSON file")->required();
  cap->add_option("--b", b, "Ideal JSON file")->required();
  cap->callback([&] { action = [&] { return cli::cmd_ideal_intersect(a, b); }; });

  auto* family = app.add_subcommand("family", "the rank 4 family Q_m");
  family->require_subcommand(1);
  auto* psi_m = family->add_subcommand("psi-m", "Q_m and psi_m");
  psi_m->add_option("--m", m, "parameter, e.g. 2 or 1/2")->required();
  psi_m->callback([&] { action = [&] { return cli::cmd_family_psi_m(m); }; });
  auto* fverify = family->add_subcommand("verify", "certificates and ideal checks per m");
  fverify->add_option("--m-list", m_list, "comma separated parameters")->required();
  fverify->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  fverify->add_option("--seed", seed, "seed for the random parameter tuples");
  fverify->add_flag("--no-timings", no_timings, "omit wall-clock timings");
  fverify->callback([&] {
    action = [&] { return cli::cmd_family_verify(m_list, jobs, seed, !no_timings); };
  });
  auto* tower = family->add_subcommand("tower", "coloop extensions psi_m y7 ... y(6+k)");
  tower->add_option("--m", m, "parameter")->required();
  tower->add_option("--k", k, "number of coloops")->required();
  tower->callback([&] { action = [&] { return cli::cmd_family_tower(m, k); }; });

  bool suite = false;
  auto* vp = app.add_subcommand("verify-paper", "run the full verification suite");
  vp->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  vp->add_option("--seed", seed, "seed for the randomized checks");
  vp->callback([&] {
    suite = true;
    action = [&] { return cli::verify_paper({seed, jobs}); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const Json out = action();
    emit(out);
    if (suite) return out["summary"]["failed"].empty() ? 0 : 1;
    return 0;
  } catch (const cfgpoly::Error& e) {
    return emit_error(cfgpoly::errc_name(e.code()), e.what());
  } catch (const nlohmann::json::exception& e) {
    return emit_error("InvalidInput", e.what());
  } catch (const std::exception& e) {
    return emit_error("Internal", e.what());
  }
}
