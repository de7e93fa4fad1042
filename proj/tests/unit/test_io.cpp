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
#include "common.hpp"

namespace cfgpoly {
namespace {

using namespace testing;
using io::Json;

TEST(Io, Rationals) {
  EXPECT_EQ(io::to_json(Rat(-3, 4)), Json("-3/4"));
  EXPECT_EQ(io::rat_from_json(Json("6/8")), Rat(3, 4));
  EXPECT_EQ(io::rat_from_json(Json(5)), Rat(5));
  EXPECT_ERRC(io::rat_from_json(Json(0.5)), kInvalidInput);
  EXPECT_ERRC(io::rat_from_json(Json("x")), kInvalidInput);
}

TEST(Io, PolyRoundTripAndOrder) {
  const VarSet x = VarSet::numbered("x", 3);
  const Poly p = v(x, 1) * v(x, 2) - v(x, 3) * v(x, 3) + Rat(1, 2) * v(x, 3);
  const Json j = io::to_json(p);
  EXPECT_EQ(j["text"], "x1*x2 - x3^2 + 1/2*x3");
  EXPECT_EQ(j["terms"][0]["exps"], Json({1, 1, 0}));
  EXPECT_EQ(j["terms"][1]["coeff"], "-1");
  EXPECT_EQ(io::poly_from_json(j), p);
  EXPECT_EQ(io::poly_from_json(Json::parse(j.dump())), p);
}

TEST(Io, PolyRejectsMalformedInput) {
  EXPECT_ERRC(io::poly_from_json(Json::parse(
                  R"({"vars":["x"],"terms":[{"coeff":"1","exps":[1,2]}]})")),
              kInvalidInput);
  EXPECT_ERRC(io::poly_from_json(Json::parse(R"({"vars":["x","x"],"terms":[]})")), kInvalidInput);
  EXPECT_ERRC(io::poly_from_json(Json::parse(
                  R"({"vars":["x"],"terms":[{"coeff":"1","exps":[-1]}]})")),
              kInvalidInput);
  EXPECT_ERRC(io::poly_from_json(Json::parse(R"({"terms":[]})")), kInvalidInput);
}

TEST(Io, ConfigurationRoundTrip) {
  const Configuration w({"a", "b", "c"}, ints({{2, 0, 2}, {0, 3, -3}}));
  const Json j = io::to_json(w);
  EXPECT_EQ(j["ground_set"], Json({"a", "b", "c"}));
  EXPECT_EQ(j["rows"][1][2], "-1");
  EXPECT_EQ(io::config_from_json(j), w);
  EXPECT_ERRC(io::config_from_json(Json::parse(R"({"ground_set":["a"],"rows":[["1","2"]]})")),
              kDimensionMismatch);
  EXPECT_ERRC(io::config_from_json(Json::parse(
                  R"({"ground_set":["a","b"],"rows":[["1"],["1","2"]]})")),
              kInvalidInput);
}

TEST(Io, GraphCertFormIdealRoundTrip) {
  const GraphSpec g{{"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}, {"e", "f"}};
  const GraphSpec g2 = io::graph_from_json(io::to_json(g));
  EXPECT_EQ(g2.vertices, g.vertices);
  EXPECT_EQ(g2.edges, g.edges);
  EXPECT_EQ(g2.edge_labels, g.edge_labels);
  EXPECT_ERRC(io::graph_from_json(Json::parse(R"({"vertices":["a"],"edges":[["a"]]})")),
              kInvalidInput);

  const VarSet x = VarSet::numbered("x", 2), y = VarSet::numbered("y", 3);
  const ContactCert c = make_cert(ints({{1, 1, 0}, {0, 1, 0}, {0, 0, 2}}), Rat(-2, 3), x, y);
  const ContactCert c2 = io::cert_from_json(io::to_json(c));
  EXPECT_EQ(c2.ell, c.ell);
  EXPECT_EQ(c2.lambda, c.lambda);
  EXPECT_EQ(c2.source_vars, c.source_vars);
  EXPECT_EQ(c2.target_vars, c.target_vars);
  Json bad = io::to_json(c);
  bad["ell"][0][0] = "0";
  bad["ell"][0][1] = "0";
  EXPECT_ERRC(io::cert_from_json(bad), kSingularMatrix);

  SymbolicForm q(y, 2);
  q.set(0, 0, LinearForm(y, {1, 0, 0}));
  q.set(0, 1, LinearForm(y, {0, Rat(1, 2), 0}));
  q.set(1, 1, LinearForm(y, {0, 0, -1}));
  EXPECT_EQ(io::form_from_json(io::to_json(q)), q);

  const Ideal i(y, {v(y, 1) * v(y, 2), v(y, 3)});
  const Ideal i2 = io::ideal_from_json(io::to_json(i));
  EXPECT_EQ(i2.vars, i.vars);
  EXPECT_EQ(i2.gens, i.gens);
}

TEST(Io, ReportsSerialize) {
  const Configuration w = cfg({{1, 0, 1}, {0, 1, -1}});
  const Json m = io::to_json(matroid(w));
  EXPECT_EQ(m["bases"].size(), 3u);
  EXPECT_EQ(m["connected"], true);
  const Json h = io::to_json(hadamard_dims(w, 3));
  EXPECT_EQ(h["dims"], Json({2, 3, 3}));
}

}  // namespace
}  // namespace cfgpoly
