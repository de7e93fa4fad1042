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

#pragma once

#include <nlohmann/json.hpp>

#include "cfgpoly/cert.hpp"
#include "cfgpoly/classify.hpp"
#include "cfgpoly/configpoly.hpp"
#include "cfgpoly/configuration.hpp"
#include "cfgpoly/equivalence.hpp"
#include "cfgpoly/family.hpp"
#include "cfgpoly/ideals.hpp"

namespace cfgpoly::io {

using Json = nlohmann::json;

// Parsers throw Error(kInvalidInput) on malformed documents.

Json to_json(const Rat& r);
Rat rat_from_json(const Json& j);

Json to_json(const RatMatrix& m);
// Rows of rationals; `cols` fixes the width of an empty row list.
RatMatrix matrix_from_json(const Json& j, std::size_t cols = 0);

Json to_json(const VarSet& v);
VarSet varset_from_json(const Json& j);

// {"vars": [...], "terms": [{"coeff": "p/q", "exps": [...]}, ...], "text": "..."}
// Terms are listed in decreasing grevlex order; "text" is ignored on input.
Json to_json(const Poly& p);
Poly poly_from_json(const Json& j);

Json to_json(const LinearForm& f);

// {"ground_set": [...], "rows": [[...], ...]}
Json to_json(const Configuration& w);
Configuration config_from_json(const Json& j);

// {"vertices": [...], "edges": [["u", "v"], ...], "edge_labels": [...]}
Json to_json(const GraphSpec& g);
GraphSpec graph_from_json(const Json& j);

// {"p": 6, "lambda": "1", "ell": [[...]], "source_vars": [...], "target_vars": [...]}
Json to_json(const ContactCert& c);
ContactCert cert_from_json(const Json& j);

// {"vars": [...], "size": r, "entries": [[[coeffs of entry (i, j)], ...], ...]}
Json to_json(const SymbolicForm& q);
SymbolicForm form_from_json(const Json& j);

// {"vars": [...], "gens": [Poly, ...]}
Json to_json(const Ideal& i);
Ideal ideal_from_json(const Json& j);

Json to_json(const MatroidView& m);
Json to_json(const HadamardProfile& h);
Json to_json(const ReductionReport& r);
Json to_json(const DropResult& d);
Json to_json(const ClassLabel& l);
Json to_json(const Fingerprint& f);
Json to_json(const FamilyEvidence& e);
Json to_json(const FamilyEvidenceReport& r);

}  // namespace cfgpoly::io
