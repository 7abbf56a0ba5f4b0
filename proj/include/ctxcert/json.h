// Copyright 2026 The ctxcert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CTXCERT_JSON_H
#define CTXCERT_JSON_H

#include <string>
#include <vector>

#include "ctxcert/rational.h"
#include "json.hpp"

namespace ctxcert {

/// Insertion-ordered JSON so emitted documents keep their field order.
using Json = nlohmann::ordered_json;

Json rational_to_json(const Rational &r);
Json rational_vector_to_json(const RationalVector &v);

/// Accepts "p/q", "p" or an integer JSON number. Decimal text is rejected:
/// those values need an explicit denominator bound (see scenario loading).
Rational rational_from_json(const Json &j, const std::string &where);
RationalVector rational_vector_from_json(const Json &j, const std::string &where);

}  // namespace ctxcert

#endif
