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

#include "ctxcert/json.h"

#include "ctxcert/error.h"

namespace ctxcert {

Json rational_to_json(const Rational &r) {
    return r.str();
}

Json rational_vector_to_json(const RationalVector &v) {
    Json out = Json::array();
    for (const auto &r : v) {
        out.push_back(r.str());
    }
    return out;
}

Rational rational_from_json(const Json &j, const std::string &where) {
    if (j.is_number_integer()) {
        return Rational(j.get<long>());
    }
    if (!j.is_string()) {
        throw Error(where + ": expected a rational string \"p/q\"");
    }
    const auto text = j.get<std::string>();
    if (Rational::is_decimal_literal(text)) {
        throw Error(where + ": decimal value '" + text + "' needs an explicit denominator_bound");
    }
    return Rational::parse(text);
}

RationalVector rational_vector_from_json(const Json &j, const std::string &where) {
    if (!j.is_array()) {
        throw Error(where + ": expected an array");
    }
    RationalVector out;
    for (size_t i = 0; i < j.size(); ++i) {
        out.push_back(rational_from_json(j[i], where + "[" + std::to_string(i) + "]"));
    }
    return out;
}

}  // namespace ctxcert
