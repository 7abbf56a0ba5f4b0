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

#ifndef CTXCERT_ERROR_H
#define CTXCERT_ERROR_H

#include <stdexcept>
#include <string>

namespace ctxcert {

/// Raised for violated preconditions and malformed inputs. The message names
/// the failing invariant so the CLI can forward it verbatim.
class Error : public std::runtime_error {
   public:
    explicit Error(const std::string &what) : std::runtime_error(what) {}
};

}  // namespace ctxcert

#endif
