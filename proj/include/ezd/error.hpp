/*
   Copyright 2026 The ezd authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <stdexcept>
#include <string>

namespace ezd {

/// Failure classes surfaced by the library and the CLI exit-code logic.
///   parse             -- malformed input file or expression
///   structure         -- a value violates its own invariants (bad table, dim mismatch)
///   precondition      -- an operation was called outside its contract
///   hypothesis        -- a theorem's hypothesis does not hold for the given instance
///   theorem_violation -- a proven statement failed to verify (a bug in this artifact)
///   truncation        -- a claim was requested too close to a window edge to decide
enum class ErrKind {
    parse,
    structure,
    precondition,
    hypothesis,
    theorem_violation,
    truncation,
};

const char* to_string(ErrKind k);

class Error : public std::runtime_error {
  public:
    Error(ErrKind kind, const std::string& msg)
        : std::runtime_error(std::string(to_string(kind)) + ": " + msg), kind_(kind)
    {
    }
    ErrKind kind() const { return kind_; }

  private:
    ErrKind kind_;
};

[[noreturn]] inline void fail(ErrKind kind, const std::string& msg) { throw Error(kind, msg); }

}  // namespace ezd
