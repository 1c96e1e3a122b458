/*
   Copyright 2026 The sepcurve Authors

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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sepcurve {

/// Malformed or out-of-domain argument (zero polynomial where forbidden,
/// linear input, zero denominator, ...).
class InvalidArgument : public std::invalid_argument {
 public:
    using std::invalid_argument::invalid_argument;
};

/// Text that does not match the expression grammar.
class ParseError : public InvalidArgument {
 public:
    ParseError(std::size_t position, const std::string& what)
        : InvalidArgument("syntax error at position " + std::to_string(position) + ": " + what),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

 private:
    std::size_t position_;
};

/// A criterion was asked to run outside the hypotheses it is proved under.
class HypothesisNotApplicable : public std::runtime_error {
 public:
    using std::runtime_error::runtime_error;
};

/// Numeric iteration failed to converge within its budget.
class NumericFailure : public std::runtime_error {
 public:
    using std::runtime_error::runtime_error;
};

/// An internal consistency check failed. Always a bug.
class InvariantViolation : public std::logic_error {
 public:
    using std::logic_error::logic_error;
};

}  // namespace sepcurve
