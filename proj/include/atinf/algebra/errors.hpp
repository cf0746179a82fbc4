/*
   Copyright 2026 The atinf Authors

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

#ifndef ATINF_ALGEBRA_ERRORS_HPP
#define ATINF_ALGEBRA_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace atinf {

/// Base class of every error raised by the library. `code()` is a stable
/// identifier used in reports and JSON output.
class Error : public std::runtime_error {
   public:
    Error(std::string code, const std::string& what) : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

   private:
    std::string code_;
};

#define ATINF_DEFINE_ERROR(Name)                                                \
    class Name : public Error {                                                 \
       public:                                                                  \
        explicit Name(const std::string& what = #Name) : Error(#Name, what) {}  \
    };

// algebra
ATINF_DEFINE_ERROR(DivisionByZero)
ATINF_DEFINE_ERROR(FieldMismatch)
ATINF_DEFINE_ERROR(ZeroPolynomial)
ATINF_DEFINE_ERROR(NeedsExtension)
ATINF_DEFINE_ERROR(InexactDivision)
// chart
ATINF_DEFINE_ERROR(ConstantPolynomial)
ATINF_DEFINE_ERROR(NotAPointOfF)
// milnor
ATINF_DEFINE_ERROR(BothZero)
ATINF_DEFINE_ERROR(NonIsolatedForAllT)
ATINF_DEFINE_ERROR(NonIsolatedAtC)
// polar
ATINF_DEFINE_ERROR(TruncationExhausted)
ATINF_DEFINE_ERROR(DegeneratePolar)
// resolve
ATINF_DEFINE_ERROR(IrrationalCenter)
ATINF_DEFINE_ERROR(IncompleteResolution)
// affine / report
ATINF_DEFINE_ERROR(NonIsolatedCriticalLocus)
ATINF_DEFINE_ERROR(IncompleteAnalysis)
ATINF_DEFINE_ERROR(InternalInconsistency)

#undef ATINF_DEFINE_ERROR

/// Parse failure located at a byte offset of the input text.
class SyntaxError : public Error {
   public:
    SyntaxError(std::size_t offset, const std::string& msg, std::string code = "SyntaxError")
        : Error(std::move(code), msg + " at offset " + std::to_string(offset)), offset_(offset), message_(msg) {}
    std::size_t offset() const noexcept { return offset_; }
    const std::string& message() const noexcept { return message_; }

   private:
    std::size_t offset_;
    std::string message_;
};

class ExponentNotInteger : public SyntaxError {
   public:
    explicit ExponentNotInteger(std::size_t offset)
        : SyntaxError(offset, "exponent must be a nonnegative integer literal", "ExponentNotInteger") {}
};

class DepthExceeded : public SyntaxError {
   public:
    DepthExceeded(std::size_t offset, std::size_t limit)
        : SyntaxError(offset, "expression nesting exceeds " + std::to_string(limit), "DepthExceeded") {}
};

}  // namespace atinf

#endif
