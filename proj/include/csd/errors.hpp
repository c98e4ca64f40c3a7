// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace csd {

// Common base so callers can report the failure kind without RTTI games.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define CSD_DEFINE_ERROR(NAME)                                        \
    class NAME : public Error {                                       \
    public:                                                           \
        explicit NAME(const std::string& what) : Error(#NAME, what) {} \
    }

CSD_DEFINE_ERROR(NotHermitian);
CSD_DEFINE_ERROR(TraceNotOne);
CSD_DEFINE_ERROR(NotPsd);
CSD_DEFINE_ERROR(NotCentrosymmetric);
CSD_DEFINE_ERROR(NotXForm);
CSD_DEFINE_ERROR(NotUnitary);
CSD_DEFINE_ERROR(NoConvergence);
CSD_DEFINE_ERROR(DomainError);
CSD_DEFINE_ERROR(NegativeEigenvalue);
CSD_DEFINE_ERROR(AnalyticNotApplicable);
CSD_DEFINE_ERROR(ParseError);

#undef CSD_DEFINE_ERROR

} // namespace csd
