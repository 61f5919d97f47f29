#pragma once

#include <stdexcept>
#include <string>

namespace losc {

// Base class for all domain-specific failures. The `code()` string is the
// machine-readable identifier reported by the CLI on stderr.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

#define LOSC_DEFINE_ERROR(Name)                                   \
    class Name : public Error {                                   \
    public:                                                       \
        explicit Name(const std::string& what) : Error(#Name, what) {} \
    }

LOSC_DEFINE_ERROR(DomainError);
LOSC_DEFINE_ERROR(PoleError);
LOSC_DEFINE_ERROR(SingularityError);
LOSC_DEFINE_ERROR(OriginError);
LOSC_DEFINE_ERROR(DomainExitError);
LOSC_DEFINE_ERROR(MaxStepsExceeded);
LOSC_DEFINE_ERROR(InsufficientCyclesError);
LOSC_DEFINE_ERROR(GridTooCoarse);
LOSC_DEFINE_ERROR(NotBoundStateError);
LOSC_DEFINE_ERROR(NotNormalizableError);
LOSC_DEFINE_ERROR(ImaginaryGError);
LOSC_DEFINE_ERROR(ConvergenceError);
LOSC_DEFINE_ERROR(DegenerateRecursionError);
LOSC_DEFINE_ERROR(ConfigError);

#undef LOSC_DEFINE_ERROR

} // namespace losc
