#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nhr {

enum class ErrorKind {
    SizeLimit,
    OverlappingSets,
    EmptySet,
    Precondition,
    HypothesisFails,
    BudgetExhausted,
    Timeout,
    InternalExhaustion,
    ConstructionFailed,
    BankExhausted,
    ParameterMismatch,
    Undecidable,
    NoneFound,
    StepFailed,
    LadderStuck,
    CacheCorrupt,
    Defect,
    Parse,
};

std::string_view to_string(ErrorKind kind);

/// Every recoverable failure of the library. `detail` carries the one
/// integer some errors report (step index, blocking vertex, line number).
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what, std::optional<long long> detail = std::nullopt)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), detail_(detail)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }
    std::optional<long long> detail() const noexcept { return detail_; }

private:
    ErrorKind kind_;
    std::optional<long long> detail_;
};

inline void require(bool condition, ErrorKind kind, const std::string& what)
{
    if (!condition) throw Error(kind, what);
}

}  // namespace nhr
