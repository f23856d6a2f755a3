#pragma once

#include "nhr/error.hpp"

#include <chrono>
#include <cstdint>
#include <optional>

namespace nhr {

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

/// Backtrack-node allowance shared by one search. Exceeding it raises
/// Timeout; callers that can bracket their answer catch it.
class Budget {
public:
    using Clock = std::chrono::steady_clock;

    explicit Budget(std::uint64_t nodes = kDefaultNodeBudget,
                    std::optional<Clock::time_point> deadline = std::nullopt)
        : limit_(nodes), deadline_(deadline)
    {
    }

    void charge(std::uint64_t n = 1)
    {
        used_ += n;
        if (used_ > limit_) throw Error(ErrorKind::Timeout, "node budget exhausted", static_cast<long long>(limit_));
        if (deadline_ && (used_ & 0xFFF) < n && Clock::now() > *deadline_)
            throw Error(ErrorKind::Timeout, "wall-clock deadline passed");
    }

    std::uint64_t used() const { return used_; }
    std::uint64_t limit() const { return limit_; }
    std::optional<Clock::time_point> deadline() const { return deadline_; }

    /// Fresh budget with the same limits, for an independent subtree.
    Budget fresh() const { return Budget(limit_, deadline_); }

private:
    std::uint64_t limit_;
    std::uint64_t used_ = 0;
    std::optional<Clock::time_point> deadline_;
};

}  // namespace nhr
