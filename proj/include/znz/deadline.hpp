#pragma once

#include <chrono>
#include <string>

#include "znz/error.hpp"

namespace znz {

// Cooperative time budget.  Long-running loops call check() once per
// iteration; an expired deadline throws TimeBudgetError carrying a
// short description of how far the computation got.
struct Deadline {
    std::chrono::steady_clock::time_point until;

    static Deadline after_seconds(double s) {
        return Deadline{std::chrono::steady_clock::now() +
                        std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                            std::chrono::duration<double>(s))};
    }

    bool expired() const { return std::chrono::steady_clock::now() >= until; }

    void check(const std::string& progress) const {
        if (expired()) {
            throw TimeBudgetError("time budget exceeded", progress);
        }
    }
};

}  // namespace znz
