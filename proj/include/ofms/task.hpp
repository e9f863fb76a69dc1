#pragma once

#include <ofms/numeric.hpp>

#include <array>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

namespace ofms {

/// One task: fast-machine runtime f, slow-machine runtime s (possibly
/// infinite), arrival time t. Constraints: t >= 0, s >= f > 0, f and t
/// finite.
template <Numeric N>
struct Task {
    int id = 0;
    N fast_runtime{};
    N slow_runtime{};
    N arrival{};
};

/// Largeness of a task is s + t; tasks with infinite slow runtime are
/// larger than every finite-s task.
template <Numeric N>
N largeness(const Task<N>& task) {
    return task.slow_runtime + task.arrival;
}

enum class Larger { Left, Right, Tie };

template <Numeric N>
Larger larger(const Task<N>& x, const Task<N>& y) {
    const int c = largeness(x).compare(largeness(y));
    if (c > 0) return Larger::Left;
    if (c < 0) return Larger::Right;
    return Larger::Tie;
}

/// Task arrival process: tasks ordered by non-decreasing arrival time,
/// ids 0..n-1 in list order. Simultaneous arrivals keep list order.
template <Numeric N>
struct Tap {
    std::vector<Task<N>> tasks;

    int size() const { return static_cast<int>(tasks.size()); }
    bool empty() const { return tasks.empty(); }

    /// Number of tasks with arrival time <= t (a list prefix, since the
    /// list is arrival-sorted).
    int prefix_count(const N& t) const {
        int m = 0;
        while (m < size() && tasks[m].arrival.compare(t) <= 0) ++m;
        return m;
    }

    std::span<const Task<N>> prefix(int count) const {
        return std::span<const Task<N>>(tasks.data(), static_cast<size_t>(count));
    }
    std::span<const Task<N>> all() const { return prefix(size()); }
};

/// Convenience constructor from (f, s, t) triples; ids assigned in order.
template <Numeric N>
Tap<N> make_tap(std::vector<std::array<N, 3>> triples) {
    Tap<N> tap;
    int id = 0;
    for (auto& tr : triples) {
        tap.tasks.push_back(Task<N>{id++, tr[0], tr[1], tr[2]});
    }
    return tap;
}

/// Checks every Task and Tap invariant; returns the first violation as a
/// human-readable message, or nullopt when the TAP is valid.
template <Numeric N>
std::optional<std::string> validate_tap(const Tap<N>& tap) {
    const N zero{};
    for (int i = 0; i < tap.size(); ++i) {
        const Task<N>& task = tap.tasks[i];
        std::ostringstream msg;
        msg << "task " << i << ": ";
        if (task.id != i) {
            msg << "id " << task.id << " does not match list position";
            return msg.str();
        }
        if (task.arrival.is_infinite()) {
            msg << "arrival time must be finite";
            return msg.str();
        }
        if (task.arrival.compare(zero) < 0) {
            msg << "arrival time " << task.arrival.str() << " < 0";
            return msg.str();
        }
        if (task.fast_runtime.is_infinite()) {
            msg << "fast runtime must be finite";
            return msg.str();
        }
        if (task.fast_runtime.compare(zero) <= 0) {
            msg << "fast runtime " << task.fast_runtime.str() << " <= 0";
            return msg.str();
        }
        if (task.slow_runtime.compare(task.fast_runtime) < 0) {
            msg << "slow runtime " << task.slow_runtime.str() << " < fast runtime "
                << task.fast_runtime.str();
            return msg.str();
        }
        if (i > 0 && task.arrival.compare(tap.tasks[i - 1].arrival) < 0) {
            msg << "arrival time " << task.arrival.str()
                << " precedes task " << (i - 1);
            return msg.str();
        }
    }
    return std::nullopt;
}

inline Tap<FNum> to_float(const Tap<QNum>& tap) {
    Tap<FNum> out;
    out.tasks.reserve(tap.tasks.size());
    for (const auto& t : tap.tasks) {
        out.tasks.push_back(Task<FNum>{t.id, FNum::from_qnum(t.fast_runtime),
                                       FNum::from_qnum(t.slow_runtime),
                                       FNum::from_qnum(t.arrival)});
    }
    return out;
}

} // namespace ofms
