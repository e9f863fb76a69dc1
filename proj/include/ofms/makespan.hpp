#pragma once

#include <ofms/task.hpp>

#include <span>
#include <utility>
#include <vector>

namespace ofms {

enum class Placement { Fast, Slow };

/// Per-task fast/slow assignment for a TAP (or TAP prefix); index i holds
/// task i's placement.
using AssignmentPlan = std::vector<Placement>;

/// Makespan of a single machine running (runtime, release) jobs non-idling
/// in the given order: load = max(load, t_j) + f_j. For jobs sorted by
/// release date this is the minimum achievable by any non-idling policy:
/// swapping two adjacent out-of-order jobs never decreases the finish of
/// the later one, so FIFO in release order is optimal.
template <Numeric N>
N fast_makespan(std::span<const std::pair<N, N>> jobs) {
    N load{};
    for (const auto& [runtime, release] : jobs) {
        if (load.compare(release) < 0) load = release;
        load += runtime;
    }
    return load;
}

template <Numeric N>
N fast_makespan(const std::vector<std::pair<N, N>>& jobs) {
    return fast_makespan(std::span<const std::pair<N, N>>(jobs));
}

/// Makespan of an assignment: fast tasks run FIFO on the fast machine,
/// each slow task occupies its own slow machine and finishes at t + s.
/// Placing an infinite-s task Slow yields an infinite result.
template <Numeric N>
N plan_makespan(std::span<const Task<N>> tasks, const AssignmentPlan& plan) {
    N fast_load{};
    N result{};
    for (size_t i = 0; i < tasks.size(); ++i) {
        const Task<N>& task = tasks[i];
        if (plan[i] == Placement::Fast) {
            if (fast_load.compare(task.arrival) < 0) fast_load = task.arrival;
            fast_load += task.fast_runtime;
            if (result.compare(fast_load) < 0) result = fast_load;
        } else {
            N done = task.arrival + task.slow_runtime;
            if (result.compare(done) < 0) result = done;
        }
    }
    return result;
}

template <Numeric N>
N plan_makespan(const Tap<N>& tap, const AssignmentPlan& plan) {
    return plan_makespan(tap.all(), plan);
}

} // namespace ofms
