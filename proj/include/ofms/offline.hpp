#pragma once

#include <ofms/makespan.hpp>
#include <ofms/task.hpp>

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace ofms {

/// Result of the offline optimal assignment. `completion` is C,
/// `fast_runtime` is the runtime of the fast machine (C-tilde),
/// `threshold_task` identifies the candidate assignment that won
/// (nullopt = the all-fast assignment).
template <Numeric N>
struct OptResult {
    AssignmentPlan plan;
    N completion{};
    N fast_runtime{};
    std::optional<int> threshold_task;
};

namespace detail {

template <Numeric N>
void evaluate_plan(std::span<const Task<N>> tasks, const AssignmentPlan& plan,
                   N& completion, N& fast_runtime) {
    N fast_load{};
    N slow_max{};
    for (size_t j = 0; j < tasks.size(); ++j) {
        if (plan[j] == Placement::Fast) {
            if (fast_load.compare(tasks[j].arrival) < 0) fast_load = tasks[j].arrival;
            fast_load += tasks[j].fast_runtime;
        } else {
            N done = tasks[j].arrival + tasks[j].slow_runtime;
            if (slow_max.compare(done) < 0) slow_max = done;
        }
    }
    fast_runtime = fast_load;
    completion = fast_load.compare(slow_max) < 0 ? slow_max : fast_load;
}

} // namespace detail

/// The offline optimal assignment. Evaluates the all-fast assignment plus,
/// for every finite-s task i, the assignment that sends task j to a slow
/// machine iff s_j + t_j <= s_i + t_i, and returns a minimum-completion
/// plan. Ties are broken toward the largest slow threshold (all-fast
/// counting as the smallest), so the winner places a task Slow whenever
/// that does not increase the completion time.
template <Numeric N>
OptResult<N> opt(std::span<const Task<N>> tasks) {
    const size_t n = tasks.size();
    OptResult<N> best;
    best.plan.assign(n, Placement::Fast);
    detail::evaluate_plan(tasks, best.plan, best.completion, best.fast_runtime);
    std::optional<N> best_threshold;

    AssignmentPlan plan(n, Placement::Fast);
    for (size_t i = 0; i < n; ++i) {
        if (tasks[i].slow_runtime.is_infinite()) continue;
        const N threshold = largeness(tasks[i]);
        for (size_t j = 0; j < n; ++j) {
            plan[j] = largeness(tasks[j]).compare(threshold) <= 0 ? Placement::Slow
                                                                  : Placement::Fast;
        }
        N completion, fast_runtime;
        detail::evaluate_plan(tasks, plan, completion, fast_runtime);
        const int cmp = completion.compare(best.completion);
        const bool wins =
            cmp < 0 ||
            (cmp == 0 && (!best_threshold || threshold.compare(*best_threshold) > 0));
        if (wins) {
            best.plan = plan;
            best.completion = completion;
            best.fast_runtime = fast_runtime;
            best.threshold_task = static_cast<int>(i);
            best_threshold = threshold;
        }
    }
    return best;
}

template <Numeric N>
OptResult<N> opt(const Tap<N>& tap) {
    return opt(tap.all());
}

/// opt() applied to the sub-TAP of tasks with arrival time <= t.
template <Numeric N>
OptResult<N> opt_prefix(const Tap<N>& tap, const N& t) {
    return opt(tap.prefix(tap.prefix_count(t)));
}

/// Independent oracle: enumerates every fast/slow assignment (skipping
/// Slow for infinite-s tasks) and returns a minimum-makespan plan. Only
/// the completion time is a contract; which minimizing plan is returned
/// is unspecified. Throws std::invalid_argument beyond `cap` tasks.
template <Numeric N>
OptResult<N> brute_force_opt(const Tap<N>& tap, int cap = 16) {
    const int n = tap.size();
    if (n > cap) throw std::invalid_argument("brute_force_opt: TAP exceeds cap");
    std::vector<int> movable;
    for (int i = 0; i < n; ++i) {
        if (!tap.tasks[i].slow_runtime.is_infinite()) movable.push_back(i);
    }
    OptResult<N> best;
    best.plan.assign(n, Placement::Fast);
    detail::evaluate_plan(tap.all(), best.plan, best.completion, best.fast_runtime);

    AssignmentPlan plan(n, Placement::Fast);
    for (unsigned long mask = 1; mask < (1ul << movable.size()); ++mask) {
        for (size_t b = 0; b < movable.size(); ++b) {
            plan[movable[b]] = (mask >> b) & 1 ? Placement::Slow : Placement::Fast;
        }
        N completion, fast_runtime;
        detail::evaluate_plan(tap.all(), plan, completion, fast_runtime);
        if (completion.compare(best.completion) < 0) {
            best.plan = plan;
            best.completion = completion;
            best.fast_runtime = fast_runtime;
        }
    }
    return best;
}

/// R(P): the earliest time at which the prefix completion C^t reaches P.
/// C^t is a right-continuous step function jumping only at arrivals, so the
/// answer is an arrival time; 0 if P <= 0; nullopt if even the full TAP's
/// completion stays below P.
template <Numeric N>
std::optional<N> r_of(const Tap<N>& tap, const N& P) {
    if (P.compare(N{}) <= 0) return N{};
    for (int m = 1; m <= tap.size(); ++m) {
        // Evaluate only at the end of each arrival-time tie group.
        if (m < tap.size() &&
            tap.tasks[m].arrival.compare(tap.tasks[m - 1].arrival) == 0)
            continue;
        OptResult<N> result = opt(tap.prefix(m));
        if (result.completion.compare(P) >= 0) return tap.tasks[m - 1].arrival;
    }
    return std::nullopt;
}

} // namespace ofms
