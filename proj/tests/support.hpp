#pragma once

// Shared helpers for the test suites: deterministic random TAPs over small
// dyadic values, independent of the tapgen module under test.

#include <ofms/task.hpp>

#include <random>
#include <vector>

namespace ofms::test {

inline QNum q(long num, long den = 1) { return QNum::from_ratio(num, den); }

inline Task<QNum> task(int id, QNum f, QNum s, QNum t) {
    return Task<QNum>{id, std::move(f), std::move(s), std::move(t)};
}

/// TAP from (f, s, t) triples, ids in list order. Use QNum::infinity()
/// for infinite slow runtimes.
inline Tap<QNum> tap_of(std::vector<std::array<QNum, 3>> triples) {
    return make_tap<QNum>(std::move(triples));
}

/// Deterministic random TAP over dyadic values: f in (0, 4], s = f * k/4
/// with k in [4, 16] or infinite, arrivals in [0, 8].
inline Tap<QNum> random_tap(std::mt19937_64& rng, int max_tasks,
                            double p_infinite = 0.15) {
    std::uniform_int_distribution<int> count(0, max_tasks);
    std::uniform_int_distribution<long> f16(1, 64);     // f = f16/16
    std::uniform_int_distribution<long> slow4(4, 16);   // s = f * slow4/4
    std::uniform_int_distribution<long> t16(0, 128);    // t = t16/16
    std::bernoulli_distribution infinite(p_infinite);

    const int n = count(rng);
    std::vector<long> arrivals(n);
    for (auto& a : arrivals) a = t16(rng);
    std::sort(arrivals.begin(), arrivals.end());

    Tap<QNum> tap;
    for (int i = 0; i < n; ++i) {
        QNum f = q(f16(rng), 16);
        QNum s = infinite(rng) ? QNum::infinity() : f * q(slow4(rng), 4);
        tap.tasks.push_back(Task<QNum>{i, f, s, q(arrivals[i], 16)});
    }
    return tap;
}

} // namespace ofms::test
