#pragma once

#include <ofms/task.hpp>

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ofms {

/// Commitment contract a run is executed under.
///  - Instant: every task must start at its arrival event, irrevocably.
///  - Eventual: starts may be delayed but are irrevocable (no Cancel).
///  - Never: running tasks may be cancelled and restarted elsewhere,
///    losing all progress.
enum class CommitmentModel { Instant, Eventual, Never };

inline std::string_view commitment_model_name(CommitmentModel m) {
    switch (m) {
        case CommitmentModel::Instant: return "instant";
        case CommitmentModel::Eventual: return "eventual";
        case CommitmentModel::Never: return "never";
    }
    return "?";
}

inline std::optional<CommitmentModel> parse_commitment_model(std::string_view s) {
    if (s == "instant") return CommitmentModel::Instant;
    if (s == "eventual") return CommitmentModel::Eventual;
    if (s == "never") return CommitmentModel::Never;
    return std::nullopt;
}

enum class EventKind {
    Arrive,
    StartFast,
    StartSlow,
    FinishFast,
    FinishSlow,
    Cancel,
    Truncate,
};

inline std::string_view event_kind_name(EventKind k) {
    switch (k) {
        case EventKind::Arrive: return "arrive";
        case EventKind::StartFast: return "start-fast";
        case EventKind::StartSlow: return "start-slow";
        case EventKind::FinishFast: return "finish-fast";
        case EventKind::FinishSlow: return "finish-slow";
        case EventKind::Cancel: return "cancel";
        case EventKind::Truncate: return "truncate";
    }
    return "?";
}

inline std::optional<EventKind> parse_event_kind(std::string_view s) {
    for (EventKind k : {EventKind::Arrive, EventKind::StartFast, EventKind::StartSlow,
                        EventKind::FinishFast, EventKind::FinishSlow, EventKind::Cancel,
                        EventKind::Truncate}) {
        if (event_kind_name(k) == s) return k;
    }
    return std::nullopt;
}

/// One timestamped simulation event. `machine` is the slow-machine id for
/// StartSlow/FinishSlow, -1 otherwise; `task` is -1 for Truncate.
template <Numeric N>
struct Event {
    N time{};
    EventKind kind = EventKind::Arrive;
    int task = -1;
    int machine = -1;
};

/// Time-ordered log of a run; the ground truth for makespan and
/// diagnostics.
template <Numeric N>
struct Trace {
    std::vector<Event<N>> events;

    bool empty() const { return events.empty(); }
    int size() const { return static_cast<int>(events.size()); }
};

class TraceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Timestamp of the last finish event; 0 for an empty trace. Throws
/// TraceError if some arrived, untruncated task never finishes.
template <Numeric N>
N trace_makespan(const Trace<N>& trace) {
    std::map<int, bool> finished;
    N last{};
    for (const Event<N>& ev : trace.events) {
        switch (ev.kind) {
            case EventKind::Arrive:
                finished.emplace(ev.task, false);
                break;
            case EventKind::FinishFast:
            case EventKind::FinishSlow:
                finished[ev.task] = true;
                if (ev.time.compare(last) > 0) last = ev.time;
                break;
            default:
                break;
        }
    }
    for (const auto& [task, done] : finished) {
        if (!done) {
            std::ostringstream msg;
            msg << "incomplete trace: task " << task << " never finishes";
            throw TraceError(msg.str());
        }
    }
    return last;
}

/// Checks every Trace invariant against its TAP: timestamp monotonicity,
/// per-timestamp phase order (arrivals, then finishes, then commands),
/// start/finish matching, machine exclusivity, and the commitment rules of
/// `model`. Returns the first violation, or nullopt.
template <Numeric N>
std::optional<std::string> validate_trace(const Tap<N>& tap, const Trace<N>& trace,
                                          CommitmentModel model) {
    auto fail = [](int index, const std::string& what) {
        std::ostringstream msg;
        msg << "event " << index << ": " << what;
        return msg.str();
    };
    auto phase = [](EventKind k) {
        switch (k) {
            case EventKind::Arrive: return 0;
            case EventKind::FinishFast:
            case EventKind::FinishSlow: return 1;
            default: return 2;
        }
    };

    enum class St { Unarrived, Standby, RunningFast, RunningSlow, Finished };
    std::vector<St> state(tap.tasks.size(), St::Unarrived);
    std::vector<int> starts(tap.tasks.size(), 0);
    std::map<int, int> slow_occupant; // machine id -> task
    int fast_occupant = -1;
    int next_arrival = 0;

    for (int i = 0; i < trace.size(); ++i) {
        const Event<N>& ev = trace.events[i];
        if (i > 0) {
            const int c = ev.time.compare(trace.events[i - 1].time);
            if (c < 0) return fail(i, "timestamp decreases");
            if (c == 0 && phase(ev.kind) < phase(trace.events[i - 1].kind))
                return fail(i, "phase order violated within timestamp");
        }
        const bool has_task = ev.kind != EventKind::Truncate;
        if (has_task && (ev.task < 0 || ev.task >= tap.size()))
            return fail(i, "unknown task id");
        switch (ev.kind) {
            case EventKind::Arrive:
                if (ev.task != next_arrival) return fail(i, "arrival out of TAP order");
                if (tap.tasks[ev.task].arrival.compare(ev.time) != 0)
                    return fail(i, "arrival time differs from TAP");
                state[ev.task] = St::Standby;
                ++next_arrival;
                break;
            case EventKind::StartFast:
                if (state[ev.task] != St::Standby) return fail(i, "start of non-standby task");
                if (fast_occupant >= 0) return fail(i, "fast machine already busy");
                fast_occupant = ev.task;
                state[ev.task] = St::RunningFast;
                ++starts[ev.task];
                break;
            case EventKind::StartSlow:
                if (state[ev.task] != St::Standby) return fail(i, "start of non-standby task");
                if (!slow_occupant.emplace(ev.machine, ev.task).second)
                    return fail(i, "slow machine already occupied");
                state[ev.task] = St::RunningSlow;
                ++starts[ev.task];
                break;
            case EventKind::FinishFast:
                if (state[ev.task] != St::RunningFast || fast_occupant != ev.task)
                    return fail(i, "finish does not match a running fast task");
                fast_occupant = -1;
                state[ev.task] = St::Finished;
                break;
            case EventKind::FinishSlow: {
                auto it = slow_occupant.find(ev.machine);
                if (state[ev.task] != St::RunningSlow || it == slow_occupant.end() ||
                    it->second != ev.task)
                    return fail(i, "finish does not match a running slow task");
                slow_occupant.erase(it);
                state[ev.task] = St::Finished;
                break;
            }
            case EventKind::Cancel:
                if (model != CommitmentModel::Never)
                    return fail(i, "cancel outside the never-committing model");
                if (state[ev.task] == St::RunningFast) {
                    fast_occupant = -1;
                } else if (state[ev.task] == St::RunningSlow) {
                    for (auto it = slow_occupant.begin(); it != slow_occupant.end(); ++it) {
                        if (it->second == ev.task) {
                            slow_occupant.erase(it);
                            break;
                        }
                    }
                } else {
                    return fail(i, "cancel of a task that is not running");
                }
                state[ev.task] = St::Standby;
                break;
            case EventKind::Truncate:
                break;
        }
        if (model != CommitmentModel::Never && ev.kind != EventKind::Truncate &&
            starts[ev.task] > 1)
            return fail(i, "task started twice under an irrevocable model");
    }
    return std::nullopt;
}

/// Tab-separated trace encoding, one event per line:
/// time<TAB>kind<TAB>task-id[<TAB>machine-id]. Truncate uses "-" as its
/// task id.
template <Numeric N>
std::string trace_to_tsv(const Trace<N>& trace) {
    std::ostringstream out;
    for (const Event<N>& ev : trace.events) {
        out << ev.time.str() << '\t' << event_kind_name(ev.kind) << '\t';
        if (ev.kind == EventKind::Truncate) {
            out << '-';
        } else {
            out << ev.task;
        }
        if (ev.machine >= 0) out << '\t' << ev.machine;
        out << '\n';
    }
    return out.str();
}

template <Numeric N>
Trace<N> trace_from_tsv(const std::string& text) {
    Trace<N> trace;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::vector<std::string> fields;
        size_t begin = 0;
        while (begin <= line.size()) {
            size_t tab = line.find('\t', begin);
            if (tab == std::string::npos) {
                fields.push_back(line.substr(begin));
                break;
            }
            fields.push_back(line.substr(begin, tab - begin));
            begin = tab + 1;
        }
        auto bad = [&](const std::string& what) {
            std::ostringstream msg;
            msg << "trace line " << lineno << ": " << what;
            return TraceError(msg.str());
        };
        if (fields.size() < 3) throw bad("expected time, kind, task fields");
        Event<N> ev;
        try {
            ev.time = N::parse(fields[0]);
        } catch (const std::exception& e) {
            throw bad(e.what());
        }
        auto kind = parse_event_kind(fields[1]);
        if (!kind) throw bad("unknown event kind '" + fields[1] + "'");
        ev.kind = *kind;
        if (fields[2] != "-") ev.task = std::stoi(fields[2]);
        if (fields.size() > 3) ev.machine = std::stoi(fields[3]);
        trace.events.push_back(std::move(ev));
    }
    return trace;
}

} // namespace ofms
