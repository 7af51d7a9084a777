#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "broker/model/service.hpp"
#include "broker/model/value.hpp"

namespace broker::model {

enum class JobState {
    Ready,
    Scheduled,
    StageIn,
    Submitted,
    Pending,
    Active,
    StageOut,
    Done,
    Failed,
};

constexpr int kJobStateCount = 9;

std::string to_string(JobState s);
JobState job_state_from_string(const std::string& s);

/// Scheduler's assignment of a job to one compute service plus per-file
/// data-host selections.
struct Mapping {
    std::string job_id;
    std::string compute_id;
    std::optional<std::string> queue;
    std::map<std::string, std::string> data_selection; // logical -> datahost
    double est_cost = 0;
    double est_duration_s = 0;
    bool operator==(const Mapping&) const = default;
};

/// Opaque adapter token for a submitted job; stable across broker restarts.
struct RemoteHandle {
    AdapterKind adapter = AdapterKind::Local;
    std::string token;
    std::string workdir;
    bool operator==(const RemoteHandle&) const = default;
};

/// Broker-side per-job accounting, persisted with the job.
struct JobMetrics {
    int poll_count = 0;
    double query_ms = 0;       // total querying time
    double submission_ms = -1; // mapped -> handle retrieved
    double termination_ms = -1; // stage-out + cleanup span
    double wallclock_ms = -1;  // submitted -> remote completion
    double compute_s = -1;     // measured execution duration
    double cost = 0;           // accrued cost of the successful attempt
    bool operator==(const JobMetrics&) const = default;
};

struct Job {
    std::string job_id;
    std::string task_id;
    Bindings bindings;
    JobState state = JobState::Ready;
    int attempts = 0;
    std::optional<Mapping> mapping;
    std::optional<RemoteHandle> remote_handle;
    std::map<JobState, TimeMs> timestamps; // entry instant per state
    std::optional<std::string> failure_reason;
    JobMetrics metrics;

    bool operator==(const Job&) const = default;
};

enum class EventKind {
    Scheduled,
    StageInStarted,
    HandleObtained,
    Queued,
    Started,
    ExecutionComplete,
    OutputsVerified,
    Failure,
    Reset,
};

constexpr int kEventKindCount = 9;

std::string to_string(EventKind e);

struct TransitionEvent {
    EventKind kind = EventKind::Scheduled;
    std::string reason;                 // Failure only
    std::optional<RemoteHandle> handle; // HandleObtained only

    static TransitionEvent scheduled() { return {EventKind::Scheduled, {}, {}}; }
    static TransitionEvent stage_in_started() { return {EventKind::StageInStarted, {}, {}}; }
    static TransitionEvent handle_obtained(RemoteHandle h) {
        return {EventKind::HandleObtained, {}, std::move(h)};
    }
    static TransitionEvent queued() { return {EventKind::Queued, {}, {}}; }
    static TransitionEvent started() { return {EventKind::Started, {}, {}}; }
    static TransitionEvent execution_complete() { return {EventKind::ExecutionComplete, {}, {}}; }
    static TransitionEvent outputs_verified() { return {EventKind::OutputsVerified, {}, {}}; }
    static TransitionEvent failure(std::string reason) {
        return {EventKind::Failure, std::move(reason), {}};
    }
    static TransitionEvent reset() { return {EventKind::Reset, {}, {}}; }
};

/// The target state for (state, event) if the edge is legal, nullopt
/// otherwise. Pure; the edge table is the single source of truth for
/// the lifecycle diagram.
std::optional<JobState> transition_target(JobState state, EventKind event);

/// Applies one lifecycle event and returns the new job value. Records the
/// entry timestamp, attaches the handle on HandleObtained, stores the
/// failure reason, and on Reset increments attempts and clears the mapping
/// and handle. Throws IllegalTransition for any off-diagram pair.
Job transition(const Job& job, const TransitionEvent& event, TimeMs now);

bool is_terminal(const Job& job, int max_attempts);

} // namespace broker::model
