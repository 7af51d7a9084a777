#include "broker/model/job.hpp"

#include "broker/errors.hpp"

namespace broker::model {

std::string to_string(JobState s) {
    switch (s) {
    case JobState::Ready: return "READY";
    case JobState::Scheduled: return "SCHEDULED";
    case JobState::StageIn: return "STAGE_IN";
    case JobState::Submitted: return "SUBMITTED";
    case JobState::Pending: return "PENDING";
    case JobState::Active: return "ACTIVE";
    case JobState::StageOut: return "STAGE_OUT";
    case JobState::Done: return "DONE";
    case JobState::Failed: return "FAILED";
    }
    return "?";
}

JobState job_state_from_string(const std::string& s) {
    for (int i = 0; i < kJobStateCount; ++i) {
        auto st = static_cast<JobState>(i);
        if (to_string(st) == s) return st;
    }
    throw Error("unknown job state '" + s + "'");
}

std::string to_string(EventKind e) {
    switch (e) {
    case EventKind::Scheduled: return "Scheduled";
    case EventKind::StageInStarted: return "StageInStarted";
    case EventKind::HandleObtained: return "HandleObtained";
    case EventKind::Queued: return "Queued";
    case EventKind::Started: return "Started";
    case EventKind::ExecutionComplete: return "ExecutionComplete";
    case EventKind::OutputsVerified: return "OutputsVerified";
    case EventKind::Failure: return "Failure";
    case EventKind::Reset: return "Reset";
    }
    return "?";
}

std::optional<JobState> transition_target(JobState state, EventKind event) {
    // Failure is legal from every state except the two sink states.
    if (event == EventKind::Failure) {
        if (state == JobState::Done || state == JobState::Failed) return std::nullopt;
        return JobState::Failed;
    }
    switch (state) {
    case JobState::Ready:
        if (event == EventKind::Scheduled) return JobState::Scheduled;
        break;
    case JobState::Scheduled:
        if (event == EventKind::StageInStarted) return JobState::StageIn;
        break;
    case JobState::StageIn:
        if (event == EventKind::HandleObtained) return JobState::Submitted;
        break;
    case JobState::Submitted:
        if (event == EventKind::Queued) return JobState::Pending;
        if (event == EventKind::Started) return JobState::Active;
        break;
    case JobState::Pending:
        if (event == EventKind::Started) return JobState::Active;
        break;
    case JobState::Active:
        if (event == EventKind::ExecutionComplete) return JobState::StageOut;
        break;
    case JobState::StageOut:
        if (event == EventKind::OutputsVerified) return JobState::Done;
        break;
    case JobState::Done:
        break;
    case JobState::Failed:
        if (event == EventKind::Reset) return JobState::Ready;
        break;
    }
    return std::nullopt;
}

Job transition(const Job& job, const TransitionEvent& event, TimeMs now) {
    auto target = transition_target(job.state, event.kind);
    if (!target)
        throw IllegalTransition(to_string(job.state), to_string(event.kind));

    Job next = job;
    next.state = *target;
    next.timestamps[*target] = now;

    switch (event.kind) {
    case EventKind::HandleObtained:
        next.remote_handle = event.handle;
        break;
    case EventKind::Failure:
        next.failure_reason = event.reason;
        break;
    case EventKind::Reset:
        next.attempts = job.attempts + 1;
        next.mapping.reset();
        next.remote_handle.reset();
        break;
    default:
        break;
    }
    return next;
}

bool is_terminal(const Job& job, int max_attempts) {
    if (job.state == JobState::Done) return true;
    return job.state == JobState::Failed && job.attempts >= max_attempts;
}

} // namespace broker::model
