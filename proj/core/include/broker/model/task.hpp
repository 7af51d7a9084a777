#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "broker/model/value.hpp"

namespace broker::model {

enum class Endpoint { Local, Remote, DataHostEp };

/// One side of a Copy command: "local:<path>", "remote:<path>" or
/// "datahost:<id>:<path>". Remote paths are relative to the job workdir.
struct EndpointPath {
    Endpoint kind = Endpoint::Local;
    std::string datahost_id; // set when kind == DataHostEp
    std::string path;

    bool operator==(const EndpointPath&) const = default;

    static EndpointPath parse(const std::string& spec);
    std::string str() const;
};

struct CopyCommand {
    EndpointPath source;
    EndpointPath dest;
    bool operator==(const CopyCommand&) const = default;
};

struct ExecuteCommand {
    std::string cmd;
    std::vector<std::string> args;
    bool operator==(const ExecuteCommand&) const = default;
};

struct SubstituteCommand {
    std::string template_path; // local template file
    std::string dest;          // remote filename
    bool operator==(const SubstituteCommand&) const = default;
};

using TaskCommand = std::variant<CopyCommand, ExecuteCommand, SubstituteCommand>;

struct IntRange {
    std::int64_t from = 0, to = 0, step = 1;
    bool operator==(const IntRange&) const = default;
};

struct RealRange {
    double from = 0, to = 0, step = 1;
    bool operator==(const RealRange&) const = default;
};

struct StringList {
    std::vector<std::string> values;
    bool operator==(const StringList&) const = default;
};

/// Glob pattern over the logical names of a replica catalog.
struct GridPattern {
    std::string pattern;
    bool operator==(const GridPattern&) const = default;
};

struct Variable {
    std::string name;
    std::variant<IntRange, RealRange, StringList, GridPattern> domain;
    bool operator==(const Variable&) const = default;
};

struct Task {
    std::string task_id;
    std::vector<TaskCommand> commands;
    std::vector<Variable> variables;
    std::vector<std::string> expected_outputs; // may reference $jobid / variables
    std::optional<std::string> pinned_queue;
    bool operator==(const Task&) const = default;
};

enum class Optimization { None, Cost, Time };

struct QoS {
    std::optional<double> deadline_s; // from run start
    std::optional<double> budget;     // abstract currency units
    Optimization optimization = Optimization::None;
    bool operator==(const QoS&) const = default;
};

struct ApplicationContext {
    std::string app_id;
    std::string name;
    QoS qos;
    std::vector<std::string> credential_ids;
    std::vector<Task> tasks;
    bool operator==(const ApplicationContext&) const = default;
};

enum class CredentialKind { UserPass, KeyFile };

/// Credentials are transient: they are never serialized to the store.
struct Credential {
    std::string cred_id;
    CredentialKind kind = CredentialKind::UserPass;
    std::string user;
    std::string secret;   // resolved from env; in-memory only
    std::string key_path; // keyfile kind
};

std::string to_string(Optimization o);
Optimization optimization_from_string(const std::string& s);

} // namespace broker::model
