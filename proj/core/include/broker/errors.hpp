#pragma once

#include <stdexcept>
#include <string>

namespace broker {

/// Base class for all broker errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// --- model ---

class IllegalTransition : public Error {
public:
    IllegalTransition(const std::string& state, const std::string& event)
        : Error("illegal transition: event '" + event + "' in state '" + state + "'") {}
};

class UnboundVariable : public Error {
public:
    explicit UnboundVariable(const std::string& name)
        : Error("unbound variable: $" + name), name(name) {}
    std::string name;
};

class EmptyDomain : public Error {
public:
    explicit EmptyDomain(const std::string& var)
        : Error("variable '" + var + "' has an empty domain") {}
};

class UnresolvedGridfile : public Error {
public:
    explicit UnresolvedGridfile(const std::string& pattern)
        : Error("gridfile pattern '" + pattern + "' matches no catalog entry") {}
};

// --- interpreters ---

class ParseError : public Error {
public:
    ParseError(const std::string& locus, const std::string& msg)
        : Error("parse error at " + locus + ": " + msg), locus(locus) {}
    std::string locus;
};

class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& msg) : Error("validation: " + msg) {}
};

class DuplicateServiceId : public Error {
public:
    explicit DuplicateServiceId(const std::string& id)
        : Error("duplicate service id '" + id + "'") {}
};

class UnknownServiceType : public Error {
public:
    explicit UnknownServiceType(const std::string& type)
        : Error("unknown service type '" + type + "'") {}
};

class MissingSecret : public Error {
public:
    explicit MissingSecret(const std::string& env)
        : Error("environment variable '" + env + "' is not set") {}
};

class MissingKeyfile : public Error {
public:
    explicit MissingKeyfile(const std::string& path)
        : Error("keyfile not found: " + path) {}
};

// --- persistence ---

class StoreIO : public Error {
public:
    explicit StoreIO(const std::string& msg) : Error("store: " + msg) {}
};

class Locked : public Error {
public:
    explicit Locked(const std::string& instance)
        : Error("instance '" + instance + "' is locked by another broker") {}
};

class VersionMismatch : public Error {
public:
    VersionMismatch(int found, int supported)
        : Error("store schema version " + std::to_string(found) +
                " unsupported (this build supports " + std::to_string(supported) + ")") {}
};

class NoSuchInstance : public Error {
public:
    explicit NoSuchInstance(const std::string& id)
        : Error("no such instance: " + id) {}
};

class MissingCredential : public Error {
public:
    explicit MissingCredential(const std::string& id)
        : Error("credential '" + id + "' was not supplied") {}
};

// --- scheduler ---

class NoReplica : public Error {
public:
    explicit NoReplica(const std::string& logical)
        : Error("no replica for logical file '" + logical + "'") {}
};

class NoFittingQueue : public Error {
public:
    explicit NoFittingQueue(const std::string& server, double est_s)
        : Error("no queue on '" + server + "' fits an estimated " +
                std::to_string(est_s) + " s job") {}
};

// --- execution ---

class UnsupportedAdapter : public Error {
public:
    explicit UnsupportedAdapter(const std::string& msg)
        : Error("adapter: " + msg) {}
};

class TransferFailed : public Error {
public:
    explicit TransferFailed(const std::string& file)
        : Error("transfer failed: " + file), file(file) {}
    std::string file;
};

class SubmitFailed : public Error {
public:
    explicit SubmitFailed(const std::string& msg) : Error("submit failed: " + msg) {}
};

class SubmitTimeout : public Error {
public:
    explicit SubmitTimeout(const std::string& msg) : Error("submit timed out: " + msg) {}
};

class PollFailed : public Error {
public:
    explicit PollFailed(const std::string& msg) : Error("poll failed: " + msg) {}
};

class RetrieveFailed : public Error {
public:
    explicit RetrieveFailed(const std::string& msg) : Error("retrieve failed: " + msg) {}
};

} // namespace broker
