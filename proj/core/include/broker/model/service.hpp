#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace broker::model {

using TimeMs = std::int64_t;

enum class AdapterKind { Local, Ssh, Sim };

std::string to_string(AdapterKind k);
AdapterKind adapter_from_string(const std::string& s);

struct QueueSpec {
    std::string name;
    double max_wallclock_s = 0;
    int slots = 1;
    int in_flight = 0;
    bool operator==(const QueueSpec&) const = default;
};

enum class StagingMode { Push, Pull };

struct ComputeServer {
    std::string service_id;
    std::string uri;
    bool available = false;
    std::optional<TimeMs> last_probe;

    AdapterKind adapter = AdapterKind::Local;
    std::string architecture;
    std::string os;
    int slots = 1;
    std::vector<QueueSpec> queues;
    double price_per_cpu_s = 0;
    std::optional<std::string> credential_id;
    std::optional<double> observed_rate; // jobs per second, EWMA
    int in_flight = 0;
    int completed_this_run = 0;
    TimeMs cooldown_until = 0; // dispatch-failure penalty
    std::optional<StagingMode> staging; // per-server override

    bool operator==(const ComputeServer&) const = default;
};

struct FileEntry {
    std::string logical_name;
    std::string path;
    std::uint64_t size_bytes = 0;
    bool operator==(const FileEntry&) const = default;
};

enum class DataProtocol { LocalFs, Sftp, Sim };

struct DataHost {
    std::string service_id;
    std::string uri;
    bool available = false;
    std::optional<TimeMs> last_probe;

    DataProtocol protocol = DataProtocol::LocalFs;
    std::vector<FileEntry> files;
    double price_per_mb = 0;

    bool operator==(const DataHost&) const = default;
};

enum class InfoSubtype { ReplicaCatalog, MarketDirectory };

/// File-backed metadata service: a replica catalog (logical name ->
/// replicas) or a market directory (service id -> price overrides).
struct InformationService {
    std::string service_id;
    std::string uri;
    bool available = false;
    std::optional<TimeMs> last_probe;

    InfoSubtype subtype = InfoSubtype::ReplicaCatalog;
    std::string backing; // local file path

    bool operator==(const InformationService&) const = default;
};

struct NetworkLink {
    std::string service_id; // derived "link:<from>-><to>" when not given
    std::string from;       // "broker" or a service id; "*" = default link
    std::string to;
    double bandwidth_mbps = 0; // megabits per second
    double cost_per_mb = 0;    // per megabyte transferred
    std::optional<double> measured_mbps; // EWMA of observed throughput

    bool operator==(const NetworkLink&) const = default;
};

using Service = std::variant<ComputeServer, DataHost, InformationService, NetworkLink>;

const std::string& service_id(const Service& s);
bool service_available(const Service& s);

struct Replica {
    std::string datahost_id;
    std::string path;
    std::uint64_t size_bytes = 0;
    bool operator==(const Replica&) const = default;
};

/// logical name -> replicas, as resolved from catalogs and data hosts.
using ReplicaMap = std::map<std::string, std::vector<Replica>>;

} // namespace broker::model
