#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>

namespace broker::model {

/// A logical file resolved from a replica catalog. Renders as the filename
/// the job will see in its working directory.
struct GridFileRef {
    std::string logical;
    bool operator==(const GridFileRef&) const = default;
    auto operator<=>(const GridFileRef&) const = default;
};

using Value = std::variant<std::int64_t, double, std::string, GridFileRef>;

using Bindings = std::map<std::string, Value>;

/// Canonical rendering: integers without decimal point, doubles shortest
/// round-trip, gridfiles as their staged (base) filename.
std::string render(const Value& v);

} // namespace broker::model
