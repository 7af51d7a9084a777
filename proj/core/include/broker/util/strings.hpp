#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace broker::util {

std::vector<std::string> split(const std::string& s, char sep);

std::string basename_of(const std::string& path);

/// POSIX fnmatch on a single name (no FNM_PATHNAME).
bool glob_match(const std::string& pattern, const std::string& name);

std::string hex_random_id(int bytes = 8);

/// Single-quote a string for /bin/sh.
std::string shell_quote(const std::string& s);

std::uint64_t splitmix64(std::uint64_t x);

/// Order-insensitive FNV/splitmix combination used to derive per-entity
/// RNG streams in the simulator.
std::uint64_t hash_combine(std::uint64_t seed, const std::string& s);
std::uint64_t hash_combine(std::uint64_t seed, std::uint64_t v);

} // namespace broker::util
