#pragma once

#include <ofms/task.hpp>
#include <ofms/trace.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ofms {

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// TAP file format: {"tasks": [{"f": numstr, "s": numstr|"inf", "t": numstr}]}
/// with values in the exact textual encoding, arrival-sorted.
Tap<QNum> parse_tap_json(const std::string& text);
std::string tap_to_json(const Tap<QNum>& tap);

Tap<QNum> read_tap_file(const std::string& path);
void write_tap_file(const std::string& path, const Tap<QNum>& tap);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// FNV-1a over the canonical task encoding; stable across platforms.
std::uint64_t tap_digest(const Tap<QNum>& tap);
std::string digest_hex(std::uint64_t digest);

} // namespace ofms
