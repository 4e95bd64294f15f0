#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace sbarlab {

inline constexpr const char* kEngineVersion = "sbarlab 0.1.0";
inline constexpr int kSchemaVersion = 1;

enum class Status { Pass, Fail, Inconclusive };

std::string to_string(Status s);

struct CaseRecord {
    std::string name;
    std::string paper_anchor; // the mathematical statement the case exercises
    std::string provenance;   // identity | reference | oracle | measurement
    Status status = Status::Pass;
    nlohmann::ordered_json witness;
};

struct Summary {
    int pass = 0;
    int fail = 0;
    int inconclusive = 0;
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::string engine_version = kEngineVersion;
    std::vector<CaseRecord> cases; // sorted by name
    std::int64_t wall_time_ms = 0;

    Summary summary() const;
    int failures() const { return summary().fail; }
};

enum class Format { Json, Text };

nlohmann::ordered_json to_json(const SuiteReport& r);
/// JSON is pretty-printed with a stable field order; text is one line per case.
std::string emit_report(const SuiteReport& r, Format format);
/// Writes the serialized report; throws std::runtime_error if the destination is not writable.
void write_report(const SuiteReport& r, Format format, const std::string& path);

} // namespace sbarlab
