#include "sbarlab/report.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sbarlab {

std::string to_string(Status s)
{
    switch (s) {
    case Status::Pass:
        return "pass";
    case Status::Fail:
        return "fail";
    default:
        return "inconclusive";
    }
}

Summary SuiteReport::summary() const
{
    Summary s;
    for (const auto& c : cases) {
        switch (c.status) {
        case Status::Pass:
            ++s.pass;
            break;
        case Status::Fail:
            ++s.fail;
            break;
        case Status::Inconclusive:
            ++s.inconclusive;
            break;
        }
    }
    return s;
}

nlohmann::ordered_json to_json(const SuiteReport& r)
{
    nlohmann::ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["suite"] = r.suite;
    j["seed"] = r.seed;
    j["engine_version"] = r.engine_version;
    const Summary s = r.summary();
    j["failures"] = s.fail;
    auto cases = nlohmann::ordered_json::array();
    for (const auto& c : r.cases) {
        nlohmann::ordered_json jc;
        jc["name"] = c.name;
        jc["paper_anchor"] = c.paper_anchor;
        jc["provenance"] = c.provenance;
        jc["status"] = to_string(c.status);
        jc["witness"] = c.witness;
        cases.push_back(std::move(jc));
    }
    j["cases"] = std::move(cases);
    j["summary"] = {{"pass", s.pass}, {"fail", s.fail}, {"inconclusive", s.inconclusive}};
    j["wall_time_ms"] = r.wall_time_ms;
    return j;
}

std::string emit_report(const SuiteReport& r, Format format)
{
    if (format == Format::Json)
        return to_json(r).dump(2) + "\n";
    std::ostringstream os;
    os << "suite " << r.suite << " (seed " << r.seed << ", " << r.engine_version << ")\n";
    for (const auto& c : r.cases) {
        os << "  " << to_string(c.status) << "  " << c.name;
        if (c.status != Status::Pass && !c.witness.is_null())
            os << "  " << c.witness.dump();
        os << '\n';
    }
    const Summary s = r.summary();
    os << "summary: " << s.pass << " pass, " << s.fail << " fail, " << s.inconclusive << " inconclusive ("
       << r.wall_time_ms << " ms)\n";
    return os.str();
}

void write_report(const SuiteReport& r, Format format, const std::string& path)
{
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write report to " + path);
    out << emit_report(r, format);
    if (!out)
        throw std::runtime_error("cannot write report to " + path);
}

} // namespace sbarlab
