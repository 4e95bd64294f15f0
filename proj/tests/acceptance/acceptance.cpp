// One PASS/FAIL line per acceptance criterion, at the pinned degrees and time limits.
#include "sbarlab/suites.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace sbarlab;

namespace {

struct Run {
    std::string suite;
    int degree;
};

struct Criterion {
    int id;
    std::vector<Run> runs;
    double limit_s;
    std::function<bool(const std::vector<SuiteReport>&)> extra;
};

bool has_passing(const SuiteReport& r, const std::string& prefix, int count)
{
    int seen = 0;
    for (const auto& c : r.cases)
        if (c.name.rfind(prefix, 0) == 0) {
            if (c.status != Status::Pass)
                return false;
            ++seen;
        }
    return seen >= count;
}

bool sigma_bound(const SuiteReport& r)
{
    for (const auto& c : r.cases)
        if (c.name.rfind("search/", 0) == 0) {
            const auto& m = c.witness["minimal_m"];
            return m.is_number_integer() && m.get<int>() <= 4;
        }
    return false;
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, {{"jacobi", 4}, {"bracket-crosscheck", 4}}, 30, nullptr},
        {2, {{"divergence", 6}}, 5, nullptr},
        {3, {{"phi-hom", 3}}, 60, nullptr},
        {4, {{"action-axioms", 4}}, 60, nullptr},
        {5, {{"whittaker-dim", 6}}, 30, nullptr},
        {6, {{"freeness", 4}}, 60, nullptr},
        {7, {{"y-centralizer", 4}}, 120,
         [](const std::vector<SuiteReport>& r) {
             return has_passing(r[0], "display/Y", 4) && has_passing(r[0], "display/xi", 4);
         }},
        {8, {{"g-recurrence", 5}}, 10, nullptr},
        {9, {{"xi-whittaker", 4}, {"pi1-compare", 0}}, 60, nullptr},
        {10, {{"closure", 6}}, 300, nullptr},
        {11, {{"sigma-annihilation", 6}}, 120, [](const std::vector<SuiteReport>& r) { return sigma_bound(r[0]); }},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::vector<SuiteReport> reports;
        bool ok = true;
        std::string detail;
        try {
            for (const auto& run : c.runs) {
                SuiteOptions o;
                o.max_degree = run.degree;
                reports.push_back(run_suite(run.suite, o));
                const int f = reports.back().failures();
                if (reports.back().cases.empty()) {
                    ok = false;
                    detail += " " + run.suite + ": no cases";
                }
                if (f > 0) {
                    ok = false;
                    detail += " " + run.suite + ":" + std::to_string(f) + " failing";
                }
            }
            if (ok && c.extra && !c.extra(reports)) {
                ok = false;
                detail += " extra check failed";
            }
        } catch (const std::exception& e) {
            ok = false;
            detail += std::string(" error: ") + e.what();
        }
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        if (ms > c.limit_s * 1000) {
            ok = false;
            detail += " over time limit";
        }
        std::printf("criterion %d: %s (%.0f ms, limit %.0f s)%s\n", c.id, ok ? "PASS" : "FAIL", ms, c.limit_s,
                    detail.c_str());
        std::fflush(stdout);
        failed += ok ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}
