// Runs every named experiment and prints one PASS/FAIL line per criterion. A criterion passes only
// when its experiment passes within its time budget.

#include <eoram/experiments.hpp>

#include <cstdio>
#include <exception>

using namespace eoram;

auto main() -> int
{
    int failures = 0;
    int index = 0;
    for (const auto & info : experiments()) {
        ++index;
        ExperimentResult result;
        bool ok = false;
        try {
            result = run_experiment(info.name, ExperimentOptions{1, 0});
            ok = result.pass && result.within_budget();
        }
        catch (const std::exception & e) {
            result.summary = std::string("error: ") + e.what();
        }
        failures += ! ok;
        std::printf("%s %2d %-14s %s [%.2f s of %.0f s]\n", ok ? "PASS" : "FAIL", index, info.name.c_str(),
                result.summary.c_str(), result.seconds, info.budget_seconds);
        std::fflush(stdout);
    }
    std::printf("%d/%d criteria passed\n", index - failures, index);
    return failures == 0 ? 0 : 1;
}
