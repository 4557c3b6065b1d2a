#pragma once

#include <eoram/io.hpp>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace eoram
{
    struct ExperimentOptions
    {
        int threads = 1;
        std::uint64_t seed = 0;
    };

    struct ExperimentResult
    {
        std::string name;
        bool pass = false;
        std::string summary;
        io::json details;
        /// File name and document of every certificate produced.
        std::vector<std::pair<std::string, io::json>> certificates;
        double seconds = 0;
        double budget_seconds = 0;

        auto within_budget() const -> bool { return seconds <= budget_seconds; }
    };

    struct ExperimentInfo
    {
        std::string name;
        std::string description;
        double budget_seconds;
    };

    /// The reproducible experiments in acceptance order.
    auto experiments() -> const std::vector<ExperimentInfo> &;

    /// Throws InvalidArgument for an unknown name.
    auto run_experiment(const std::string & name, const ExperimentOptions & options = {}) -> ExperimentResult;

    /// Writes every certificate of the result into dir (created if needed) plus a summary.json.
    auto write_certificates(const ExperimentResult & result, const std::string & dir) -> void;
}
