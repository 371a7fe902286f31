#ifndef HAWKDOVE_CLI_HPP
#define HAWKDOVE_CLI_HPP

#include <string>

#include "hawkdove/config.hpp"
#include "hawkdove/sweep.hpp"

namespace hawkdove {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitIoError = 3;
inline constexpr int kExitGoldenMismatch = 4;

std::string cmd_analyze(const AnalysisConfig& cfg);                    // JSON report
std::string cmd_trajectory(const AnalysisConfig& cfg);                 // CSV t,p1,p2
std::string cmd_basins(const AnalysisConfig& cfg);                     // JSON report
std::string cmd_basins_csv(const AnalysisConfig& cfg);                 // CSV variant
std::string cmd_abm(const AnalysisConfig& cfg);                        // CSV with replicate ids
std::string cmd_plot(const AnalysisConfig& cfg);                       // SVG document
std::string cmd_sweep_csv(const SweepSpec& spec);                      // CSV, header included
std::string cmd_tables(bool& ok);                                      // report; ok = all golden

// Full command-line entry point; returns the process exit code.
int cli_main(int argc, const char* const* argv);

}  // namespace hawkdove

#endif
