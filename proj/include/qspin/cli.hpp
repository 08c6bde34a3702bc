#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qspin/identities.hpp"
#include "qspin/io.hpp"
#include "qspin/partitions.hpp"

namespace qspin {

struct cli_config {
    std::string command; // verify, verify-all, coeffs, partitions, table, suite
    std::optional<std::string> id;
    std::optional<int> order;
    std::optional<int> n;
    std::optional<int> n_max;
    partition_class cls = partition_class::all;
    std::optional<weight_kind> weight;
    side which = side::lhs;
    output_format format = output_format::text;
    std::optional<std::string> out_path;
};

inline constexpr int exit_ok = 0;
inline constexpr int exit_failed = 1;
inline constexpr int exit_usage = 2;

// Executes one command. Exit 0 on success, 1 on a failed verification or
// positivity violation, 2 on a usage error (message on err).
int run(const cli_config& config, std::ostream& out, std::ostream& err);

// Parses argv (including the program name) and runs the command.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qspin
