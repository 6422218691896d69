#ifndef TOR3_COMMANDS_HPP
#define TOR3_COMMANDS_HPP

#include <optional>
#include <ostream>
#include <string>

#include "tor3/monomial.hpp"

namespace tor3 {

/// Options shared by the subcommands (mirrors the CLI flags).
struct CliOptions {
    std::optional<long long> characteristic;  // --char, overrides any file value
    OrderKind order = OrderKind::degrevlex;   // --order
    std::optional<int> max_degree;            // --max-degree, caps the homology scan
    bool json = false;                        // --json
    bool tables = false;                      // --tables
    bool quiet = false;                       // --quiet
};

/// Classifies one ideal given as a file and/or an inline generator list.
/// Exit codes: 0 classified, 1 input error, 2 gate rejected, 3 unclassified.
int cmd_classify(const std::optional<std::string>& file,
                 const std::optional<std::string>& inline_ideal, const CliOptions& options,
                 std::ostream& out, std::ostream& err);

/// Classifies the eight built-in ideals against their expected data.
/// Exit codes: 0 all pass, 1 any mismatch.
int cmd_corpus(const CliOptions& options, std::ostream& out, std::ostream& err);

/// Runs the invariant audit on one ideal.  Exit codes: 0 all checks pass,
/// 1 input error or failed check, 2 gate rejected.
int cmd_verify(const std::optional<std::string>& file,
               const std::optional<std::string>& inline_ideal, const CliOptions& options,
               std::ostream& out, std::ostream& err);

}  // namespace tor3

#endif
