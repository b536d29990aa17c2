#ifndef HOMWB_REPORT_HPP
#define HOMWB_REPORT_HPP

#include <json.hpp>

#include "homwb/audit.hpp"
#include "homwb/workspace.hpp"

namespace homwb {

inline constexpr const char* kToolVersion = "homwb 1.0";
inline constexpr int kReportSchema = 1;

struct RunOptions {
    std::size_t depth = 8;
    std::size_t cap = 8;
    std::size_t k = 1;
    std::size_t m = 1;
    unsigned long seed = 1;
    std::size_t sample_size = 30;
    bool override_hypotheses = false;
    std::string module_name;  // resolve: restrict to this module when set
    std::string theorem;      // audit: 1 | 2 | dd | gen | transfer | injdim
};

/// Structured result of one command run. Deterministic: identical input
/// text, options, and tool version give byte-identical to_json output.
/// Timing never enters the structured form.
struct ReportDocument {
    std::string version = kToolVersion;
    int schema = kReportSchema;
    std::string command;
    std::string input_digest;  // fnv-1a of the workspace text
    nlohmann::ordered_json body;
    int exit_code = 0;  // 0 ok, 4 when an audit reports a refutation
};

/// command is inspect, resolve, invariants, or audit. Throws ParseError on
/// malformed workspaces, std::invalid_argument on certification failures
/// and unknown commands/theorems.
ReportDocument run_command(const std::string& command, const std::string& workspace_text,
                           const RunOptions& opts = {});

std::string to_json(const ReportDocument& doc);
/// Prose rendering; the elapsed time appears only here.
std::string to_text(const ReportDocument& doc, double elapsed_seconds);

std::string fnv1a_digest(const std::string& text);

}  // namespace homwb

#endif
