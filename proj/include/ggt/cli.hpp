#pragma once

/// Command-line front end. `run` parses arguments, executes one subcommand
/// and writes a Report as JSON (default) or text.
///
/// Exit codes: 0 all checks pass, 1 a check failed, 2 usage or domain error,
/// 3 a resource bound was exceeded.

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace ggt::cli {

inline constexpr const char* kVersion = "ggt 0.1.0";
inline constexpr int kSchema = 1;

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kBound = 3 };

struct Check {
    std::string name;
    bool pass = false;
    std::string witness;
    friend bool operator==(const Check&, const Check&) = default;
};

struct Report {
    std::string command;
    nlohmann::json inputs = nlohmann::json::object();
    nlohmann::json results = nlohmann::json::object();
    std::vector<Check> checks;
    std::string version = kVersion;
    int schema = kSchema;

    bool all_pass() const;
    friend bool operator==(const Report&, const Report&) = default;
};

void to_json(nlohmann::json& j, const Check& c);
void from_json(const nlohmann::json& j, Check& c);
void to_json(nlohmann::json& j, const Report& r);
void from_json(const nlohmann::json& j, Report& r);

std::string render_json(const Report& r);
std::string render_text(const Report& r);

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ggt::cli
