#pragma once
// The verbs behind the `tilt` executable.  Each returns a Report; the exit code is read off
// the machine section's `verdict` line.

#include "tilt/alg_format.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tilt {

struct Report {
    std::map<std::string, std::string> machine;  // emitted sorted by key
    std::vector<std::string> human;
    std::string appendix;  // emitted ALG blocks, if any

    void set(const std::string& key, const std::string& value) { machine[key] = value; }
    void set(const std::string& key, bool value) { machine[key] = value ? "true" : "false"; }
    void set(const std::string& key, std::size_t value) { machine[key] = std::to_string(value); }
    std::string render() const;
    int exit_code() const;  // verified/ok 0, refuted 1, inconclusive 2, anything else 3
};

struct CommandOptions {
    std::optional<std::vector<std::size_t>> bound;
    std::uint64_t seed = 0;
};

Report cmd_check(const AlgDocument& doc, const std::string& complex, const CommandOptions& opt);
Report cmd_torsion(const AlgDocument& doc, const std::string& complex, const CommandOptions& opt);
Report cmd_endo(const AlgDocument& doc, const std::string& complex, const CommandOptions& opt);
// Empty module names stand for the zero module.
Report cmd_construct(const AlgDocument& doc, const std::string& x_gen, const std::string& y_cogen,
                     const CommandOptions& opt);
Report cmd_bb_verify(const AlgDocument& doc, const std::string& complex, const CommandOptions& opt);
Report cmd_enumerate(const AlgDocument& doc, const CommandOptions& opt);

// Error report for an exception escaping a verb.
Report error_report(const std::string& message);

}  // namespace tilt
