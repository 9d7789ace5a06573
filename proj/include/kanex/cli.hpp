#pragma once

// Command layer of the kanex tool: every engine operation as a named command over a parsed
// workspace, with a human-readable report and a versioned JSON form.

#include <kanex/dsl.hpp>
#include <kanex/enumerate.hpp>
#include <kanex/theorems.hpp>

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

namespace kanex {

inline constexpr int json_schema_version = 1;

enum ExitCode
{
    exit_computed = 0,
    exit_negative = 1,
    exit_error = 2,
};

struct OptionSpec
{
    std::string name;
    std::string help;
    bool repeatable = false;
};

struct CommandSpec
{
    std::string name;
    std::string help;
    std::vector<OptionSpec> options;
    /// Name of the positional argument, if the command takes one.
    std::string positional;
};

/// Every command with the command-specific options it accepts.
auto command_specs() -> const std::vector<CommandSpec> &;

struct CommandOptions
{
    std::vector<std::string> inputs;
    bool json = false;
    Budget budget;
    std::vector<Shape> shapes = default_shapes();
    bool seed_corpus = false;
    /// Command-specific options by name, in the order given.
    std::map<std::string, std::vector<std::string>> values;
    std::string positional;

    auto value(const std::string & name) const -> std::optional<std::string>;
    auto all(const std::string & name) const -> std::vector<std::string>;
};

struct CommandResult
{
    int exit_code = exit_computed;
    std::string text;
    nlohmann::json json;

    /// The text or the JSON document, as selected by the options.
    auto output(bool as_json) const -> std::string;
};

/// Runs a command. Engine and input errors are reported with exit code 2, never thrown.
auto run_command(const std::string & command, const Workspace & workspace, const CommandOptions & options) -> CommandResult;

/// Parses the inputs and runs the command; parse errors give exit code 2.
auto run_command(const std::string & command, const CommandOptions & options) -> CommandResult;

auto to_json(const TheoremReport & report) -> nlohmann::json;
auto render_text(const TheoremReport & report) -> std::string;

/// The example files shipped with the tool.
auto shipped_two_plus_two() -> const std::string &;
auto shipped_chain_closure() -> const std::string &;

}
