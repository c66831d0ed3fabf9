// config.hpp — Flat key=value configuration files and figure presets

#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "qfridge/sweep.hpp"

namespace qfridge {

/// Names accepted by preset().
const std::vector<std::string>& preset_names();

/// Parameters, axes and backends of a named figure recipe. Throws std::invalid_argument.
SweepSpec preset(std::string_view name);

/// Applies one key=value assignment. Throws std::invalid_argument on unknown keys
/// or malformed values.
void apply_setting(SweepSpec& spec, std::string_view key, std::string_view value);

/// Reads lines of key = value; blank lines and lines starting with # are skipped.
void apply_config(SweepSpec& spec, std::istream& in);

/// "name:min:max:count"
Axis parse_axis(std::string_view text);

/// Comma-separated integers and ranges such as "1-10,20,30".
std::vector<int> parse_int_list(std::string_view text);

} // namespace qfridge
