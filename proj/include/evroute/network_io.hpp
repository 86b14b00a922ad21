#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "evroute/network.hpp"

namespace evroute {

/// Parses the JSON network document. Reliability is read as a percentage
/// (`reliability_pct`) and stored as a fraction.
[[nodiscard]] Network parse_network(std::string_view text);

/// Inverse of parse_network.
[[nodiscard]] std::string render_network(const Network& net);

[[nodiscard]] Network load_network(const std::filesystem::path& path);

/// Path of the bundled case-study fixture, as configured at build time.
[[nodiscard]] std::filesystem::path bundled_fixture_path();

}  // namespace evroute
