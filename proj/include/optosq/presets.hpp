#pragma once

// Named starting configurations. This is the only place physical default
// values are written down.

#include <cstdint>
#include <string_view>
#include <vector>

#include "optosq/config.hpp"

namespace optosq {

/// Throws ConfigError for an unknown name.
RunConfig preset(std::string_view name);

std::vector<std::string_view> preset_names();

/// FNV-1a over the canonical form of every preset, in preset_names() order.
std::uint64_t preset_table_hash();

}  // namespace optosq
