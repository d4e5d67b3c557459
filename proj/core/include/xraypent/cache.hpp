#pragma once

// Cache directory resolution and crash-safe file writes.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace xraypent {

/// --cache flag, else $XRAYPENT_CACHE, else $XDG_CACHE_HOME/xraypent, else
/// ~/.cache/xraypent. The directory is not created here.
std::filesystem::path resolve_cache_dir(const std::optional<std::string>& flag);

/// Writes to a unique temporary sibling, then renames over `target`.
/// Creates parent directories. Throws std::runtime_error on I/O failure.
void atomic_write(const std::filesystem::path& target, std::string_view content);

std::optional<std::string> read_file(const std::filesystem::path& path);

std::uint64_t fnv1a64(std::string_view data) noexcept;
std::string hex64(std::uint64_t value);

}  // namespace xraypent
