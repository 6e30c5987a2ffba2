#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace hoops {

// Writes via a temp file in the same directory, then renames, so an
// interrupted run never leaves a partially written file behind.
void atomic_write_file(const std::filesystem::path& path,
                       const std::string& content);

std::string read_file(const std::filesystem::path& path);

// Plain-text key=value config files ('#' starts a comment line).
std::map<std::string, std::string> read_key_value_file(
    const std::filesystem::path& path);
std::string render_key_value(
    const std::vector<std::pair<std::string, std::string>>& entries);

}  // namespace hoops
