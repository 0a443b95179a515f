#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace tempo {

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);
std::vector<std::string> read_lines(const std::filesystem::path& path);

}  // namespace tempo
