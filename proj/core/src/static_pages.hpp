#pragma once

#include <filesystem>
#include <optional>
#include <string>

namespace inquire {

/// `<static_dir>/index.html` when present, else a built-in placeholder.
std::string app_page(const std::optional<std::filesystem::path>& static_dir);

/// `<static_dir>/demo.html` when present, else a built-in read-only page
/// rendered from the demo bundle.
std::string demo_page(const std::optional<std::filesystem::path>& static_dir);

}  // namespace inquire
