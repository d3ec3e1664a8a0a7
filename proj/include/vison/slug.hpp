#pragma once

#include <string>
#include <string_view>

namespace vison {

// Lowercase ASCII letters, digits and single hyphens; no leading or trailing hyphen.
bool is_slug(std::string_view text);

// "Jsvee; Kelmu" -> "jsvee-kelmu", "3D node-link" -> "3d-node-link".
std::string slugify(std::string_view label);

std::string to_lower(std::string_view text);

std::string trim(std::string_view text);

// Collapses internal whitespace runs to one space and trims the ends.
std::string collapse_whitespace(std::string_view text);

}  // namespace vison
