/* receptron: threshold logic units with input-dependent weight functions
 * Copyright (C) 2026 The receptron authors
 * MIT License (see LICENSE)
 */

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace receptron::cli
{

/// shortest round-trip decimal form
std::string format_double( double v );

std::optional<std::string> read_file( const std::string& path );

/// write the whole buffer; false on I/O failure
bool write_file( const std::string& path, const std::string& content );

std::vector<std::string> split( std::string_view text, char delimiter );

std::string trim( std::string_view text );

std::optional<double> parse_double( std::string_view text );

std::optional<std::size_t> parse_index( std::string_view text );

} // namespace receptron::cli
