/* receptron: threshold logic units with input-dependent weight functions
 * Copyright (C) 2026 The receptron authors
 * MIT License (see LICENSE)
 */

#include "text_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace receptron::cli
{

std::string format_double( double v )
{
  char buf[64];
  const auto r = std::to_chars( buf, buf + sizeof( buf ), v );
  return std::string( buf, r.ptr );
}

std::optional<std::string> read_file( const std::string& path )
{
  std::ifstream in( path, std::ios::binary );
  if ( !in )
  {
    return std::nullopt;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

bool write_file( const std::string& path, const std::string& content )
{
  std::ofstream out( path, std::ios::binary );
  if ( !out )
  {
    return false;
  }
  out << content;
  return static_cast<bool>( out );
}

std::vector<std::string> split( std::string_view text, char delimiter )
{
  std::vector<std::string> parts;
  std::size_t start = 0;
  while ( true )
  {
    const std::size_t pos = text.find( delimiter, start );
    if ( pos == std::string_view::npos )
    {
      parts.emplace_back( text.substr( start ) );
      return parts;
    }
    parts.emplace_back( text.substr( start, pos - start ) );
    start = pos + 1;
  }
}

std::string trim( std::string_view text )
{
  std::size_t begin = 0;
  std::size_t end = text.size();
  while ( begin < end && std::isspace( static_cast<unsigned char>( text[begin] ) ) )
  {
    ++begin;
  }
  while ( end > begin && std::isspace( static_cast<unsigned char>( text[end - 1] ) ) )
  {
    --end;
  }
  return std::string( text.substr( begin, end - begin ) );
}

std::optional<double> parse_double( std::string_view text )
{
  double value = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  const auto r = std::from_chars( first, last, value );
  if ( r.ec != std::errc{} || r.ptr != last || !std::isfinite( value ) )
  {
    return std::nullopt;
  }
  return value;
}

std::optional<std::size_t> parse_index( std::string_view text )
{
  std::size_t value = 0;
  const char* first = text.data();
  const char* last = first + text.size();
  const auto r = std::from_chars( first, last, value );
  if ( r.ec != std::errc{} || r.ptr != last )
  {
    return std::nullopt;
  }
  return value;
}

} // namespace receptron::cli
