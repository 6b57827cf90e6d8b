/* receptron: threshold logic units with input-dependent weight functions
 * Copyright (C) 2026 The receptron authors
 * MIT License (see LICENSE)
 */

#pragma once

#include <cstdint>
#include <string>

namespace receptron::cli
{

// exit codes: 0 success, 1 verification mismatch, 2 spec parse error,
// 3 I/O or argument error
inline constexpr int exit_ok = 0;
inline constexpr int exit_mismatch = 1;
inline constexpr int exit_parse = 2;
inline constexpr int exit_io = 3;

struct run_config
{
  std::string spec_path;
  std::string points_path;
  std::string out_path;
  std::string axes;
  std::string slice;
  std::string range;
  std::size_t resolution{ 64 };
  std::size_t samples{ 10000 };
  std::uint64_t seed{ 0 };
  std::size_t workers{ 1 };
  bool header{ false };
  int census_n{ 4 };
  std::string table_bits;
  std::string fault;
};

int run_classify( const run_config& cfg );
int run_render( const run_config& cfg );
int run_verify( const run_config& cfg );
int run_census( const run_config& cfg );
int run_synth( const run_config& cfg );

} // namespace receptron::cli
