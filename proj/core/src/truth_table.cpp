/* receptron: threshold logic units with input-dependent weight functions
 * Copyright (C) 2026 The receptron authors
 * MIT License (see LICENSE)
 */

#include "receptron/truth_table.hpp"

#include <bit>
#include <stdexcept>

namespace receptron
{

truth_table::truth_table( std::size_t num_inputs, std::vector<int> bits )
    : num_inputs_( num_inputs )
{
  if ( num_inputs_ == 0 )
  {
    throw std::invalid_argument( "truth_table: at least one input required" );
  }
  if ( num_inputs_ > 24 )
  {
    throw std::invalid_argument( "truth_table: more than 24 inputs not supported" );
  }
  if ( bits.size() != ( std::size_t{ 1 } << num_inputs_ ) )
  {
    throw std::invalid_argument( "truth_table: need exactly 2^n output bits" );
  }
  bits_.reserve( bits.size() );
  for ( const int b : bits )
  {
    if ( b != 0 && b != 1 )
    {
      throw std::invalid_argument( "truth_table: output bits must be 0 or 1" );
    }
    bits_.push_back( static_cast<std::uint8_t>( b ) );
  }
}

truth_table truth_table::from_string( std::string_view bits )
{
  if ( bits.size() < 2 || !std::has_single_bit( bits.size() ) )
  {
    throw std::invalid_argument( "truth_table: bit string length must be a power of two >= 2" );
  }
  std::vector<int> out;
  out.reserve( bits.size() );
  for ( const char c : bits )
  {
    if ( c != '0' && c != '1' )
    {
      throw std::invalid_argument( "truth_table: bit string must contain only 0 and 1" );
    }
    out.push_back( c - '0' );
  }
  const std::size_t n = static_cast<std::size_t>( std::countr_zero( bits.size() ) );
  return truth_table( n, std::move( out ) );
}

std::string truth_table::to_string() const
{
  std::string out;
  out.reserve( bits_.size() );
  for ( const auto b : bits_ )
  {
    out.push_back( b ? '1' : '0' );
  }
  return out;
}

int truth_table::bit( std::uint64_t pattern ) const
{
  if ( pattern >= bits_.size() )
  {
    throw std::out_of_range( "truth_table: pattern out of range" );
  }
  return bits_[pattern];
}

std::uint64_t truth_table::as_mask() const
{
  if ( num_inputs_ > 6 )
  {
    throw std::domain_error( "truth_table: mask form needs at most 6 inputs" );
  }
  std::uint64_t mask = 0;
  for ( std::size_t p = 0; p < bits_.size(); ++p )
  {
    if ( bits_[p] )
    {
      mask |= std::uint64_t{ 1 } << p;
    }
  }
  return mask;
}

std::vector<double> pattern_inputs( std::uint64_t pattern, std::size_t num_inputs )
{
  std::vector<double> x( num_inputs, 0.0 );
  for ( std::size_t j = 0; j < num_inputs; ++j )
  {
    if ( pattern & ( std::uint64_t{ 1 } << j ) )
    {
      x[j] = 1.0;
    }
  }
  return x;
}

} // namespace receptron
