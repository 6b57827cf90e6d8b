/* receptron: threshold logic units with input-dependent weight functions
 * Copyright (C) 2026 The receptron authors
 * MIT License (see LICENSE)
 */

#include "receptron/separability.hpp"

#include <atomic>
#include <stdexcept>
#include <vector>

#include "receptron/detail/linear_feasibility.hpp"
#include "receptron/parallel.hpp"

namespace receptron
{

namespace
{

// bit p of projection[v] is set iff pattern p has input v set
constexpr std::uint64_t projection[6] = {
    0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
    0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull,
};

std::uint64_t table_mask( int n )
{
  return n == 6 ? ~std::uint64_t{ 0 } : ( std::uint64_t{ 1 } << ( 1u << n ) ) - 1;
}

// Threshold functions are unate in every variable; a binate variable rules a
// table out without touching the LP.
bool unate_in_every_variable( std::uint64_t tt, int n )
{
  const std::uint64_t full = table_mask( n );
  for ( int v = 0; v < n; ++v )
  {
    const unsigned shift = 1u << v;
    const std::uint64_t low_slots = ~projection[v] & full;
    const std::uint64_t cof0 = tt & low_slots;
    const std::uint64_t cof1 = ( tt >> shift ) & low_slots;
    const bool positive = ( cof0 & ~cof1 ) == 0;
    const bool negative = ( cof1 & ~cof0 ) == 0;
    if ( !positive && !negative )
    {
      return false;
    }
  }
  return true;
}

bool separable_mask( std::uint64_t tt, int n )
{
  if ( !unate_in_every_variable( tt, n ) )
  {
    return false;
  }

  // Margin-1 feasibility in the weights c_0..c_{n-1} and threshold s:
  //   1-pattern p:  sum_j c_j p_j - s >= 1   ->  -sum + s <= -1
  //   0-pattern p:  sum_j c_j p_j - s <= -1
  const std::size_t patterns = std::size_t{ 1 } << n;
  std::vector<std::vector<std::int64_t>> lhs( patterns,
                                              std::vector<std::int64_t>( n + 1, 0 ) );
  std::vector<std::int64_t> rhs( patterns, -1 );
  for ( std::size_t p = 0; p < patterns; ++p )
  {
    const bool active = ( tt >> p ) & 1;
    const std::int64_t sign = active ? -1 : 1;
    for ( int j = 0; j < n; ++j )
    {
      lhs[p][j] = ( p >> j ) & 1 ? sign : 0;
    }
    lhs[p][n] = -sign;
  }
  return detail::linear_feasible( lhs, rhs );
}

} // namespace

bool is_linearly_separable( const truth_table& t )
{
  if ( t.num_inputs() > 6 )
  {
    throw std::invalid_argument( "is_linearly_separable: at most 6 inputs supported" );
  }
  return separable_mask( t.as_mask(), static_cast<int>( t.num_inputs() ) );
}

census_result census( int n, std::size_t workers )
{
  if ( n < 1 || n > 4 )
  {
    throw std::invalid_argument( "census: n must be between 1 and 4" );
  }
  const std::uint64_t total = std::uint64_t{ 1 } << ( std::uint64_t{ 1 } << n );

  std::vector<std::uint64_t> partial( workers == 0 ? 1 : workers, 0 );
  for_each_chunk( static_cast<std::size_t>( total ), workers,
                  [&]( std::size_t begin, std::size_t end, std::size_t chunk ) {
                    std::uint64_t count = 0;
                    for ( std::size_t tt = begin; tt < end; ++tt )
                    {
                      if ( separable_mask( tt, n ) )
                      {
                        ++count;
                      }
                    }
                    partial[chunk] = count;
                  } );

  census_result result;
  result.total = total;
  for ( const auto c : partial )
  {
    result.separable += c;
  }
  return result;
}

} // namespace receptron
