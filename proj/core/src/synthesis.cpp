/* receptron: threshold logic units with input-dependent weight functions
 * Copyright (C) 2026 The receptron authors
 * MIT License (see LICENSE)
 */

#include "receptron/synthesis.hpp"

#include <bit>
#include <utility>
#include <vector>

namespace receptron
{

unit synthesize_digital( const truth_table& t )
{
  const std::size_t n = t.num_inputs();
  const std::uint64_t patterns = std::uint64_t{ 1 } << n;

  // The all-zero pattern always sums to 0; pick the window accordingly.
  const bool zero_active = t.bit( 0 ) == 1;
  const double active_sum = zero_active ? 0.0 : 1.0;
  const double inactive_sum = zero_active ? 1.0 : 0.0;
  const threshold_mode mode = zero_active ? threshold_mode::double_window( -0.5, 0.5 )
                                          : threshold_mode::double_window( 0.5, 1.5 );

  std::vector<weight_function::lookup_table> tables( n );
  for ( std::size_t j = 0; j < n; ++j )
  {
    tables[j].reserve( patterns );
  }
  for ( std::uint64_t p = 0; p < patterns; ++p )
  {
    const std::size_t carrier = p == 0 ? 0 : static_cast<std::size_t>( std::countr_zero( p ) );
    const double target = t.bit( p ) ? active_sum : inactive_sum;
    for ( std::size_t j = 0; j < n; ++j )
    {
      tables[j][p] = ( p != 0 && j == carrier ) ? target : 0.0;
    }
  }

  std::vector<weight_function> weights;
  weights.reserve( n );
  for ( std::size_t j = 0; j < n; ++j )
  {
    weights.push_back( weight_function::lookup( std::move( tables[j] ) ) );
  }
  return unit( std::move( weights ), mode );
}

} // namespace receptron
