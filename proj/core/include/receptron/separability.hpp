/* receptron: threshold logic units with input-dependent weight functions
 * Copyright (C) 2026 The receptron authors
 * MIT License (see LICENSE)
 */

/*!
  \file separability.hpp
  \brief Linear separability of Boolean functions and the per-arity census
*/

#pragma once

#include <cstddef>
#include <cstdint>

#include "truth_table.hpp"

namespace receptron
{

/*! \brief True iff some constant-weight single-threshold unit computes t

  Decided as a margin-1 linear feasibility problem over exact rationals:
  weights c and threshold s must satisfy sum(c_j p_j) >= s + 1 on 1-patterns
  and <= s - 1 on 0-patterns.  Functions binate in some variable are rejected
  up front (every threshold function is unate in each variable).  Supported
  for num_inputs() <= 6.
*/
bool is_linearly_separable( const truth_table& t );

struct census_result
{
  std::uint64_t separable{ 0 };
  std::uint64_t total{ 0 };

  double ratio() const
  {
    return static_cast<double>( separable ) / static_cast<double>( total );
  }
};

/*! \brief Count linearly separable functions among all 2^(2^n) tables

  Supported for 1 <= n <= 4.  The count is aggregated order-independently, so
  any worker count yields the same result.
*/
census_result census( int n, std::size_t workers = 1 );

} // namespace receptron
