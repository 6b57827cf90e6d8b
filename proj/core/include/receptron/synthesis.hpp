/* receptron: threshold logic units with input-dependent weight functions
 * Copyright (C) 2026 The receptron authors
 * MIT License (see LICENSE)
 */

/*!
  \file synthesis.hpp
  \brief Digital unit synthesis: one lookup-weight unit per truth table
*/

#pragma once

#include "truth_table.hpp"
#include "unit.hpp"

namespace receptron
{

/*! \brief Build a unit that reproduces t on every binary input pattern

  The construction places the whole function in the lookup table of each
  pattern's lowest-index active input: that slot's entry carries the pattern's
  target sum, every other slot's entry is zero.  The all-zero pattern forces
  S = 0 regardless of the tables, so the threshold window is chosen by t's
  value there: if t(0) = 1 the window is (-1/2, 1/2) with target sums
  0 (active) / 1 (inactive); otherwise the window is (1/2, 3/2) with targets
  1 (active) / 0 (inactive).

  Works for every table; a single unit therefore realizes all 2^(2^n)
  functions of its n digital inputs.
*/
unit synthesize_digital( const truth_table& t );

} // namespace receptron
