/* receptron: threshold logic units with input-dependent weight functions
 * Copyright (C) 2026 The receptron authors
 * MIT License (see LICENSE)
 */

/*!
  \file linear_feasibility.hpp
  \brief Exact feasibility of small systems of linear inequalities
*/

#pragma once

#include <cstdint>
#include <vector>

namespace receptron::detail
{

/*! \brief A reduced fraction with positive denominator

  All arithmetic is exact; intermediate products run through 128-bit integers
  and overflow of the reduced result throws std::overflow_error.
*/
struct rational
{
  std::int64_t num{ 0 };
  std::int64_t den{ 1 };

  static rational of( std::int64_t n, std::int64_t d = 1 );

  bool is_zero() const { return num == 0; }
  bool is_negative() const { return num < 0; }
  bool is_positive() const { return num > 0; }

  friend rational operator+( const rational& a, const rational& b );
  friend rational operator-( const rational& a, const rational& b );
  friend rational operator*( const rational& a, const rational& b );
  friend rational operator/( const rational& a, const rational& b );
  friend bool operator==( const rational& a, const rational& b )
  {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<( const rational& a, const rational& b );
};

/*! \brief Decide whether { x in R^k : lhs x <= rhs } is nonempty

  Variables are free (unrestricted in sign).  Decided exactly by a phase-1
  simplex over rationals with Bland's rule, so the answer carries no
  floating-point slop.  Sized for small systems (tens of rows / columns).
*/
bool linear_feasible( const std::vector<std::vector<std::int64_t>>& lhs,
                      const std::vector<std::int64_t>& rhs );

} // namespace receptron::detail
