/* receptron: threshold logic units with input-dependent weight functions
 * Copyright (C) 2026 The receptron authors
 * MIT License (see LICENSE)
 */

#include "receptron/detail/linear_feasibility.hpp"

#include <limits>
#include <stdexcept>

namespace receptron::detail
{

namespace
{

using int128 = __int128;

std::int64_t checked_narrow( int128 v )
{
  if ( v > std::numeric_limits<std::int64_t>::max() ||
       v < std::numeric_limits<std::int64_t>::min() )
  {
    throw std::overflow_error( "rational: value exceeds 64-bit range" );
  }
  return static_cast<std::int64_t>( v );
}

int128 abs128( int128 v )
{
  return v < 0 ? -v : v;
}

int128 gcd128( int128 a, int128 b )
{
  a = abs128( a );
  b = abs128( b );
  while ( b != 0 )
  {
    const int128 r = a % b;
    a = b;
    b = r;
  }
  return a;
}

rational make( int128 num, int128 den )
{
  if ( den == 0 )
  {
    throw std::invalid_argument( "rational: zero denominator" );
  }
  if ( den < 0 )
  {
    num = -num;
    den = -den;
  }
  int128 g = gcd128( num, den );
  if ( g == 0 )
  {
    g = 1;
  }
  return rational{ checked_narrow( num / g ), checked_narrow( den / g ) };
}

} // namespace

rational rational::of( std::int64_t n, std::int64_t d )
{
  return make( n, d );
}

rational operator+( const rational& a, const rational& b )
{
  return make( int128{ a.num } * b.den + int128{ b.num } * a.den, int128{ a.den } * b.den );
}

rational operator-( const rational& a, const rational& b )
{
  return make( int128{ a.num } * b.den - int128{ b.num } * a.den, int128{ a.den } * b.den );
}

rational operator*( const rational& a, const rational& b )
{
  return make( int128{ a.num } * b.num, int128{ a.den } * b.den );
}

rational operator/( const rational& a, const rational& b )
{
  if ( b.num == 0 )
  {
    throw std::invalid_argument( "rational: division by zero" );
  }
  return make( int128{ a.num } * b.den, int128{ a.den } * b.num );
}

bool operator<( const rational& a, const rational& b )
{
  return int128{ a.num } * b.den < int128{ b.num } * a.den;
}

/*
 * Phase-1 simplex with Bland's rule over exact rationals.
 *
 * Free variables are split x = xp - xn with xp, xn >= 0; every row gets a
 * slack, rows with negative right-hand side are negated and get an artificial
 * basic variable.  The system is feasible iff the minimized artificial sum is
 * exactly zero.
 */
bool linear_feasible( const std::vector<std::vector<std::int64_t>>& lhs,
                      const std::vector<std::int64_t>& rhs )
{
  const std::size_t rows = lhs.size();
  if ( rhs.size() != rows )
  {
    throw std::invalid_argument( "linear_feasible: lhs and rhs row counts differ" );
  }
  if ( rows == 0 )
  {
    return true;
  }
  const std::size_t vars = lhs[0].size();
  for ( const auto& row : lhs )
  {
    if ( row.size() != vars )
    {
      throw std::invalid_argument( "linear_feasible: ragged lhs" );
    }
  }
  if ( vars == 0 )
  {
    for ( const auto b : rhs )
    {
      if ( b < 0 )
      {
        return false;
      }
    }
    return true;
  }

  std::size_t artificials = 0;
  for ( const auto b : rhs )
  {
    if ( b < 0 )
    {
      ++artificials;
    }
  }

  const std::size_t slack_base = 2 * vars;
  const std::size_t art_base = slack_base + rows;
  const std::size_t cols = art_base + artificials; // structural columns
  const std::size_t rhs_col = cols;                // appended right-hand side

  const rational zero = rational{ 0, 1 };
  const rational one = rational{ 1, 1 };

  std::vector<std::vector<rational>> tab( rows, std::vector<rational>( cols + 1, zero ) );
  std::vector<std::size_t> basis( rows );

  std::size_t art_used = 0;
  for ( std::size_t i = 0; i < rows; ++i )
  {
    const std::int64_t sign = rhs[i] >= 0 ? 1 : -1;
    for ( std::size_t j = 0; j < vars; ++j )
    {
      tab[i][j] = rational::of( sign * lhs[i][j] );
      tab[i][vars + j] = rational::of( -sign * lhs[i][j] );
    }
    tab[i][slack_base + i] = rational::of( sign );
    tab[i][rhs_col] = rational::of( sign * rhs[i] );
    if ( sign > 0 )
    {
      basis[i] = slack_base + i;
    }
    else
    {
      const std::size_t art_col = art_base + art_used++;
      tab[i][art_col] = one;
      basis[i] = art_col;
    }
  }

  // Reduced-cost row for "minimize sum of artificials", canonical w.r.t. the
  // starting basis: cost coefficients minus the artificial-basic rows.
  std::vector<rational> obj( cols + 1, zero );
  for ( std::size_t j = art_base; j < cols; ++j )
  {
    obj[j] = one;
  }
  for ( std::size_t i = 0; i < rows; ++i )
  {
    if ( basis[i] >= art_base )
    {
      for ( std::size_t j = 0; j <= cols; ++j )
      {
        obj[j] = obj[j] - tab[i][j];
      }
    }
  }

  const std::size_t iteration_cap = 100000;
  for ( std::size_t iter = 0; iter < iteration_cap; ++iter )
  {
    // Bland: entering = lowest-index non-artificial column with negative
    // reduced cost (artificials never re-enter).
    std::size_t enter = cols;
    for ( std::size_t j = 0; j < art_base; ++j )
    {
      if ( obj[j].is_negative() )
      {
        enter = j;
        break;
      }
    }
    if ( enter == cols )
    {
      return obj[rhs_col].is_zero(); // optimum reached; stored value is -min
    }

    std::size_t leave = rows;
    rational best = zero;
    for ( std::size_t i = 0; i < rows; ++i )
    {
      if ( !tab[i][enter].is_positive() )
      {
        continue;
      }
      const rational ratio = tab[i][rhs_col] / tab[i][enter];
      if ( leave == rows || ratio < best ||
           ( ratio == best && basis[i] < basis[leave] ) )
      {
        leave = i;
        best = ratio;
      }
    }
    if ( leave == rows )
    {
      throw std::logic_error( "linear_feasible: phase-1 objective unbounded" );
    }

    // Pivot on (leave, enter).
    const rational pivot = tab[leave][enter];
    for ( std::size_t j = 0; j <= cols; ++j )
    {
      tab[leave][j] = tab[leave][j] / pivot;
    }
    for ( std::size_t i = 0; i < rows; ++i )
    {
      if ( i == leave || tab[i][enter].is_zero() )
      {
        continue;
      }
      const rational factor = tab[i][enter];
      for ( std::size_t j = 0; j <= cols; ++j )
      {
        tab[i][j] = tab[i][j] - factor * tab[leave][j];
      }
    }
    if ( !obj[enter].is_zero() )
    {
      const rational factor = obj[enter];
      for ( std::size_t j = 0; j <= cols; ++j )
      {
        obj[j] = obj[j] - factor * tab[leave][j];
      }
    }
    basis[leave] = enter;
  }
  throw std::logic_error( "linear_feasible: iteration cap exceeded" );
}

} // namespace receptron::detail
