/* receptron: threshold logic units with input-dependent weight functions
 * Copyright (C) 2026 The receptron authors
 * MIT License (see LICENSE)
 */

#include "receptron/rect.hpp"

#include <cmath>
#include <stdexcept>

namespace receptron
{

rect_predicate::rect_predicate( double center, double width ) : center_( center ), width_( width )
{
  if ( !std::isfinite( center ) || !std::isfinite( width ) )
  {
    throw std::invalid_argument( "rect_predicate: center and width must be finite" );
  }
  if ( width <= 0.0 )
  {
    throw std::invalid_argument( "rect_predicate: width must be positive" );
  }
}

bool rect_predicate::contains( double x ) const
{
  if ( !std::isfinite( x ) )
  {
    throw std::domain_error( "rect_predicate: input must be finite" );
  }
  return std::abs( ( x - center_ ) / width_ ) < 0.5;
}

bool rect_predicate::on_boundary( double x ) const
{
  if ( !std::isfinite( x ) )
  {
    throw std::domain_error( "rect_predicate: input must be finite" );
  }
  return std::abs( ( x - center_ ) / width_ ) == 0.5;
}

} // namespace receptron
