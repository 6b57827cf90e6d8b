/* receptron: threshold logic units with input-dependent weight functions
 * Copyright (C) 2026 The receptron authors
 * MIT License (see LICENSE)
 */

#include "receptron/unit.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace receptron
{

int heaviside( double u )
{
  if ( !std::isfinite( u ) )
  {
    throw std::domain_error( "heaviside: argument must be finite" );
  }
  return u > 0.0 ? 1 : 0;
}

int negated_heaviside( double u )
{
  return 1 - heaviside( u );
}

weight_function weight_function::constant( double value )
{
  if ( !std::isfinite( value ) )
  {
    throw std::invalid_argument( "weight_function: constant value must be finite" );
  }
  weight_function w;
  w.kind_ = kind_t::constant;
  w.constant_ = value;
  return w;
}

weight_function weight_function::selective_rect( rect_predicate window )
{
  weight_function w;
  w.kind_ = kind_t::selective_rect;
  w.window_ = window;
  return w;
}

weight_function weight_function::lookup( lookup_table table )
{
  weight_function w;
  w.kind_ = kind_t::lookup;
  w.table_ = std::move( table );
  return w;
}

weight_function weight_function::full_vector( vector_summand summand )
{
  if ( !summand )
  {
    throw std::invalid_argument( "weight_function: full_vector summand must be callable" );
  }
  weight_function w;
  w.kind_ = kind_t::full_vector;
  w.summand_ = std::move( summand );
  return w;
}

namespace
{

std::uint64_t binary_pattern( std::span<const double> x )
{
  if ( x.size() > 64 )
  {
    throw std::domain_error( "lookup weight: at most 64 inputs supported" );
  }
  std::uint64_t pattern = 0;
  for ( std::size_t j = 0; j < x.size(); ++j )
  {
    if ( x[j] == 1.0 )
    {
      pattern |= std::uint64_t{ 1 } << j;
    }
    else if ( x[j] != 0.0 )
    {
      throw std::domain_error( "lookup weight: inputs must be the binary values 0 or 1" );
    }
  }
  return pattern;
}

} // namespace

double weight_function::contribution( std::span<const double> x, std::size_t axis ) const
{
  switch ( kind_ )
  {
  case kind_t::constant:
    return constant_ * x[axis];
  case kind_t::selective_rect:
    // product form of the selective weight: x * (1 - f(x)) / x
    return window_.contains( x[axis] ) ? 0.0 : 1.0;
  case kind_t::lookup:
  {
    const auto pattern = binary_pattern( x );
    const auto it = table_.find( pattern );
    if ( it == table_.end() )
    {
      throw std::domain_error( "lookup weight: no entry for input pattern " +
                               std::to_string( pattern ) );
    }
    return it->second * x[axis];
  }
  case kind_t::full_vector:
    return summand_( x );
  }
  return 0.0; // unreachable
}

double weight_function::raw_value( std::span<const double> x, std::size_t axis ) const
{
  switch ( kind_ )
  {
  case kind_t::constant:
    return constant_;
  case kind_t::selective_rect:
  {
    const double v = x[axis];
    if ( v == 0.0 )
    {
      throw std::domain_error( "selective weight: raw value is singular at x = 0" );
    }
    return ( window_.contains( v ) ? 0.0 : 1.0 ) / v;
  }
  case kind_t::lookup:
  {
    const auto pattern = binary_pattern( x );
    const auto it = table_.find( pattern );
    if ( it == table_.end() )
    {
      throw std::domain_error( "lookup weight: no entry for input pattern " +
                               std::to_string( pattern ) );
    }
    return it->second;
  }
  case kind_t::full_vector:
  {
    const double v = x[axis];
    if ( v == 0.0 )
    {
      throw std::domain_error( "full-vector weight: raw value is singular at x = 0" );
    }
    return summand_( x ) / v;
  }
  }
  return 0.0; // unreachable
}

threshold_mode threshold_mode::single( double threshold )
{
  if ( std::isnan( threshold ) )
  {
    throw std::invalid_argument( "threshold_mode: threshold must not be NaN" );
  }
  return threshold_mode( true, threshold, std::numeric_limits<double>::infinity() );
}

threshold_mode threshold_mode::double_window( double lower, double upper )
{
  if ( std::isnan( lower ) || std::isnan( upper ) )
  {
    throw std::invalid_argument( "threshold_mode: thresholds must not be NaN" );
  }
  if ( !( lower < upper ) )
  {
    throw std::invalid_argument( "threshold_mode: lower threshold must be below upper" );
  }
  return threshold_mode( false, lower, upper );
}

int threshold_mode::activate( double sum ) const
{
  if ( single_ )
  {
    return sum > lower_ ? 1 : 0;
  }
  return ( lower_ < sum && sum <= upper_ ) ? 1 : 0;
}

unit::unit( std::vector<weight_function> weights, threshold_mode mode )
    : weights_( std::move( weights ) ), mode_( mode )
{
  if ( weights_.empty() )
  {
    throw std::invalid_argument( "unit: at least one weight slot required" );
  }
}

double unit::weighted_sum( std::span<const double> x ) const
{
  if ( x.size() != weights_.size() )
  {
    throw std::invalid_argument( "unit: input arity " + std::to_string( x.size() ) +
                                 " does not match unit arity " +
                                 std::to_string( weights_.size() ) );
  }
  for ( const double v : x )
  {
    if ( !std::isfinite( v ) )
    {
      throw std::domain_error( "unit: inputs must be finite" );
    }
  }
  double sum = 0.0;
  for ( std::size_t j = 0; j < weights_.size(); ++j )
  {
    sum += weights_[j].contribution( x, j );
  }
  return sum;
}

int unit::activate( std::span<const double> x ) const
{
  return mode_.activate( weighted_sum( x ) );
}

} // namespace receptron
