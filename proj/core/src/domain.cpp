/* receptron: threshold logic units with input-dependent weight functions
 * Copyright (C) 2026 The receptron authors
 * MIT License (see LICENSE)
 */

#include "receptron/domain.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace receptron
{

hyper_rect_domain::hyper_rect_domain( std::vector<double> centers, std::vector<double> widths )
{
  if ( centers.empty() || centers.size() != widths.size() )
  {
    throw std::invalid_argument( "hyper_rect_domain: centers and widths must be nonempty and equal-length" );
  }
  axes_.reserve( centers.size() );
  for ( std::size_t i = 0; i < centers.size(); ++i )
  {
    axes_.emplace_back( centers[i], widths[i] );
  }
}

std::vector<double> hyper_rect_domain::centers() const
{
  std::vector<double> out;
  out.reserve( axes_.size() );
  for ( const auto& a : axes_ )
  {
    out.push_back( a.center() );
  }
  return out;
}

std::vector<double> hyper_rect_domain::widths() const
{
  std::vector<double> out;
  out.reserve( axes_.size() );
  for ( const auto& a : axes_ )
  {
    out.push_back( a.width() );
  }
  return out;
}

namespace
{

void check_arity( const hyper_rect_domain& d, std::span<const double> x )
{
  if ( x.size() != d.arity() )
  {
    throw std::invalid_argument( "hyper_rect_domain: point arity " + std::to_string( x.size() ) +
                                 " does not match domain arity " + std::to_string( d.arity() ) );
  }
}

} // namespace

bool hyper_rect_domain::contains( std::span<const double> x ) const
{
  check_arity( *this, x );
  for ( std::size_t i = 0; i < axes_.size(); ++i )
  {
    if ( !axes_[i].contains( x[i] ) )
    {
      return false;
    }
  }
  return true;
}

bool hyper_rect_domain::on_boundary( std::span<const double> x ) const
{
  check_arity( *this, x );
  for ( std::size_t i = 0; i < axes_.size(); ++i )
  {
    if ( axes_[i].on_boundary( x[i] ) )
    {
      return true;
    }
  }
  return false;
}

violation_tally violation_count( const hyper_rect_domain& d, std::span<const double> x )
{
  check_arity( d, x );
  violation_tally tally;
  bool all_inside = true;
  for ( std::size_t i = 0; i < d.arity(); ++i )
  {
    if ( !d.axis( i ).contains( x[i] ) )
    {
      ++tally.violations;
      all_inside = false;
    }
  }
  tally.denominator = tally.violations + ( all_inside ? 1 : 0 );
  return tally;
}

weight_function selective_weight( const rect_predicate& p )
{
  return weight_function::selective_rect( p );
}

unit build_selective_receptron( const hyper_rect_domain& d, double t, double t_low )
{
  if ( !( t > 0.0 && t <= 1.0 ) )
  {
    throw std::invalid_argument( "build_selective_receptron: need 0 < t <= 1" );
  }
  if ( !( t_low < 0.0 ) )
  {
    throw std::invalid_argument( "build_selective_receptron: need t_low < 0" );
  }
  std::vector<weight_function> weights;
  weights.reserve( d.arity() );
  for ( const auto& axis : d.axes() )
  {
    weights.push_back( selective_weight( axis ) );
  }
  return unit( std::move( weights ), threshold_mode::double_window( t_low, t ) );
}

equivalence_report verify_equivalence( const hyper_rect_domain& d, const point_source& points,
                                       std::size_t count )
{
  const unit selective = build_selective_receptron( d );
  equivalence_report report;
  for ( std::size_t i = 0; i < count; ++i )
  {
    std::vector<double> p = points();
    while ( d.on_boundary( p ) )
    {
      p = points();
    }
    const int expected = d.contains( p ) ? 1 : 0;
    const int actual = selective.activate( p );
    ++report.points_tested;
    if ( expected != actual )
    {
      report.record_mismatch( std::move( p ), expected, actual );
    }
  }
  return report;
}

} // namespace receptron
