/* receptron: threshold logic units with input-dependent weight functions
 * Copyright (C) 2026 The receptron authors
 * MIT License (see LICENSE)
 */

#include "receptron/network.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace receptron
{

network::network( std::size_t num_inputs, std::vector<unit> units,
                  std::vector<std::vector<source>> wiring, std::vector<std::size_t> outputs )
    : num_inputs_( num_inputs ), units_( std::move( units ) ), wiring_( std::move( wiring ) ),
      outputs_( std::move( outputs ) )
{
  if ( num_inputs_ == 0 )
  {
    throw std::invalid_argument( "network: at least one external input required" );
  }
  if ( units_.empty() )
  {
    throw std::invalid_argument( "network: at least one unit required" );
  }
  if ( wiring_.size() != units_.size() )
  {
    throw std::invalid_argument( "network: one wiring list per unit required" );
  }
  for ( std::size_t i = 0; i < units_.size(); ++i )
  {
    if ( wiring_[i].size() != units_[i].arity() )
    {
      throw std::invalid_argument( "network: unit " + std::to_string( i ) +
                                   " wiring does not match its arity" );
    }
    for ( const auto& s : wiring_[i] )
    {
      if ( s.is_external() )
      {
        if ( s.index() >= num_inputs_ )
        {
          throw std::invalid_argument( "network: external input index out of range" );
        }
      }
      else if ( s.index() >= i )
      {
        throw std::invalid_argument( "network: unit " + std::to_string( i ) +
                                     " may only consume outputs of earlier units" );
      }
    }
  }
  if ( outputs_.empty() )
  {
    throw std::invalid_argument( "network: at least one output required" );
  }
  for ( const auto o : outputs_ )
  {
    if ( o >= units_.size() )
    {
      throw std::invalid_argument( "network: output index out of range" );
    }
  }
}

std::vector<int> network::evaluate( std::span<const double> x ) const
{
  if ( x.size() != num_inputs_ )
  {
    throw std::invalid_argument( "network: input arity " + std::to_string( x.size() ) +
                                 " does not match network arity " +
                                 std::to_string( num_inputs_ ) );
  }
  std::vector<double> unit_bits( units_.size(), 0.0 );
  std::vector<double> feed;
  for ( std::size_t i = 0; i < units_.size(); ++i )
  {
    feed.clear();
    feed.reserve( wiring_[i].size() );
    for ( const auto& s : wiring_[i] )
    {
      feed.push_back( s.is_external() ? x[s.index()] : unit_bits[s.index()] );
    }
    unit_bits[i] = static_cast<double>( units_[i].activate( feed ) );
  }
  std::vector<int> out;
  out.reserve( outputs_.size() );
  for ( const auto o : outputs_ )
  {
    out.push_back( unit_bits[o] == 1.0 ? 1 : 0 );
  }
  return out;
}

namespace
{

std::size_t shared_arity( const std::vector<hyper_rect_domain>& domains )
{
  if ( domains.empty() )
  {
    throw std::invalid_argument( "disjunction: at least one domain required" );
  }
  const std::size_t n = domains.front().arity();
  for ( const auto& d : domains )
  {
    if ( d.arity() != n )
    {
      throw std::invalid_argument( "disjunction: all domains must share one arity" );
    }
  }
  return n;
}

} // namespace

network build_disjunction_network( const std::vector<hyper_rect_domain>& domains )
{
  const std::size_t n = shared_arity( domains );
  const std::size_t m = domains.size();

  std::vector<unit> units;
  std::vector<std::vector<source>> wiring;
  units.reserve( m + 1 );
  wiring.reserve( m + 1 );

  std::vector<source> full_input;
  full_input.reserve( n );
  for ( std::size_t j = 0; j < n; ++j )
  {
    full_input.push_back( source::external( j ) );
  }
  for ( const auto& d : domains )
  {
    units.push_back( build_selective_receptron( d ) );
    wiring.push_back( full_input );
  }

  // digital OR: unit constant weights, single threshold 1/2
  std::vector<weight_function> or_weights;
  std::vector<source> or_wiring;
  or_weights.reserve( m );
  or_wiring.reserve( m );
  for ( std::size_t i = 0; i < m; ++i )
  {
    or_weights.push_back( weight_function::constant( 1.0 ) );
    or_wiring.push_back( source::from_unit( i ) );
  }
  units.emplace_back( std::move( or_weights ), threshold_mode::single( 0.5 ) );
  wiring.push_back( std::move( or_wiring ) );

  return network( n, std::move( units ), std::move( wiring ), { m } );
}

unit build_multidomain_unit( const std::vector<hyper_rect_domain>& domains, double t )
{
  const std::size_t n = shared_arity( domains );
  const std::size_t m = domains.size();
  if ( !( t > 0.0 && t <= 1.0 ) )
  {
    throw std::invalid_argument( "build_multidomain_unit: need 0 < t <= 1" );
  }

  // Summand on the fanned-out input: min over domains of the violation count
  // of block d, carried entirely by the first weight slot.
  std::vector<hyper_rect_domain> blocks = domains;
  std::vector<weight_function> weights;
  weights.reserve( n * m );
  weights.push_back( weight_function::full_vector(
      [blocks = std::move( blocks ), n]( std::span<const double> x ) {
        std::size_t min_violations = 0;
        bool first = true;
        for ( std::size_t d = 0; d < x.size() / n; ++d )
        {
          const auto tally = violation_count( blocks[d], x.subspan( d * n, n ) );
          if ( first || tally.violations < min_violations )
          {
            min_violations = tally.violations;
            first = false;
          }
        }
        return static_cast<double>( min_violations );
      } ) );
  for ( std::size_t j = 1; j < n * m; ++j )
  {
    weights.push_back( weight_function::constant( 0.0 ) );
  }
  return unit( std::move( weights ), threshold_mode::double_window( -0.5, t ) );
}

std::vector<double> fan_out( std::span<const double> x, std::size_t copies )
{
  if ( copies == 0 )
  {
    throw std::invalid_argument( "fan_out: at least one copy required" );
  }
  std::vector<double> out;
  out.reserve( x.size() * copies );
  for ( std::size_t c = 0; c < copies; ++c )
  {
    out.insert( out.end(), x.begin(), x.end() );
  }
  return out;
}

equivalence_report disjunction_equivalence_suite( const std::vector<hyper_rect_domain>& domains,
                                                  const point_source& points, std::size_t count )
{
  const std::size_t m = domains.size();
  const network net = build_disjunction_network( domains );
  const unit multi = build_multidomain_unit( domains );

  const auto on_any_boundary = [&]( std::span<const double> x ) {
    return std::any_of( domains.begin(), domains.end(),
                        [&]( const hyper_rect_domain& d ) { return d.on_boundary( x ); } );
  };

  equivalence_report report;
  for ( std::size_t i = 0; i < count; ++i )
  {
    std::vector<double> p = points();
    while ( on_any_boundary( p ) )
    {
      p = points();
    }
    const bool member = std::any_of( domains.begin(), domains.end(),
                                     [&]( const hyper_rect_domain& d ) { return d.contains( p ); } );
    const int oracle = member ? 1 : 0;
    const int via_network = net.evaluate( p ).front();
    const int via_unit = multi.activate( fan_out( p, m ) );
    ++report.points_tested;
    if ( via_network != oracle || via_unit != oracle )
    {
      report.record_mismatch( std::move( p ), oracle,
                              via_network != oracle ? via_network : via_unit );
    }
  }
  return report;
}

} // namespace receptron
