/* receptron: threshold logic units with input-dependent weight functions
 * Copyright (C) 2026 The receptron authors
 * MIT License (see LICENSE)
 */

#include "receptron/sampling.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace receptron
{

box_sampler::box_sampler( std::vector<double> lo, std::vector<double> hi, std::uint64_t seed )
    : lo_( std::move( lo ) ), hi_( std::move( hi ) ), engine_( seed )
{
  if ( lo_.empty() || lo_.size() != hi_.size() )
  {
    throw std::invalid_argument( "box_sampler: lo and hi must be nonempty and equal-length" );
  }
  for ( std::size_t i = 0; i < lo_.size(); ++i )
  {
    if ( !std::isfinite( lo_[i] ) || !std::isfinite( hi_[i] ) || !( lo_[i] < hi_[i] ) )
    {
      throw std::invalid_argument( "box_sampler: need finite lo < hi on every axis" );
    }
  }
}

std::vector<double> box_sampler::next()
{
  std::vector<double> point( lo_.size() );
  for ( std::size_t i = 0; i < point.size(); ++i )
  {
    std::uniform_real_distribution<double> dist( lo_[i], hi_[i] );
    point[i] = dist( engine_ );
  }
  return point;
}

point_source box_sampler::as_source()
{
  return [this]() { return next(); };
}

void equivalence_report::record_mismatch( std::vector<double> point, int expected, int actual )
{
  ++mismatches;
  if ( counterexamples.size() < max_stored_counterexamples )
  {
    counterexamples.push_back( { std::move( point ), expected, actual } );
  }
}

} // namespace receptron
