/* receptron: threshold logic units with input-dependent weight functions
 * Copyright (C) 2026 The receptron authors
 * MIT License (see LICENSE)
 */

/*!
  \file domain.hpp
  \brief Hyperrectangular activation domains and the constructive build of a
         selective unit equivalent to a closed-domain indicator
*/

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rect.hpp"
#include "sampling.hpp"
#include "unit.hpp"

namespace receptron
{

/*! \brief An axis-aligned box: one rect predicate per coordinate

  Membership is the product of the per-axis predicates, with the open-interval
  boundary convention of rect_predicate.
*/
class hyper_rect_domain
{
public:
  hyper_rect_domain( std::vector<double> centers, std::vector<double> widths );

  std::size_t arity() const { return axes_.size(); }
  const rect_predicate& axis( std::size_t i ) const { return axes_.at( i ); }
  const std::vector<rect_predicate>& axes() const { return axes_; }

  std::vector<double> centers() const;
  std::vector<double> widths() const;

  /*! \brief True iff every coordinate lies inside its interval */
  bool contains( std::span<const double> x ) const;

  /*! \brief True iff some coordinate sits exactly on its interval edge */
  bool on_boundary( std::span<const double> x ) const;

  friend bool operator==( const hyper_rect_domain& a, const hyper_rect_domain& b )
  {
    return a.axes_ == b.axes_;
  }

private:
  std::vector<rect_predicate> axes_;
};

/*! \brief The pair (N, D): violated-axis count and its normalization

  N counts coordinates outside their interval; D = N + prod of the per-axis
  indicator bits.  D >= 1 for every input, and N / D is exactly the complement
  of domain membership.
*/
struct violation_tally
{
  std::size_t violations{ 0 };
  std::size_t denominator{ 0 };

  double ratio() const
  {
    return static_cast<double>( violations ) / static_cast<double>( denominator );
  }
};

violation_tally violation_count( const hyper_rect_domain& d, std::span<const double> x );

/*! \brief The selective weight slot for one axis predicate

  Its summand at x is 1 - f(x); its raw value is (1 - f(x)) / x, singular at
  x == 0.
*/
weight_function selective_weight( const rect_predicate& p );

/*! \brief Build a unit whose activation equals membership in d

  The unit has one selective weight per axis and the double-threshold window
  (t_low, t).  Requires 0 < t <= 1 and t_low < 0.  For every off-boundary
  point, activate(unit, x) == d.contains(x); any t in the open unit interval
  and any negative t_low produce the same behavior because the weighted sum is
  always the integer violation count.
*/
unit build_selective_receptron( const hyper_rect_domain& d, double t = 0.5, double t_low = -0.5 );

/*! \brief Sample points and compare the selective unit against the membership oracle

  Points coming from `points` that hit a domain boundary exactly are discarded
  and redrawn, so only off-boundary points are tested.  The report is
  deterministic given a deterministic source.
*/
equivalence_report verify_equivalence( const hyper_rect_domain& d, const point_source& points,
                                       std::size_t count );

} // namespace receptron
