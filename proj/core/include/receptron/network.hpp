/* receptron: threshold logic units with input-dependent weight functions
 * Copyright (C) 2026 The receptron authors
 * MIT License (see LICENSE)
 */

/*!
  \file network.hpp
  \brief Feed-forward composition of units and the two disjunction builds
*/

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "domain.hpp"
#include "sampling.hpp"
#include "unit.hpp"

namespace receptron
{

/*! \brief Where a unit input comes from: an external input or an earlier unit */
class source
{
public:
  static source external( std::size_t index ) { return source( true, index ); }
  static source from_unit( std::size_t index ) { return source( false, index ); }

  bool is_external() const { return external_; }
  std::size_t index() const { return index_; }

  friend bool operator==( const source& a, const source& b )
  {
    return a.external_ == b.external_ && a.index_ == b.index_;
  }

private:
  source( bool e, std::size_t i ) : external_( e ), index_( i ) {}

  bool external_;
  std::size_t index_;
};

/*! \brief An acyclic, topologically ordered wiring of units

  Unit i may only consume external inputs and outputs of units earlier in the
  list, which the constructor enforces, so evaluation is a single in-order
  pass.  Upstream bits are fed downstream as the reals 0.0 / 1.0.  Immutable
  after construction; evaluation is pure.
*/
class network
{
public:
  network( std::size_t num_inputs, std::vector<unit> units,
           std::vector<std::vector<source>> wiring, std::vector<std::size_t> outputs );

  std::size_t num_inputs() const { return num_inputs_; }
  const std::vector<unit>& units() const { return units_; }
  const std::vector<std::vector<source>>& wiring() const { return wiring_; }
  const std::vector<std::size_t>& outputs() const { return outputs_; }

  std::vector<int> evaluate( std::span<const double> x ) const;

private:
  std::size_t num_inputs_;
  std::vector<unit> units_;
  std::vector<std::vector<source>> wiring_;
  std::vector<std::size_t> outputs_;
};

/*! \brief m selective units plus one digital OR unit computing the union

  Layer 1 holds one selective unit per domain, each fed the full external
  input; layer 2 is a constant-weight unit (all weights 1, single threshold
  1/2) that ORs the m bits.  The single network output equals the union of the
  domain memberships at every off-boundary point.
*/
network build_disjunction_network( const std::vector<hyper_rect_domain>& domains );

/*! \brief A single unit over the m-fold fan-out of the external input

  The unit has arity n * m; block d of its input is expected to carry a copy
  of the external point, and its summation computes min over domains of the
  block's violation count via a full-vector weight.  With the window
  (-1/2, t), activation equals the union of the domain memberships.
*/
unit build_multidomain_unit( const std::vector<hyper_rect_domain>& domains, double t = 0.5 );

/*! \brief Concatenate `copies` copies of x */
std::vector<double> fan_out( std::span<const double> x, std::size_t copies );

/*! \brief Three-way agreement check: union oracle, network, multidomain unit

  Samples off-boundary points from `points` (boundary hits are redrawn) and
  counts any point where the three routes disagree.
*/
equivalence_report disjunction_equivalence_suite( const std::vector<hyper_rect_domain>& domains,
                                                  const point_source& points, std::size_t count );

} // namespace receptron
