/* receptron: threshold logic units with input-dependent weight functions
 * Copyright (C) 2026 The receptron authors
 * MIT License (see LICENSE)
 */

/*!
  \file unit.hpp
  \brief The receptron unit: weighted summation with input-dependent weights
         and thresholded activation
*/

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <unordered_map>
#include <vector>

#include "rect.hpp"

namespace receptron
{

/*! \brief Heaviside step, with the convention h(0) = 0

  Returns 1 iff u > 0.  The argument must be finite.
*/
int heaviside( double u );

/*! \brief Complement of the Heaviside step: 1 - h(u) */
int negated_heaviside( double u );

/*! \brief Summand callback for weights that depend on the whole input vector

  The callback returns the complete contribution x_j * w_j(x) of its slot to
  the weighted sum, so it stays well-defined where the raw weight would be
  singular.
*/
using vector_summand = std::function<double( std::span<const double> )>;

/*! \brief A single weight slot of a unit

  Four kinds are supported:

  - `constant(c)`: the classical input-independent perceptron weight.
  - `selective_rect(p)`: the window weight whose summand at x is
    1 - p.contains(x); the raw weight value is (1 - f(x)) / x and is singular
    at x == 0.  The summand form is what enters every summation, so x == 0 is
    always well-defined there.
  - `lookup(table)`: a digital weight keyed by the unit's full binary input
    pattern (bit j of the key is input j).  Evaluating a pattern with no table
    entry, or a non-binary input, is an error.
  - `full_vector(fn)`: an arbitrary function of the whole input vector,
    supplied directly in summand form.
*/
class weight_function
{
public:
  enum class kind_t
  {
    constant,
    selective_rect,
    lookup,
    full_vector
  };

  using lookup_table = std::unordered_map<std::uint64_t, double>;

  static weight_function constant( double value );
  static weight_function selective_rect( rect_predicate window );
  static weight_function lookup( lookup_table table );
  static weight_function full_vector( vector_summand summand );

  kind_t kind() const { return kind_; }

  /*! \brief The summand x[axis] * w(x), computed in product form */
  double contribution( std::span<const double> x, std::size_t axis ) const;

  /*! \brief The raw weight value w(x)

    Exists for inspection and plotting.  Selective and full-vector kinds
    report a domain error at x[axis] == 0, where the raw value is singular.
  */
  double raw_value( std::span<const double> x, std::size_t axis ) const;

private:
  weight_function() = default;

  kind_t kind_{ kind_t::constant };
  double constant_{ 0.0 };
  rect_predicate window_{ 0.0, 1.0 };
  lookup_table table_;
  vector_summand summand_;
};

/*! \brief Activation rule of a unit

  Either a single threshold (output 1 iff S > t) or a double-threshold window
  (output 1 iff t_low < S <= t_high).  A single threshold t behaves exactly
  like the window (t, +infinity) on finite sums.
*/
class threshold_mode
{
public:
  static threshold_mode single( double threshold );
  static threshold_mode double_window( double lower, double upper );

  bool is_single() const { return single_; }
  double lower() const { return lower_; }
  /*! \brief Upper threshold; +infinity for single mode */
  double upper() const { return upper_; }

  int activate( double sum ) const;

private:
  threshold_mode( bool s, double lo, double hi ) : single_( s ), lower_( lo ), upper_( hi ) {}

  bool single_;
  double lower_;
  double upper_;
};

/*! \brief A receptron unit: n weight slots plus a threshold rule

  Immutable after construction and free of internal state; evaluation is a
  pure function of the input vector, so one unit may be evaluated from many
  threads concurrently.
*/
class unit
{
public:
  unit( std::vector<weight_function> weights, threshold_mode mode );

  std::size_t arity() const { return weights_.size(); }
  const std::vector<weight_function>& weights() const { return weights_; }
  const threshold_mode& mode() const { return mode_; }

  /*! \brief S(x) = sum over slots of the slot's summand

    Throws std::invalid_argument on arity mismatch and std::domain_error on
    non-finite inputs or lookup misses.
  */
  double weighted_sum( std::span<const double> x ) const;

  /*! \brief Thresholded output bit for input x */
  int activate( std::span<const double> x ) const;

private:
  std::vector<weight_function> weights_;
  threshold_mode mode_;
};

} // namespace receptron
