/* receptron: threshold logic units with input-dependent weight functions
 * Copyright (C) 2026 The receptron authors
 * MIT License (see LICENSE)
 */

/*!
  \file boolexpr.hpp
  \brief Boolean expression trees over rect predicates, the normalized-OR
         identity, and single-unit compilation of arbitrary expressions
*/

#pragma once

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "rect.hpp"
#include "unit.hpp"

namespace receptron
{

/*! \brief Expression tree with AND / OR / NOT nodes and rect-predicate leaves

  Value-semantic and immutable once built.  The arity of an expression is
  1 + the largest axis index appearing in its leaves; evaluation accepts any
  input vector at least that long.
*/
class bool_expr
{
public:
  enum class node_kind
  {
    pred,
    conjunction,
    disjunction,
    negation
  };

  static bool_expr pred( std::size_t axis, rect_predicate window );
  static bool_expr conjunction( std::vector<bool_expr> children );
  static bool_expr disjunction( std::vector<bool_expr> children );
  static bool_expr negation( bool_expr child );

  node_kind kind() const;
  std::size_t arity() const { return arity_; }

  /*! \brief Leaf accessors; only valid when kind() == pred */
  std::size_t axis() const;
  const rect_predicate& predicate() const;

  /*! \brief Children; negation has exactly one */
  const std::vector<bool_expr>& children() const;

  bool evaluate( std::span<const double> x ) const;

  /*! \brief True iff x sits exactly on the boundary of some leaf predicate */
  bool on_pred_boundary( std::span<const double> x ) const;

  bool operator==( const bool_expr& other ) const;

private:
  struct pred_node
  {
    std::size_t axis;
    rect_predicate window;
  };
  struct and_node
  {
    std::vector<bool_expr> children;
  };
  struct or_node
  {
    std::vector<bool_expr> children;
  };
  struct not_node
  {
    std::vector<bool_expr> child; // exactly one element
  };

  bool_expr() = default;

  std::variant<pred_node, and_node, or_node, not_node> node_{
      pred_node{ 0, rect_predicate( 0.0, 1.0 ) } };
  std::size_t arity_{ 0 };
};

/*! \brief Breakdown of the normalized-OR arithmetic */
struct normalized_or_terms
{
  int sum{ 0 };         ///< sum of the input bits
  int denominator{ 0 }; ///< sum + product of the complements
  int value{ 0 };       ///< the exact 0/1 quotient
};

/*! \brief Arithmetic OR: (sum f_i) / (sum f_i + prod (1 - f_i))

  Defined for nonempty lists of 0/1 values; the quotient is exactly 0 or 1 and
  equals the logical OR of the inputs.
*/
normalized_or_terms normalized_or_breakdown( std::span<const int> bits );
int normalized_or( std::span<const int> bits );

/*! \brief Product via De Morgan: 1 - normalized_or of the complements

  Cross-checks the result against the plain arithmetic product of the bits.
*/
int demorgan_product( std::span<const int> bits );

/*! \brief Compile an expression into a single unit

  The unit's first weight slot is a full-vector summand equal to
  1 - evaluate(e, x); all other slots contribute zero.  With the window
  (-1/2, t), 0 < t <= 1, the unit's activation equals evaluate(e, x) at every
  off-boundary point.
*/
unit build_expr_receptron( const bool_expr& e, double t = 0.5 );

} // namespace receptron
