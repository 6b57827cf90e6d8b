/* receptron: threshold logic units with input-dependent weight functions
 * Copyright (C) 2026 The receptron authors
 * MIT License (see LICENSE)
 */

#include "receptron/boolexpr.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace receptron
{

bool_expr bool_expr::pred( std::size_t axis, rect_predicate window )
{
  bool_expr e;
  e.node_ = pred_node{ axis, window };
  e.arity_ = axis + 1;
  return e;
}

namespace
{

std::size_t max_arity( const std::vector<bool_expr>& children )
{
  std::size_t arity = 0;
  for ( const auto& c : children )
  {
    arity = std::max( arity, c.arity() );
  }
  return arity;
}

} // namespace

bool_expr bool_expr::conjunction( std::vector<bool_expr> children )
{
  if ( children.empty() )
  {
    throw std::invalid_argument( "bool_expr: conjunction needs at least one child" );
  }
  bool_expr e;
  e.arity_ = max_arity( children );
  e.node_ = and_node{ std::move( children ) };
  return e;
}

bool_expr bool_expr::disjunction( std::vector<bool_expr> children )
{
  if ( children.empty() )
  {
    throw std::invalid_argument( "bool_expr: disjunction needs at least one child" );
  }
  bool_expr e;
  e.arity_ = max_arity( children );
  e.node_ = or_node{ std::move( children ) };
  return e;
}

bool_expr bool_expr::negation( bool_expr child )
{
  bool_expr e;
  e.arity_ = child.arity();
  std::vector<bool_expr> box;
  box.push_back( std::move( child ) );
  e.node_ = not_node{ std::move( box ) };
  return e;
}

bool_expr::node_kind bool_expr::kind() const
{
  switch ( node_.index() )
  {
  case 0:
    return node_kind::pred;
  case 1:
    return node_kind::conjunction;
  case 2:
    return node_kind::disjunction;
  default:
    return node_kind::negation;
  }
}

std::size_t bool_expr::axis() const
{
  return std::get<pred_node>( node_ ).axis;
}

const rect_predicate& bool_expr::predicate() const
{
  return std::get<pred_node>( node_ ).window;
}

const std::vector<bool_expr>& bool_expr::children() const
{
  switch ( node_.index() )
  {
  case 1:
    return std::get<and_node>( node_ ).children;
  case 2:
    return std::get<or_node>( node_ ).children;
  case 3:
    return std::get<not_node>( node_ ).child;
  default:
    throw std::logic_error( "bool_expr: a predicate leaf has no children" );
  }
}

bool bool_expr::evaluate( std::span<const double> x ) const
{
  if ( x.size() < arity_ )
  {
    throw std::invalid_argument( "bool_expr: input arity " + std::to_string( x.size() ) +
                                 " below expression arity " + std::to_string( arity_ ) );
  }
  switch ( kind() )
  {
  case node_kind::pred:
  {
    const auto& n = std::get<pred_node>( node_ );
    return n.window.contains( x[n.axis] );
  }
  case node_kind::conjunction:
    for ( const auto& c : children() )
    {
      if ( !c.evaluate( x ) )
      {
        return false;
      }
    }
    return true;
  case node_kind::disjunction:
    for ( const auto& c : children() )
    {
      if ( c.evaluate( x ) )
      {
        return true;
      }
    }
    return false;
  case node_kind::negation:
    return !children().front().evaluate( x );
  }
  return false; // unreachable
}

bool bool_expr::on_pred_boundary( std::span<const double> x ) const
{
  if ( kind() == node_kind::pred )
  {
    const auto& n = std::get<pred_node>( node_ );
    return n.window.on_boundary( x[n.axis] );
  }
  for ( const auto& c : children() )
  {
    if ( c.on_pred_boundary( x ) )
    {
      return true;
    }
  }
  return false;
}

bool bool_expr::operator==( const bool_expr& other ) const
{
  if ( kind() != other.kind() )
  {
    return false;
  }
  if ( kind() == node_kind::pred )
  {
    return axis() == other.axis() && predicate() == other.predicate();
  }
  return children() == other.children();
}

normalized_or_terms normalized_or_breakdown( std::span<const int> bits )
{
  if ( bits.empty() )
  {
    throw std::invalid_argument( "normalized_or: needs at least one bit" );
  }
  normalized_or_terms terms;
  int complement_product = 1;
  for ( const int b : bits )
  {
    if ( b != 0 && b != 1 )
    {
      throw std::invalid_argument( "normalized_or: entries must be 0 or 1" );
    }
    terms.sum += b;
    complement_product *= 1 - b;
  }
  terms.denominator = terms.sum + complement_product;
  terms.value = terms.sum / terms.denominator; // exact: 0/1 or k/k
  return terms;
}

int normalized_or( std::span<const int> bits )
{
  return normalized_or_breakdown( bits ).value;
}

int demorgan_product( std::span<const int> bits )
{
  std::vector<int> complements( bits.size() );
  int plain_product = 1;
  for ( std::size_t i = 0; i < bits.size(); ++i )
  {
    if ( bits[i] != 0 && bits[i] != 1 )
    {
      throw std::invalid_argument( "demorgan_product: entries must be 0 or 1" );
    }
    complements[i] = 1 - bits[i];
    plain_product *= bits[i];
  }
  const int value = 1 - normalized_or( complements );
  if ( value != plain_product )
  {
    throw std::logic_error( "demorgan_product: identity violated" );
  }
  return value;
}

unit build_expr_receptron( const bool_expr& e, double t )
{
  if ( !( t > 0.0 && t <= 1.0 ) )
  {
    throw std::invalid_argument( "build_expr_receptron: need 0 < t <= 1" );
  }
  std::vector<weight_function> weights;
  weights.reserve( e.arity() );
  bool_expr expr = e;
  weights.push_back( weight_function::full_vector(
      [expr = std::move( expr )]( std::span<const double> x ) {
        return expr.evaluate( x ) ? 0.0 : 1.0;
      } ) );
  for ( std::size_t j = 1; j < e.arity(); ++j )
  {
    weights.push_back( weight_function::constant( 0.0 ) );
  }
  return unit( std::move( weights ), threshold_mode::double_window( -0.5, t ) );
}

} // namespace receptron
