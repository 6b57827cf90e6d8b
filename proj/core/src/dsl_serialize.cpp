/* receptron: threshold logic units with input-dependent weight functions
 * Copyright (C) 2026 The receptron authors
 * MIT License (see LICENSE)
 */

#include "receptron/dsl.hpp"

#include <charconv>
#include <string>
#include <system_error>

namespace receptron
{

namespace
{

// shortest decimal form that round-trips the double exactly
std::string format_number( double v )
{
  char buf[64];
  const auto r = std::to_chars( buf, buf + sizeof( buf ), v );
  return std::string( buf, r.ptr );
}

void append_vec( std::string& out, const std::vector<double>& values )
{
  out += '[';
  for ( std::size_t i = 0; i < values.size(); ++i )
  {
    if ( i > 0 )
    {
      out += ", ";
    }
    out += format_number( values[i] );
  }
  out += ']';
}

void append_namelist( std::string& out, const std::vector<std::string>& names )
{
  for ( std::size_t i = 0; i < names.size(); ++i )
  {
    if ( i > 0 )
    {
      out += ", ";
    }
    out += names[i];
  }
}

int precedence( const bool_expr& e )
{
  switch ( e.kind() )
  {
  case bool_expr::node_kind::disjunction:
    return 0;
  case bool_expr::node_kind::conjunction:
    return 1;
  case bool_expr::node_kind::negation:
    return 2;
  case bool_expr::node_kind::pred:
    return 3;
  }
  return 3;
}

void append_expr( std::string& out, const bool_expr& e );

void append_child( std::string& out, const bool_expr& child, int parent_prec )
{
  // parenthesize equal precedence too, so same-op nesting survives reparsing
  const bool parens = precedence( child ) <= parent_prec;
  if ( parens )
  {
    out += '(';
  }
  append_expr( out, child );
  if ( parens )
  {
    out += ')';
  }
}

void append_expr( std::string& out, const bool_expr& e )
{
  switch ( e.kind() )
  {
  case bool_expr::node_kind::pred:
    out += "rect(x[";
    out += std::to_string( e.axis() );
    out += "], center=";
    out += format_number( e.predicate().center() );
    out += ", width=";
    out += format_number( e.predicate().width() );
    out += ')';
    return;
  case bool_expr::node_kind::disjunction:
  case bool_expr::node_kind::conjunction:
  {
    const int prec = precedence( e );
    const char* joiner = e.kind() == bool_expr::node_kind::disjunction ? " | " : " & ";
    bool first = true;
    for ( const auto& c : e.children() )
    {
      if ( !first )
      {
        out += joiner;
      }
      first = false;
      append_child( out, c, prec );
    }
    return;
  }
  case bool_expr::node_kind::negation:
    out += '!';
    append_child( out, e.children().front(), precedence( e ) );
    return;
  }
}

} // namespace

std::string serialize_document( const spec_document& doc )
{
  std::string out;

  for ( const auto& [name, d] : doc.domains )
  {
    out += "domain ";
    out += name;
    out += " { center = ";
    append_vec( out, d.centers() );
    out += "; width = ";
    append_vec( out, d.widths() );
    out += "; }\n";
  }
  for ( const auto& [name, e] : doc.exprs )
  {
    out += "expr ";
    out += name;
    out += " = ";
    append_expr( out, e );
    out += ";\n";
  }
  for ( const auto& [name, u] : doc.units )
  {
    out += "unit ";
    out += name;
    out += " = ";
    if ( const auto* s = std::get_if<selective_unit_decl>( &u ) )
    {
      out += "selective(";
      out += s->domain;
      out += ')';
    }
    else if ( const auto* x = std::get_if<expr_unit_decl>( &u ) )
    {
      out += "expr(";
      out += x->expr;
      out += ')';
    }
    else if ( const auto* t = std::get_if<truth_unit_decl>( &u ) )
    {
      out += "truth(";
      out += t->bits;
      out += ')';
    }
    else if ( const auto* m = std::get_if<multidomain_unit_decl>( &u ) )
    {
      out += "multidomain(";
      append_namelist( out, m->domains );
      out += ')';
    }
    out += ";\n";
  }
  for ( const auto& [name, n] : doc.networks )
  {
    out += "network ";
    out += name;
    out += " = or(";
    append_namelist( out, n.domains );
    out += ");\n";
  }
  out += "main = ";
  out += doc.main;
  out += ";\n";
  return out;
}

} // namespace receptron
