/* receptron: threshold logic units with input-dependent weight functions
 * Copyright (C) 2026 The receptron authors
 * MIT License (see LICENSE)
 */

/*!
  \file dsl.hpp
  \brief The .rcp declaration language: documents, parser, canonical serializer

  Grammar (LL(1), `#` comments to end of line, whitespace insignificant):

    document   := { decl } "main" "=" name ";"
    decl       := domainDecl | exprDecl | unitDecl | netDecl
    domainDecl := "domain" name "{" "center" "=" vec ";" "width" "=" vec ";" "}"
    exprDecl   := "expr" name "=" boolexpr ";"
    boolexpr   := orExpr
    orExpr     := andExpr { "|" andExpr }
    andExpr    := notExpr { "&" notExpr }
    notExpr    := "!" notExpr | "(" boolexpr ")" | pred
    pred       := "rect" "(" "x" "[" int "]" "," "center" "=" num "," "width" "=" num ")"
    unitDecl   := "unit" name "=" ( "selective" "(" name ")" | "expr" "(" name ")"
                                  | "truth" "(" bitstring ")"
                                  | "multidomain" "(" namelist ")" ) ";"
    netDecl    := "network" name "=" "or" "(" namelist ")" ";"
    vec        := "[" num { "," num } "]"

  Axis indices are 0-based.  Names resolve to earlier declarations only, one
  flat namespace, no duplicates.  selective/multidomain/or reference domains;
  expr(...) references an expression.  Parsing never evaluates a unit.
*/

#pragma once

#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "boolexpr.hpp"
#include "domain.hpp"

namespace receptron
{

struct selective_unit_decl
{
  std::string domain;
  bool operator==( const selective_unit_decl& ) const = default;
};

struct expr_unit_decl
{
  std::string expr;
  bool operator==( const expr_unit_decl& ) const = default;
};

struct truth_unit_decl
{
  std::string bits;
  bool operator==( const truth_unit_decl& ) const = default;
};

struct multidomain_unit_decl
{
  std::vector<std::string> domains;
  bool operator==( const multidomain_unit_decl& ) const = default;
};

using unit_decl =
    std::variant<selective_unit_decl, expr_unit_decl, truth_unit_decl, multidomain_unit_decl>;

struct network_decl
{
  std::vector<std::string> domains;
  bool operator==( const network_decl& ) const = default;
};

/*! \brief A parsed, validated .rcp document

  Declarations are stored by name; `main` names the artifact to evaluate.
  Equality is structural and order-insensitive.
*/
struct spec_document
{
  std::map<std::string, hyper_rect_domain> domains;
  std::map<std::string, bool_expr> exprs;
  std::map<std::string, unit_decl> units;
  std::map<std::string, network_decl> networks;
  std::string main;

  bool operator==( const spec_document& ) const = default;
};

/*! \brief First error found while parsing; positions are 1-based */
struct parse_error
{
  std::size_t line{ 0 };
  std::size_t column{ 0 };
  std::string message;
  std::string token;
};

using parse_result = std::variant<spec_document, parse_error>;

/*! \brief Parse UTF-8 text into a document, fail-fast on the first error */
parse_result parse_document( std::string_view text );

/*! \brief Canonical text form

  Declarations come out in dependency order (domains, exprs, units, networks),
  names sorted within each kind, numbers in shortest round-trip decimal form.
  parse_document(serialize_document(doc)) structurally equals doc.
*/
std::string serialize_document( const spec_document& doc );

} // namespace receptron
