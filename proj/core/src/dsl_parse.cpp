/* receptron: threshold logic units with input-dependent weight functions
 * Copyright (C) 2026 The receptron authors
 * MIT License (see LICENSE)
 */

#include "receptron/dsl.hpp"

#include <bit>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace receptron
{

namespace
{

struct token
{
  enum class type
  {
    identifier,
    number,
    punct,
    end
  };

  type kind{ type::end };
  std::string text;
  std::size_t line{ 1 };
  std::size_t column{ 1 };
};

// internal fail-fast signal, converted to parse_error at the API boundary
struct parse_failure
{
  token at;
  std::string message;
};

[[noreturn]] void fail( const token& at, std::string message )
{
  throw parse_failure{ at, std::move( message ) };
}

const std::set<std::string>& keywords()
{
  static const std::set<std::string> kw = { "domain", "expr",  "unit",      "network", "main",
                                            "center", "width", "selective", "truth",
                                            "multidomain", "or", "rect", "x" };
  return kw;
}

class lexer
{
public:
  explicit lexer( std::string_view text ) : text_( text ) {}

  std::vector<token> run()
  {
    std::vector<token> tokens;
    while ( true )
    {
      skip_blank_and_comments();
      if ( pos_ >= text_.size() )
      {
        tokens.push_back( token{ token::type::end, "", line_, column_ } );
        return tokens;
      }
      tokens.push_back( next_token() );
    }
  }

private:
  void advance()
  {
    if ( text_[pos_] == '\n' )
    {
      ++line_;
      column_ = 1;
    }
    else
    {
      ++column_;
    }
    ++pos_;
  }

  void skip_blank_and_comments()
  {
    while ( pos_ < text_.size() )
    {
      const char c = text_[pos_];
      if ( c == '#' )
      {
        while ( pos_ < text_.size() && text_[pos_] != '\n' )
        {
          advance();
        }
      }
      else if ( std::isspace( static_cast<unsigned char>( c ) ) )
      {
        advance();
      }
      else
      {
        return;
      }
    }
  }

  token next_token()
  {
    const std::size_t line = line_;
    const std::size_t column = column_;
    const char c = text_[pos_];

    if ( std::isalpha( static_cast<unsigned char>( c ) ) || c == '_' )
    {
      std::string text;
      while ( pos_ < text_.size() &&
              ( std::isalnum( static_cast<unsigned char>( text_[pos_] ) ) || text_[pos_] == '_' ) )
      {
        text.push_back( text_[pos_] );
        advance();
      }
      return token{ token::type::identifier, std::move( text ), line, column };
    }

    if ( std::isdigit( static_cast<unsigned char>( c ) ) ||
         ( c == '-' && pos_ + 1 < text_.size() &&
           std::isdigit( static_cast<unsigned char>( text_[pos_ + 1] ) ) ) )
    {
      return lex_number( line, column );
    }

    static const std::string puncts = "{}[]()=;,|&!";
    if ( puncts.find( c ) != std::string::npos )
    {
      advance();
      return token{ token::type::punct, std::string( 1, c ), line, column };
    }

    fail( token{ token::type::punct, std::string( 1, c ), line, column },
          std::string( "unexpected character '" ) + c + "'" );
  }

  token lex_number( std::size_t line, std::size_t column )
  {
    std::string text;
    const auto take_digits = [&]() {
      bool any = false;
      while ( pos_ < text_.size() && std::isdigit( static_cast<unsigned char>( text_[pos_] ) ) )
      {
        text.push_back( text_[pos_] );
        advance();
        any = true;
      }
      return any;
    };

    if ( text_[pos_] == '-' )
    {
      text.push_back( '-' );
      advance();
    }
    take_digits();
    if ( pos_ < text_.size() && text_[pos_] == '.' )
    {
      if ( pos_ + 1 >= text_.size() || !std::isdigit( static_cast<unsigned char>( text_[pos_ + 1] ) ) )
      {
        fail( token{ token::type::number, text, line, column },
              "digits required after decimal point" );
      }
      text.push_back( '.' );
      advance();
      take_digits();
    }
    if ( pos_ < text_.size() && ( text_[pos_] == 'e' || text_[pos_] == 'E' ) )
    {
      std::string suffix( 1, text_[pos_] );
      advance();
      if ( pos_ < text_.size() && ( text_[pos_] == '+' || text_[pos_] == '-' ) )
      {
        suffix.push_back( text_[pos_] );
        advance();
      }
      if ( pos_ >= text_.size() || !std::isdigit( static_cast<unsigned char>( text_[pos_] ) ) )
      {
        fail( token{ token::type::number, text + suffix, line, column },
              "digits required in exponent" );
      }
      text += suffix;
      take_digits();
    }
    return token{ token::type::number, std::move( text ), line, column };
  }

  std::string_view text_;
  std::size_t pos_{ 0 };
  std::size_t line_{ 1 };
  std::size_t column_{ 1 };
};

class parser
{
public:
  explicit parser( std::vector<token> tokens ) : tokens_( std::move( tokens ) ) {}

  spec_document run()
  {
    while ( at_keyword( "domain" ) || at_keyword( "expr" ) || at_keyword( "unit" ) ||
            at_keyword( "network" ) )
    {
      if ( at_keyword( "domain" ) )
      {
        parse_domain();
      }
      else if ( at_keyword( "expr" ) )
      {
        parse_expr_decl();
      }
      else if ( at_keyword( "unit" ) )
      {
        parse_unit_decl();
      }
      else
      {
        parse_network_decl();
      }
    }
    expect_keyword( "main" );
    expect_punct( "=" );
    const token name = expect_name_token();
    if ( !is_declared( name.text ) )
    {
      fail( name, "unknown name '" + name.text + "'" );
    }
    doc_.main = name.text;
    expect_punct( ";" );
    if ( peek().kind != token::type::end )
    {
      fail( peek(), "expected end of input" );
    }
    return std::move( doc_ );
  }

private:
  const token& peek() const { return tokens_[pos_]; }

  const token& advance() { return tokens_[pos_++]; }

  bool at_keyword( std::string_view kw ) const
  {
    return peek().kind == token::type::identifier && peek().text == kw;
  }

  bool at_punct( std::string_view p ) const
  {
    return peek().kind == token::type::punct && peek().text == p;
  }

  void expect_keyword( std::string_view kw )
  {
    if ( !at_keyword( kw ) )
    {
      fail( peek(), "expected '" + std::string( kw ) + "'" );
    }
    advance();
  }

  void expect_punct( std::string_view p )
  {
    if ( !at_punct( p ) )
    {
      fail( peek(), "expected '" + std::string( p ) + "'" );
    }
    advance();
  }

  token expect_name_token()
  {
    if ( peek().kind != token::type::identifier )
    {
      fail( peek(), "expected a name" );
    }
    if ( keywords().count( peek().text ) > 0 )
    {
      fail( peek(), "keyword '" + peek().text + "' cannot be used as a name" );
    }
    return advance();
  }

  token declare_name()
  {
    const token name = expect_name_token();
    if ( is_declared( name.text ) )
    {
      fail( name, "duplicate name '" + name.text + "'" );
    }
    return name;
  }

  bool is_declared( const std::string& name ) const
  {
    return doc_.domains.count( name ) || doc_.exprs.count( name ) || doc_.units.count( name ) ||
           doc_.networks.count( name );
  }

  double number_value( const token& tok )
  {
    double value = 0.0;
    const char* first = tok.text.data();
    const char* last = first + tok.text.size();
    const auto r = std::from_chars( first, last, value );
    if ( r.ec != std::errc{} || r.ptr != last || !std::isfinite( value ) )
    {
      fail( tok, "number out of range" );
    }
    return value;
  }

  token expect_number_token()
  {
    if ( peek().kind != token::type::number )
    {
      fail( peek(), "expected a number" );
    }
    return advance();
  }

  std::vector<double> parse_vec( std::vector<token>* entry_tokens )
  {
    expect_punct( "[" );
    std::vector<double> values;
    while ( true )
    {
      const token num = expect_number_token();
      values.push_back( number_value( num ) );
      if ( entry_tokens )
      {
        entry_tokens->push_back( num );
      }
      if ( at_punct( "," ) )
      {
        advance();
        continue;
      }
      expect_punct( "]" );
      return values;
    }
  }

  void parse_domain()
  {
    expect_keyword( "domain" );
    const token name = declare_name();
    expect_punct( "{" );
    expect_keyword( "center" );
    expect_punct( "=" );
    const std::vector<double> centers = parse_vec( nullptr );
    expect_punct( ";" );
    expect_keyword( "width" );
    expect_punct( "=" );
    const token width_open = peek();
    std::vector<token> width_tokens;
    const std::vector<double> widths = parse_vec( &width_tokens );
    expect_punct( ";" );
    expect_punct( "}" );

    if ( centers.size() != widths.size() )
    {
      fail( width_open, "center/width length mismatch" );
    }
    for ( std::size_t i = 0; i < widths.size(); ++i )
    {
      if ( !( widths[i] > 0.0 ) )
      {
        fail( width_tokens[i], "width must be positive" );
      }
    }
    doc_.domains.emplace( name.text, hyper_rect_domain( centers, widths ) );
  }

  void parse_expr_decl()
  {
    expect_keyword( "expr" );
    const token name = declare_name();
    expect_punct( "=" );
    bool_expr body = parse_or_expr();
    expect_punct( ";" );
    doc_.exprs.emplace( name.text, std::move( body ) );
  }

  bool_expr parse_or_expr()
  {
    std::vector<bool_expr> children;
    children.push_back( parse_and_expr() );
    while ( at_punct( "|" ) )
    {
      advance();
      children.push_back( parse_and_expr() );
    }
    if ( children.size() == 1 )
    {
      return std::move( children.front() );
    }
    return bool_expr::disjunction( std::move( children ) );
  }

  bool_expr parse_and_expr()
  {
    std::vector<bool_expr> children;
    children.push_back( parse_not_expr() );
    while ( at_punct( "&" ) )
    {
      advance();
      children.push_back( parse_not_expr() );
    }
    if ( children.size() == 1 )
    {
      return std::move( children.front() );
    }
    return bool_expr::conjunction( std::move( children ) );
  }

  bool_expr parse_not_expr()
  {
    if ( at_punct( "!" ) )
    {
      advance();
      return bool_expr::negation( parse_not_expr() );
    }
    if ( at_punct( "(" ) )
    {
      advance();
      bool_expr inner = parse_or_expr();
      expect_punct( ")" );
      return inner;
    }
    return parse_pred();
  }

  bool_expr parse_pred()
  {
    expect_keyword( "rect" );
    expect_punct( "(" );
    expect_keyword( "x" );
    expect_punct( "[" );
    const token axis_tok = expect_number_token();
    std::size_t axis = 0;
    {
      const char* first = axis_tok.text.data();
      const char* last = first + axis_tok.text.size();
      const auto r = std::from_chars( first, last, axis );
      if ( r.ec != std::errc{} || r.ptr != last )
      {
        fail( axis_tok, "expected a nonnegative integer axis index" );
      }
    }
    if ( axis > 1023 )
    {
      fail( axis_tok, "axis index too large" );
    }
    expect_punct( "]" );
    expect_punct( "," );
    expect_keyword( "center" );
    expect_punct( "=" );
    const double center = number_value( expect_number_token() );
    expect_punct( "," );
    expect_keyword( "width" );
    expect_punct( "=" );
    const token width_tok = expect_number_token();
    const double width = number_value( width_tok );
    if ( !( width > 0.0 ) )
    {
      fail( width_tok, "width must be positive" );
    }
    expect_punct( ")" );
    return bool_expr::pred( axis, rect_predicate( center, width ) );
  }

  const hyper_rect_domain& resolve_domain( const token& name )
  {
    const auto it = doc_.domains.find( name.text );
    if ( it == doc_.domains.end() )
    {
      if ( is_declared( name.text ) )
      {
        fail( name, "'" + name.text + "' is not a domain" );
      }
      fail( name, "unknown name '" + name.text + "'" );
    }
    return it->second;
  }

  std::vector<std::string> parse_domain_namelist()
  {
    std::vector<std::string> names;
    std::size_t arity = 0;
    while ( true )
    {
      const token name = expect_name_token();
      const hyper_rect_domain& d = resolve_domain( name );
      if ( names.empty() )
      {
        arity = d.arity();
      }
      else if ( d.arity() != arity )
      {
        fail( name, "domain arities differ" );
      }
      names.push_back( name.text );
      if ( at_punct( "," ) )
      {
        advance();
        continue;
      }
      return names;
    }
  }

  void parse_unit_decl()
  {
    expect_keyword( "unit" );
    const token name = declare_name();
    expect_punct( "=" );

    if ( at_keyword( "selective" ) )
    {
      advance();
      expect_punct( "(" );
      const token domain_name = expect_name_token();
      resolve_domain( domain_name );
      expect_punct( ")" );
      expect_punct( ";" );
      doc_.units.emplace( name.text, selective_unit_decl{ domain_name.text } );
      return;
    }
    if ( at_keyword( "expr" ) )
    {
      advance();
      expect_punct( "(" );
      const token expr_name = expect_name_token();
      if ( doc_.exprs.find( expr_name.text ) == doc_.exprs.end() )
      {
        if ( is_declared( expr_name.text ) )
        {
          fail( expr_name, "'" + expr_name.text + "' is not an expr" );
        }
        fail( expr_name, "unknown name '" + expr_name.text + "'" );
      }
      expect_punct( ")" );
      expect_punct( ";" );
      doc_.units.emplace( name.text, expr_unit_decl{ expr_name.text } );
      return;
    }
    if ( at_keyword( "truth" ) )
    {
      advance();
      expect_punct( "(" );
      const token bits = peek();
      if ( bits.kind != token::type::number ||
           bits.text.find_first_not_of( "01" ) != std::string::npos )
      {
        fail( bits, "expected a bit string of 0s and 1s" );
      }
      if ( bits.text.size() < 2 || !std::has_single_bit( bits.text.size() ) )
      {
        fail( bits, "bit string length must be a power of two" );
      }
      advance();
      expect_punct( ")" );
      expect_punct( ";" );
      doc_.units.emplace( name.text, truth_unit_decl{ bits.text } );
      return;
    }
    if ( at_keyword( "multidomain" ) )
    {
      advance();
      expect_punct( "(" );
      std::vector<std::string> domains = parse_domain_namelist();
      expect_punct( ")" );
      expect_punct( ";" );
      doc_.units.emplace( name.text, multidomain_unit_decl{ std::move( domains ) } );
      return;
    }
    fail( peek(), "expected 'selective', 'expr', 'truth' or 'multidomain'" );
  }

  void parse_network_decl()
  {
    expect_keyword( "network" );
    const token name = declare_name();
    expect_punct( "=" );
    expect_keyword( "or" );
    expect_punct( "(" );
    std::vector<std::string> domains = parse_domain_namelist();
    expect_punct( ")" );
    expect_punct( ";" );
    doc_.networks.emplace( name.text, network_decl{ std::move( domains ) } );
  }

  std::vector<token> tokens_;
  std::size_t pos_{ 0 };
  spec_document doc_;
};

} // namespace

parse_result parse_document( std::string_view text )
{
  try
  {
    lexer lex( text );
    parser p( lex.run() );
    return p.run();
  }
  catch ( const parse_failure& f )
  {
    return parse_error{ f.at.line, f.at.column, f.message, f.at.text };
  }
}

} // namespace receptron
