/* receptron: threshold logic units with input-dependent weight functions
 * Copyright (C) 2026 The receptron authors
 * MIT License (see LICENSE)
 */

#include "commands.hpp"

#include <algorithm>
#include <iostream>
#include <map>
#include <optional>
#include <vector>

#include <receptron/dsl.hpp>
#include <receptron/interpret.hpp>
#include <receptron/parallel.hpp>
#include <receptron/separability.hpp>
#include <receptron/synthesis.hpp>
#include <receptron/truth_table.hpp>

#include "text_io.hpp"

namespace receptron::cli
{

namespace
{

std::optional<spec_document> load_spec( const std::string& path, int& exit_code )
{
  const auto text = read_file( path );
  if ( !text )
  {
    std::cerr << "error: cannot read spec file '" << path << "'\n";
    exit_code = exit_io;
    return std::nullopt;
  }
  auto result = parse_document( *text );
  if ( const auto* err = std::get_if<parse_error>( &result ) )
  {
    std::cerr << "error: " << path << ":" << err->line << ":" << err->column << ": "
              << err->message << "\n";
    exit_code = exit_parse;
    return std::nullopt;
  }
  return std::get<spec_document>( std::move( result ) );
}

int emit( const run_config& cfg, const std::string& content )
{
  if ( cfg.out_path.empty() || cfg.out_path == "-" )
  {
    std::cout << content;
    return exit_ok;
  }
  if ( !write_file( cfg.out_path, content ) )
  {
    std::cerr << "error: cannot write output file '" << cfg.out_path << "'\n";
    return exit_io;
  }
  return exit_ok;
}

std::string point_text( std::span<const double> p )
{
  std::string out = "(";
  for ( std::size_t i = 0; i < p.size(); ++i )
  {
    if ( i > 0 )
    {
      out += ", ";
    }
    out += format_double( p[i] );
  }
  out += ')';
  return out;
}

} // namespace

int run_classify( const run_config& cfg )
{
  int exit_code = exit_ok;
  const auto doc = load_spec( cfg.spec_path, exit_code );
  if ( !doc )
  {
    return exit_code;
  }
  const compiled_artifact artifact = compiled_artifact::compile_main( *doc );
  const std::size_t arity = artifact.input_arity();

  const auto text = read_file( cfg.points_path );
  if ( !text )
  {
    std::cerr << "error: cannot read points file '" << cfg.points_path << "'\n";
    return exit_io;
  }

  std::vector<std::string> header_names;
  std::vector<std::vector<std::string>> row_fields;
  std::vector<std::vector<double>> rows;

  std::size_t line_number = 0;
  bool header_pending = cfg.header;
  for ( const auto& raw_line : split( *text, '\n' ) )
  {
    ++line_number;
    const std::string line = trim( raw_line );
    if ( line.empty() )
    {
      continue;
    }
    std::vector<std::string> fields;
    for ( const auto& f : split( line, ',' ) )
    {
      fields.push_back( trim( f ) );
    }
    if ( header_pending )
    {
      header_names = fields;
      header_pending = false;
      continue;
    }
    if ( fields.size() != arity )
    {
      std::cerr << "error: line " << line_number << ": expected " << arity
                << " columns matching the spec arity, got " << fields.size() << "\n";
      return exit_io;
    }
    std::vector<double> values( arity );
    for ( std::size_t i = 0; i < arity; ++i )
    {
      const auto v = parse_double( fields[i] );
      if ( !v )
      {
        std::cerr << "error: line " << line_number << ": '" << fields[i]
                  << "' is not a finite number\n";
        return exit_io;
      }
      values[i] = *v;
    }
    row_fields.push_back( std::move( fields ) );
    rows.push_back( std::move( values ) );
  }

  std::vector<int> bits( rows.size(), 0 );
  try
  {
    for_each_chunk( rows.size(), cfg.workers,
                    [&]( std::size_t begin, std::size_t end, std::size_t ) {
                      for ( std::size_t i = begin; i < end; ++i )
                      {
                        bits[i] = artifact.evaluate( rows[i] );
                      }
                    } );
  }
  catch ( const std::exception& e )
  {
    std::cerr << "error: evaluation failed: " << e.what() << "\n";
    return exit_io;
  }

  std::string out;
  if ( header_names.size() == arity )
  {
    for ( std::size_t i = 0; i < arity; ++i )
    {
      out += header_names[i];
      out += ',';
    }
  }
  else
  {
    for ( std::size_t i = 0; i < arity; ++i )
    {
      out += 'x';
      out += std::to_string( i );
      out += ',';
    }
  }
  out += "output\n";
  for ( std::size_t r = 0; r < rows.size(); ++r )
  {
    for ( const auto& f : row_fields[r] )
    {
      out += f;
      out += ',';
    }
    out += bits[r] ? '1' : '0';
    out += '\n';
  }
  return emit( cfg, out );
}

int run_render( const run_config& cfg )
{
  int exit_code = exit_ok;
  const auto doc = load_spec( cfg.spec_path, exit_code );
  if ( !doc )
  {
    return exit_code;
  }
  const compiled_artifact artifact = compiled_artifact::compile_main( *doc );
  const std::size_t arity = artifact.input_arity();

  if ( cfg.resolution < 2 )
  {
    std::cerr << "error: --res must be at least 2\n";
    return exit_io;
  }

  const auto axis_parts = split( cfg.axes, ',' );
  if ( axis_parts.size() != 2 )
  {
    std::cerr << "error: --axes must name exactly two axes, e.g. 0,1\n";
    return exit_io;
  }
  const auto axis1 = parse_index( trim( axis_parts[0] ) );
  const auto axis2 = parse_index( trim( axis_parts[1] ) );
  if ( !axis1 || !axis2 || *axis1 >= arity || *axis2 >= arity || *axis1 == *axis2 )
  {
    std::cerr << "error: --axes must name two distinct axes below " << arity << "\n";
    return exit_io;
  }

  const auto range_parts = split( cfg.range, ',' );
  if ( range_parts.size() != 2 )
  {
    std::cerr << "error: --range must be lo1:hi1,lo2:hi2\n";
    return exit_io;
  }
  double lo[2];
  double hi[2];
  for ( int a = 0; a < 2; ++a )
  {
    const auto bounds = split( trim( range_parts[a] ), ':' );
    std::optional<double> l, h;
    if ( bounds.size() == 2 )
    {
      l = parse_double( trim( bounds[0] ) );
      h = parse_double( trim( bounds[1] ) );
    }
    if ( !l || !h || !( *l < *h ) )
    {
      std::cerr << "error: --range must be lo1:hi1,lo2:hi2 with lo < hi\n";
      return exit_io;
    }
    lo[a] = *l;
    hi[a] = *h;
  }

  std::map<std::size_t, double> slice;
  if ( !trim( cfg.slice ).empty() )
  {
    for ( const auto& part : split( cfg.slice, ',' ) )
    {
      const auto kv = split( trim( part ), '=' );
      std::optional<std::size_t> axis;
      std::optional<double> value;
      if ( kv.size() == 2 )
      {
        axis = parse_index( trim( kv[0] ) );
        value = parse_double( trim( kv[1] ) );
      }
      if ( !axis || !value )
      {
        std::cerr << "error: --slice must be K=V[,K=V...]\n";
        return exit_io;
      }
      slice[*axis] = *value;
    }
  }
  for ( std::size_t a = 0; a < arity; ++a )
  {
    const bool free_axis = a == *axis1 || a == *axis2;
    if ( free_axis && slice.count( a ) )
    {
      std::cerr << "error: --slice must not fix a free axis\n";
      return exit_io;
    }
    if ( !free_axis && !slice.count( a ) )
    {
      std::cerr << "error: --slice must fix axis " << a << "\n";
      return exit_io;
    }
  }
  if ( slice.size() + 2 != arity )
  {
    std::cerr << "error: --slice names an axis outside the spec arity\n";
    return exit_io;
  }

  const std::size_t res = cfg.resolution;
  std::vector<int> pixels( res * res, 0 );
  std::vector<double> base( arity, 0.0 );
  for ( const auto& [axis, value] : slice )
  {
    base[axis] = value;
  }

  // pixel (0,0) sits at the (min axis-1, max axis-2) corner; samples are cell centers
  const auto sample1 = [&]( std::size_t col ) {
    return lo[0] + ( static_cast<double>( col ) + 0.5 ) * ( hi[0] - lo[0] ) /
                       static_cast<double>( res );
  };
  const auto sample2 = [&]( std::size_t row ) {
    return hi[1] - ( static_cast<double>( row ) + 0.5 ) * ( hi[1] - lo[1] ) /
                       static_cast<double>( res );
  };

  try
  {
    for_each_chunk( res * res, cfg.workers, [&]( std::size_t begin, std::size_t end, std::size_t ) {
      std::vector<double> point = base;
      for ( std::size_t i = begin; i < end; ++i )
      {
        point[*axis1] = sample1( i % res );
        point[*axis2] = sample2( i / res );
        pixels[i] = artifact.evaluate( point );
      }
    } );
  }
  catch ( const std::exception& e )
  {
    std::cerr << "error: evaluation failed: " << e.what() << "\n";
    return exit_io;
  }

  std::string out;
  const bool csv = cfg.out_path.size() >= 4 &&
                   cfg.out_path.compare( cfg.out_path.size() - 4, 4, ".csv" ) == 0;
  if ( csv )
  {
    out += 'x';
    out += std::to_string( *axis1 );
    out += ",x";
    out += std::to_string( *axis2 );
    out += ",output\n";
    for ( std::size_t i = 0; i < pixels.size(); ++i )
    {
      out += format_double( sample1( i % res ) );
      out += ',';
      out += format_double( sample2( i / res ) );
      out += ',';
      out += pixels[i] ? '1' : '0';
      out += '\n';
    }
  }
  else
  {
    out += "P2\n";
    out += std::to_string( res );
    out += ' ';
    out += std::to_string( res );
    out += "\n255\n";
    for ( std::size_t r = 0; r < res; ++r )
    {
      for ( std::size_t c = 0; c < res; ++c )
      {
        if ( c > 0 )
        {
          out += ' ';
        }
        out += pixels[r * res + c] ? "255" : "0";
      }
      out += '\n';
    }
  }
  return emit( cfg, out );
}

int run_verify( const run_config& cfg )
{
  int exit_code = exit_ok;
  const auto doc = load_spec( cfg.spec_path, exit_code );
  if ( !doc )
  {
    return exit_code;
  }
  if ( cfg.samples < 1 )
  {
    std::cerr << "error: --samples must be at least 1\n";
    return exit_io;
  }

  verify_options options;
  options.samples = cfg.samples;
  options.seed = cfg.seed;
  options.workers = cfg.workers == 0 ? 1 : cfg.workers;
  if ( cfg.fault == "threshold-sign" )
  {
    options.fault = fault_mode::threshold_sign;
  }
  else if ( !cfg.fault.empty() && cfg.fault != "none" )
  {
    std::cerr << "error: unknown --fault mode '" << cfg.fault << "'\n";
    return exit_io;
  }

  const document_verification verification = verify_document( *doc, options );

  std::string out;
  out += "seed: " + std::to_string( cfg.seed ) + "\n";
  out += "samples: " + std::to_string( cfg.samples ) + "\n";
  for ( const auto& suite : verification.suites )
  {
    out += "suite: " + suite.label + ": points=" + std::to_string( suite.points ) +
           " mismatches=" + std::to_string( suite.mismatches ) + "\n";
    for ( const auto& ex : suite.counterexamples )
    {
      out += "  counterexample: " + point_text( ex.point ) +
             " expected=" + std::to_string( ex.expected ) +
             " actual=" + std::to_string( ex.actual ) + "\n";
    }
  }
  out += "total mismatches: " + std::to_string( verification.total_mismatches() ) + "\n";
  std::cout << out;
  return verification.total_mismatches() == 0 ? exit_ok : exit_mismatch;
}

int run_census( const run_config& cfg )
{
  if ( cfg.census_n < 1 || cfg.census_n > 4 )
  {
    std::cerr << "error: --n must be between 1 and 4\n";
    return exit_io;
  }
  const census_result result = census( cfg.census_n, cfg.workers == 0 ? 1 : cfg.workers );
  std::string out = "n,separable,total,ratio\n";
  out += std::to_string( cfg.census_n ) + "," + std::to_string( result.separable ) + "," +
         std::to_string( result.total ) + "," + format_double( result.ratio() ) + "\n";
  std::cout << out;
  return exit_ok;
}

int run_synth( const run_config& cfg )
{
  const std::string& bits = cfg.table_bits;
  if ( bits.empty() || bits.find_first_not_of( "01" ) != std::string::npos ||
       ( bits.size() & ( bits.size() - 1 ) ) != 0 || bits.size() < 2 )
  {
    std::cerr << "error: --table must be a bit string whose length is a power of two (>= 2)\n";
    return exit_io;
  }
  const truth_table table = truth_table::from_string( bits );
  const unit synthesized = synthesize_digital( table );

  std::size_t matches = 0;
  for ( std::uint64_t p = 0; p < table.size(); ++p )
  {
    if ( synthesized.activate( pattern_inputs( p, table.num_inputs() ) ) == table.bit( p ) )
    {
      ++matches;
    }
  }

  std::string out;
  out += "unit synth = truth(" + bits + ");\n";
  out += "main = synth;\n";
  out += "# verified " + std::to_string( matches ) + "/" + std::to_string( table.size() ) +
         " patterns\n";
  std::cout << out;
  return matches == table.size() ? exit_ok : exit_mismatch;
}

} // namespace receptron::cli
