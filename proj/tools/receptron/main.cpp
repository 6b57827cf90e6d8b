/* receptron: threshold logic units with input-dependent weight functions
 * Copyright (C) 2026 The receptron authors
 * MIT License (see LICENSE)
 */

#include <CLI11.hpp>

#include "commands.hpp"

int main( int argc, char** argv )
{
  using receptron::cli::run_config;

  CLI::App app{ "Selective threshold-logic units with input-dependent weights" };
  app.require_subcommand( 1 );

  run_config cfg;

  const auto add_spec = [&]( CLI::App* cmd ) {
    cmd->add_option( "--spec", cfg.spec_path, "Path to a .rcp spec file" )->required();
  };
  const auto add_workers = [&]( CLI::App* cmd ) {
    cmd->add_option( "--workers", cfg.workers, "Worker thread count" )->default_val( 1 );
  };

  CLI::App* classify = app.add_subcommand( "classify", "Classify a CSV of points against a spec" );
  add_spec( classify );
  classify->add_option( "--points", cfg.points_path, "CSV of input points" )->required();
  classify->add_option( "--out", cfg.out_path, "Output CSV path (default: stdout)" );
  classify->add_flag( "--header", cfg.header, "Points CSV starts with a header row" );
  add_workers( classify );

  CLI::App* render = app.add_subcommand( "render", "Render a 2D decision-region grid" );
  add_spec( render );
  render->add_option( "--out", cfg.out_path, "Output path (.csv for a grid CSV, else PGM P2)" )
      ->required();
  render->add_option( "--axes", cfg.axes, "Two free axes, e.g. 0,1" )->required();
  render->add_option( "--slice", cfg.slice, "Fixed values for the other axes: K=V[,K=V...]" );
  render->add_option( "--range", cfg.range, "Sample ranges: lo1:hi1,lo2:hi2" )->required();
  render->add_option( "--res", cfg.resolution, "Grid resolution (pixels per side)" )
      ->default_val( 64 );
  add_workers( render );

  CLI::App* verify = app.add_subcommand( "verify", "Run the equivalence suites for a spec" );
  add_spec( verify );
  verify->add_option( "--samples", cfg.samples, "Sample points per suite" )->default_val( 10000 );
  verify->add_option( "--seed", cfg.seed, "PRNG seed" )->default_val( 0 );
  verify->add_option( "--fault", cfg.fault,
                      "Fault injection for negative controls (none, threshold-sign)" );
  add_workers( verify );

  CLI::App* census_cmd = app.add_subcommand( "census", "Count linearly separable truth tables" );
  census_cmd->add_option( "--n", cfg.census_n, "Input count (1..4)" )->required();
  add_workers( census_cmd );

  CLI::App* synth = app.add_subcommand( "synth", "Synthesize a digital unit from a truth table" );
  synth->add_option( "--table", cfg.table_bits, "Output bits in ascending pattern order" )
      ->required();

  try
  {
    app.parse( argc, argv );
  }
  catch ( const CLI::CallForHelp& e )
  {
    return app.exit( e );
  }
  catch ( const CLI::ParseError& e )
  {
    app.exit( e );
    return receptron::cli::exit_io;
  }

  try
  {
    if ( classify->parsed() )
    {
      return receptron::cli::run_classify( cfg );
    }
    if ( render->parsed() )
    {
      return receptron::cli::run_render( cfg );
    }
    if ( verify->parsed() )
    {
      return receptron::cli::run_verify( cfg );
    }
    if ( census_cmd->parsed() )
    {
      return receptron::cli::run_census( cfg );
    }
    if ( synth->parsed() )
    {
      return receptron::cli::run_synth( cfg );
    }
  }
  catch ( const std::exception& e )
  {
    std::cerr << "error: " << e.what() << "\n";
    return receptron::cli::exit_io;
  }
  return receptron::cli::exit_io;
}
