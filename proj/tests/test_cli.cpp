/* receptron: threshold logic units with input-dependent weight functions
 * Copyright (C) 2026 The receptron authors
 * MIT License (see LICENSE)
 */

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <receptron/boolexpr.hpp>
#include <receptron/domain.hpp>

using namespace receptron;
namespace fs = std::filesystem;

namespace
{

struct cli_result
{
  int exit_code{ -1 };
  std::string out;
  std::string err;
};

fs::path scratch_dir()
{
  static const fs::path dir = [] {
    fs::path p = fs::temp_directory_path() / "receptron-cli-tests";
    fs::remove_all( p );
    fs::create_directories( p );
    return p;
  }();
  return dir;
}

std::string slurp( const fs::path& p )
{
  std::ifstream in( p, std::ios::binary );
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spit( const fs::path& p, const std::string& content )
{
  std::ofstream out( p, std::ios::binary );
  out << content;
}

cli_result run_cli( const std::string& args )
{
  static int counter = 0;
  const fs::path out_file = scratch_dir() / ( "stdout." + std::to_string( counter ) );
  const fs::path err_file = scratch_dir() / ( "stderr." + std::to_string( counter ) );
  ++counter;
  const std::string command = std::string( RECEPTRON_CLI_PATH ) + " " + args + " > " +
                              out_file.string() + " 2> " + err_file.string();
  const int status = std::system( command.c_str() );
  cli_result result;
  result.exit_code = WIFEXITED( status ) ? WEXITSTATUS( status ) : -1;
  result.out = slurp( out_file );
  result.err = slurp( err_file );
  return result;
}

fs::path cube_spec()
{
  const fs::path p = scratch_dir() / "cube.rcp";
  spit( p, "domain A { center = [5, 3, 10]; width = [2, 2, 2]; }\n"
           "unit U = selective(A);\n"
           "main = U;\n" );
  return p;
}

fs::path column_spec()
{
  const fs::path p = scratch_dir() / "column.rcp";
  spit( p, "expr F = (rect(x[0], center=5, width=2) | rect(x[1], center=3, width=2))"
           " & rect(x[2], center=10, width=2);\n"
           "unit U = expr(F);\n"
           "main = U;\n" );
  return p;
}

std::vector<int> parse_pgm( const std::string& text, std::size_t expected_side )
{
  std::istringstream in( text );
  std::string magic;
  std::size_t w = 0, h = 0, maxval = 0;
  in >> magic >> w >> h >> maxval;
  REQUIRE( magic == "P2" );
  REQUIRE( w == expected_side );
  REQUIRE( h == expected_side );
  REQUIRE( maxval == 255 );
  std::vector<int> pixels;
  int v = 0;
  while ( in >> v )
  {
    pixels.push_back( v );
  }
  REQUIRE( pixels.size() == w * h );
  return pixels;
}

} // namespace

TEST_CASE( "classify labels points against the spec oracle" )
{
  const fs::path spec = cube_spec();
  const fs::path pts = scratch_dir() / "pts.csv";
  spit( pts, "5,3,10\n0,0,0\n4.2, 2.5, 9.1\n" );
  const auto r = run_cli( "classify --spec " + spec.string() + " --points " + pts.string() );
  CHECK( r.exit_code == 0 );
  CHECK( r.out == "x0,x1,x2,output\n5,3,10,1\n0,0,0,0\n4.2,2.5,9.1,1\n" );
}

TEST_CASE( "classify keeps a supplied header" )
{
  const fs::path spec = cube_spec();
  const fs::path pts = scratch_dir() / "pts_header.csv";
  spit( pts, "a,b,c\n5,3,10\n" );
  const auto r = run_cli( "classify --header --spec " + spec.string() + " --points " +
                          pts.string() );
  CHECK( r.exit_code == 0 );
  CHECK( r.out == "a,b,c,output\n5,3,10,1\n" );
}

TEST_CASE( "classify of an empty points file emits only the header" )
{
  const fs::path spec = cube_spec();
  const fs::path pts = scratch_dir() / "empty.csv";
  spit( pts, "" );
  const auto r = run_cli( "classify --spec " + spec.string() + " --points " + pts.string() );
  CHECK( r.exit_code == 0 );
  CHECK( r.out == "x0,x1,x2,output\n" );
}

TEST_CASE( "classify rejects arity and format problems with exit 3" )
{
  const fs::path spec = cube_spec();
  const fs::path pts = scratch_dir() / "two_cols.csv";
  spit( pts, "1,2\n" );
  CHECK( run_cli( "classify --spec " + spec.string() + " --points " + pts.string() ).exit_code ==
         3 );
  const fs::path bad = scratch_dir() / "bad_number.csv";
  spit( bad, "1,2,zebra\n" );
  CHECK( run_cli( "classify --spec " + spec.string() + " --points " + bad.string() ).exit_code ==
         3 );
  CHECK( run_cli( "classify --spec " + spec.string() + " --points /nonexistent.csv" ).exit_code ==
         3 );
}

TEST_CASE( "spec parse failures exit 2" )
{
  const fs::path spec = scratch_dir() / "broken.rcp";
  spit( spec, "domain A { center = [0]; width = [2, 2]; }\nmain = A;\n" );
  const fs::path pts = scratch_dir() / "one.csv";
  spit( pts, "0\n" );
  const auto r = run_cli( "classify --spec " + spec.string() + " --points " + pts.string() );
  CHECK( r.exit_code == 2 );
  CHECK( r.err.find( "center/width length mismatch" ) != std::string::npos );
}

TEST_CASE( "census prints the census row" )
{
  const auto r = run_cli( "census --n 3" );
  CHECK( r.exit_code == 0 );
  CHECK( r.out == "n,separable,total,ratio\n3,104,256,0.40625\n" );
  CHECK( run_cli( "census --n 9" ).exit_code == 3 );
}

TEST_CASE( "synth emits a verified declaration" )
{
  const auto r = run_cli( "synth --table 0110" );
  CHECK( r.exit_code == 0 );
  CHECK( r.out.find( "unit synth = truth(0110);" ) != std::string::npos );
  CHECK( r.out.find( "# verified 4/4 patterns" ) != std::string::npos );

  CHECK( run_cli( "synth --table 0000" ).out.find( "# verified 4/4 patterns" ) !=
         std::string::npos );
  CHECK( run_cli( "synth --table 01" ).out.find( "# verified 2/2 patterns" ) !=
         std::string::npos );
  CHECK( run_cli( "synth --table 011" ).exit_code == 3 );
  CHECK( run_cli( "synth --table 01a1" ).exit_code == 3 );
}

TEST_CASE( "render matches the library oracle pixel for pixel" )
{
  const fs::path spec = cube_spec();
  const fs::path out = scratch_dir() / "cube.pgm";
  const auto r = run_cli( "render --spec " + spec.string() + " --axes 0,1 --slice 2=10 " +
                          "--range 0:10,0:10 --res 16 --out " + out.string() );
  REQUIRE( r.exit_code == 0 );
  const auto pixels = parse_pgm( slurp( out ), 16 );

  const hyper_rect_domain cube( { 5.0, 3.0, 10.0 }, { 2.0, 2.0, 2.0 } );
  for ( std::size_t row = 0; row < 16; ++row )
  {
    for ( std::size_t col = 0; col < 16; ++col )
    {
      const double x = 0.0 + ( col + 0.5 ) * 10.0 / 16.0;
      const double y = 10.0 - ( row + 0.5 ) * 10.0 / 16.0;
      const double p[3] = { x, y, 10.0 };
      const int expected = cube.contains( p ) ? 255 : 0;
      CHECK( pixels[row * 16 + col] == expected );
    }
  }
}

TEST_CASE( "render follows the expression through slices" )
{
  const fs::path spec = column_spec();
  const bool_expr expr = bool_expr::conjunction(
      { bool_expr::disjunction( { bool_expr::pred( 0, rect_predicate( 5.0, 2.0 ) ),
                                  bool_expr::pred( 1, rect_predicate( 3.0, 2.0 ) ) } ),
        bool_expr::pred( 2, rect_predicate( 10.0, 2.0 ) ) } );

  SUBCASE( "slice through the band: the region is the cross of the two strips" )
  {
    const fs::path out = scratch_dir() / "band.pgm";
    const auto r = run_cli( "render --spec " + spec.string() + " --axes 0,1 --slice 2=10 " +
                            "--range 0:10,0:10 --res 16 --out " + out.string() );
    REQUIRE( r.exit_code == 0 );
    const auto pixels = parse_pgm( slurp( out ), 16 );
    bool any_active = false;
    for ( std::size_t row = 0; row < 16; ++row )
    {
      for ( std::size_t col = 0; col < 16; ++col )
      {
        const double x = ( col + 0.5 ) * 10.0 / 16.0;
        const double y = 10.0 - ( row + 0.5 ) * 10.0 / 16.0;
        const double p[3] = { x, y, 10.0 };
        const int expected = expr.evaluate( p ) ? 255 : 0;
        any_active |= expected == 255;
        CHECK( pixels[row * 16 + col] == expected );
      }
    }
    CHECK( any_active );
  }
  SUBCASE( "slice outside the band: nothing is active" )
  {
    const fs::path out = scratch_dir() / "outside.pgm";
    const auto r = run_cli( "render --spec " + spec.string() + " --axes 0,1 --slice 2=12 " +
                            "--range 0:10,0:10 --res 16 --out " + out.string() );
    REQUIRE( r.exit_code == 0 );
    for ( const int v : parse_pgm( slurp( out ), 16 ) )
    {
      CHECK( v == 0 );
    }
  }
}

TEST_CASE( "render writes a grid CSV when asked for .csv output" )
{
  const fs::path spec = cube_spec();
  const fs::path out = scratch_dir() / "grid.csv";
  const auto r = run_cli( "render --spec " + spec.string() + " --axes 0,2 --slice 1=3 " +
                          "--range 4:6,9:11 --res 2 --out " + out.string() );
  REQUIRE( r.exit_code == 0 );
  CHECK( slurp( out ) == "x0,x2,output\n"
                         "4.5,10.5,1\n5.5,10.5,1\n"
                         "4.5,9.5,1\n5.5,9.5,1\n" );
}

TEST_CASE( "render validates its grid arguments" )
{
  const fs::path spec = cube_spec();
  const std::string base = "render --spec " + spec.string() + " --out " +
                           ( scratch_dir() / "x.pgm" ).string();
  CHECK( run_cli( base + " --axes 0,1 --range 0:10,0:10 --res 1 --slice 2=10" ).exit_code == 3 );
  CHECK( run_cli( base + " --axes 0,0 --range 0:10,0:10 --slice 2=10" ).exit_code == 3 );
  CHECK( run_cli( base + " --axes 0,1 --range 10:0,0:10 --slice 2=10" ).exit_code == 3 );
  CHECK( run_cli( base + " --axes 0,1 --range 0:10,0:10" ).exit_code == 3 ); // axis 2 unfixed
  CHECK( run_cli( base + " --axes 0,1 --range 0:10,0:10 --slice 1=3,2=10" ).exit_code == 3 );
}

TEST_CASE( "verify passes a sound spec and is byte-stable across worker counts" )
{
  const fs::path spec = cube_spec();
  const auto one = run_cli( "verify --spec " + spec.string() + " --samples 5000 --seed 7 --workers 1" );
  const auto four = run_cli( "verify --spec " + spec.string() + " --samples 5000 --seed 7 --workers 4" );
  CHECK( one.exit_code == 0 );
  CHECK( four.exit_code == 0 );
  CHECK( one.out == four.out );
  CHECK( one.out.find( "mismatches=0" ) != std::string::npos );
  CHECK( one.out.find( "seed: 7" ) != std::string::npos );
}

TEST_CASE( "verify flags an injected threshold fault with exit 1" )
{
  const fs::path spec = cube_spec();
  const auto r = run_cli( "verify --spec " + spec.string() +
                          " --samples 5000 --seed 7 --fault threshold-sign" );
  CHECK( r.exit_code == 1 );
  CHECK( r.out.find( "counterexample:" ) != std::string::npos );
  CHECK( run_cli( "verify --spec " + spec.string() + " --fault banana" ).exit_code == 3 );
}
