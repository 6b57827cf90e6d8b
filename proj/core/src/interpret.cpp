/* receptron: threshold logic units with input-dependent weight functions
 * Copyright (C) 2026 The receptron authors
 * MIT License (see LICENSE)
 */

#include "receptron/interpret.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <utility>

#include "receptron/boolexpr.hpp"
#include "receptron/parallel.hpp"
#include "receptron/synthesis.hpp"
#include "receptron/truth_table.hpp"

namespace receptron
{

namespace
{

std::uint64_t splitmix64( std::uint64_t x )
{
  x += 0x9E3779B97F4A7C15ull;
  x = ( x ^ ( x >> 30 ) ) * 0xBF58476D1CE4E5B9ull;
  x = ( x ^ ( x >> 27 ) ) * 0x94D049BB133111EBull;
  return x ^ ( x >> 31 );
}

std::vector<hyper_rect_domain> resolve_domains( const spec_document& doc,
                                                const std::vector<std::string>& names )
{
  std::vector<hyper_rect_domain> out;
  out.reserve( names.size() );
  for ( const auto& n : names )
  {
    out.push_back( doc.domains.at( n ) );
  }
  return out;
}

struct axis_span
{
  double lo;
  double hi;
  bool seen{ false };

  void widen( double center, double width )
  {
    // full width on each side of the interval, so samples fall in and out
    const double l = center - width;
    const double h = center + width;
    if ( !seen )
    {
      lo = l;
      hi = h;
      seen = true;
    }
    else
    {
      lo = std::min( lo, l );
      hi = std::max( hi, h );
    }
  }
};

void collect_expr_spans( const bool_expr& e, std::vector<axis_span>& spans )
{
  if ( e.kind() == bool_expr::node_kind::pred )
  {
    spans[e.axis()].widen( e.predicate().center(), e.predicate().width() );
    return;
  }
  for ( const auto& c : e.children() )
  {
    collect_expr_spans( c, spans );
  }
}

box_sampler make_sampler( std::vector<axis_span> spans, std::uint64_t seed )
{
  std::vector<double> lo( spans.size() );
  std::vector<double> hi( spans.size() );
  for ( std::size_t i = 0; i < spans.size(); ++i )
  {
    lo[i] = spans[i].seen ? spans[i].lo : -1.0;
    hi[i] = spans[i].seen ? spans[i].hi : 1.0;
  }
  return box_sampler( std::move( lo ), std::move( hi ), seed );
}

std::vector<axis_span> domain_spans( const std::vector<hyper_rect_domain>& domains )
{
  std::vector<axis_span> spans( domains.front().arity() );
  for ( const auto& d : domains )
  {
    for ( std::size_t i = 0; i < d.arity(); ++i )
    {
      spans[i].widen( d.axis( i ).center(), d.axis( i ).width() );
    }
  }
  return spans;
}

unit build_selective_unit_with_fault( const hyper_rect_domain& d, fault_mode fault )
{
  if ( fault == fault_mode::none )
  {
    return build_selective_receptron( d );
  }
  // negative control: lower threshold flipped into the positive range, which
  // rejects the in-domain sum S = 0
  std::vector<weight_function> weights;
  weights.reserve( d.arity() );
  for ( const auto& axis : d.axes() )
  {
    weights.push_back( selective_weight( axis ) );
  }
  return unit( std::move( weights ), threshold_mode::double_window( 0.5, 1.5 ) );
}

using evaluator = std::function<int( std::span<const double> )>;
using boundary_check = std::function<bool( std::span<const double> )>;

suite_result run_sampled_suite( std::string label, const evaluator& oracle,
                                const evaluator& subject, const boundary_check& on_boundary,
                                box_sampler& sampler, std::size_t samples, std::size_t workers )
{
  // points are drawn sequentially so the stream is identical for any worker
  // count; evaluation fans out afterwards
  std::vector<std::vector<double>> points;
  points.reserve( samples );
  for ( std::size_t i = 0; i < samples; ++i )
  {
    std::vector<double> p = sampler.next();
    while ( on_boundary( p ) )
    {
      p = sampler.next();
    }
    points.push_back( std::move( p ) );
  }

  const std::size_t chunk_count = workers == 0 ? 1 : workers;
  std::vector<std::size_t> chunk_mismatches( chunk_count, 0 );
  std::vector<std::vector<counterexample>> chunk_examples( chunk_count );

  for_each_chunk( points.size(), chunk_count,
                  [&]( std::size_t begin, std::size_t end, std::size_t chunk ) {
                    for ( std::size_t i = begin; i < end; ++i )
                    {
                      const int expected = oracle( points[i] );
                      const int actual = subject( points[i] );
                      if ( expected != actual )
                      {
                        ++chunk_mismatches[chunk];
                        if ( chunk_examples[chunk].size() < 10 )
                        {
                          chunk_examples[chunk].push_back( { points[i], expected, actual } );
                        }
                      }
                    }
                  } );

  suite_result result;
  result.label = std::move( label );
  result.points = points.size();
  for ( std::size_t c = 0; c < chunk_count; ++c )
  {
    result.mismatches += chunk_mismatches[c];
    for ( auto& ex : chunk_examples[c] )
    {
      if ( result.counterexamples.size() < 10 )
      {
        result.counterexamples.push_back( std::move( ex ) );
      }
    }
  }
  return result;
}

} // namespace

compiled_artifact compiled_artifact::compile( const spec_document& doc, const std::string& name )
{
  compiled_artifact a;
  if ( const auto it = doc.domains.find( name ); it != doc.domains.end() )
  {
    a.kind_ = artifact_kind::domain_oracle;
    a.input_arity_ = it->second.arity();
    a.impl_ = it->second;
    return a;
  }
  if ( const auto it = doc.exprs.find( name ); it != doc.exprs.end() )
  {
    a.kind_ = artifact_kind::expression;
    a.input_arity_ = it->second.arity();
    a.impl_ = it->second;
    return a;
  }
  if ( const auto it = doc.units.find( name ); it != doc.units.end() )
  {
    if ( const auto* s = std::get_if<selective_unit_decl>( &it->second ) )
    {
      const auto& d = doc.domains.at( s->domain );
      a.kind_ = artifact_kind::selective_unit;
      a.input_arity_ = d.arity();
      a.impl_ = build_selective_receptron( d );
    }
    else if ( const auto* x = std::get_if<expr_unit_decl>( &it->second ) )
    {
      const auto& e = doc.exprs.at( x->expr );
      a.kind_ = artifact_kind::expr_unit;
      a.input_arity_ = e.arity();
      a.impl_ = build_expr_receptron( e );
    }
    else if ( const auto* t = std::get_if<truth_unit_decl>( &it->second ) )
    {
      const truth_table table = truth_table::from_string( t->bits );
      a.kind_ = artifact_kind::truth_unit;
      a.input_arity_ = table.num_inputs();
      a.impl_ = synthesize_digital( table );
    }
    else if ( const auto* m = std::get_if<multidomain_unit_decl>( &it->second ) )
    {
      const auto domains = resolve_domains( doc, m->domains );
      a.kind_ = artifact_kind::multidomain_unit;
      a.input_arity_ = domains.front().arity();
      a.fan_copies_ = domains.size();
      a.impl_ = build_multidomain_unit( domains );
    }
    return a;
  }
  if ( const auto it = doc.networks.find( name ); it != doc.networks.end() )
  {
    const auto domains = resolve_domains( doc, it->second.domains );
    a.kind_ = artifact_kind::disjunction_network;
    a.input_arity_ = domains.front().arity();
    a.impl_ = build_disjunction_network( domains );
    return a;
  }
  throw std::invalid_argument( "compile: unknown name '" + name + "'" );
}

compiled_artifact compiled_artifact::compile_main( const spec_document& doc )
{
  return compile( doc, doc.main );
}

int compiled_artifact::evaluate( std::span<const double> x ) const
{
  if ( x.size() != input_arity_ )
  {
    throw std::invalid_argument( "artifact: input arity " + std::to_string( x.size() ) +
                                 " does not match expected arity " +
                                 std::to_string( input_arity_ ) );
  }
  if ( const auto* d = std::get_if<hyper_rect_domain>( &impl_ ) )
  {
    return d->contains( x ) ? 1 : 0;
  }
  if ( const auto* e = std::get_if<bool_expr>( &impl_ ) )
  {
    return e->evaluate( x ) ? 1 : 0;
  }
  if ( const auto* u = std::get_if<unit>( &impl_ ) )
  {
    if ( fan_copies_ > 1 )
    {
      return u->activate( fan_out( x, fan_copies_ ) );
    }
    return u->activate( x );
  }
  return std::get<network>( impl_ ).evaluate( x ).front();
}

std::size_t document_verification::total_mismatches() const
{
  std::size_t total = 0;
  for ( const auto& s : suites )
  {
    total += s.mismatches;
  }
  return total;
}

document_verification verify_document( const spec_document& doc, const verify_options& options )
{
  document_verification verification;
  std::size_t suite_index = 0;
  const auto suite_seed = [&]() { return splitmix64( options.seed ^ splitmix64( suite_index ) ); };

  for ( const auto& [name, decl] : doc.units )
  {
    ++suite_index;
    if ( const auto* s = std::get_if<selective_unit_decl>( &decl ) )
    {
      const hyper_rect_domain d = doc.domains.at( s->domain );
      const unit u = build_selective_unit_with_fault( d, options.fault );
      box_sampler sampler = make_sampler( domain_spans( { d } ), suite_seed() );
      verification.suites.push_back( run_sampled_suite(
          "unit " + name + " (selective " + s->domain + ") vs domain oracle",
          [&d]( std::span<const double> x ) { return d.contains( x ) ? 1 : 0; },
          [&u]( std::span<const double> x ) { return u.activate( x ); },
          [&d]( std::span<const double> x ) { return d.on_boundary( x ); }, sampler,
          options.samples, options.workers ) );
    }
    else if ( const auto* x = std::get_if<expr_unit_decl>( &decl ) )
    {
      const bool_expr e = doc.exprs.at( x->expr );
      const unit u = build_expr_receptron( e );
      std::vector<axis_span> spans( e.arity() );
      collect_expr_spans( e, spans );
      box_sampler sampler = make_sampler( std::move( spans ), suite_seed() );
      verification.suites.push_back( run_sampled_suite(
          "unit " + name + " (expr " + x->expr + ") vs expression oracle",
          [&e]( std::span<const double> p ) { return e.evaluate( p ) ? 1 : 0; },
          [&u]( std::span<const double> p ) { return u.activate( p ); },
          [&e]( std::span<const double> p ) { return e.on_pred_boundary( p ); }, sampler,
          options.samples, options.workers ) );
    }
    else if ( const auto* t = std::get_if<truth_unit_decl>( &decl ) )
    {
      const truth_table table = truth_table::from_string( t->bits );
      const unit u = synthesize_digital( table );
      suite_result result;
      result.label = "unit " + name + " (truth) vs table, exhaustive";
      for ( std::uint64_t p = 0; p < table.size(); ++p )
      {
        const auto inputs = pattern_inputs( p, table.num_inputs() );
        const int expected = table.bit( p );
        const int actual = u.activate( inputs );
        ++result.points;
        if ( expected != actual )
        {
          ++result.mismatches;
          if ( result.counterexamples.size() < 10 )
          {
            result.counterexamples.push_back( { inputs, expected, actual } );
          }
        }
      }
      verification.suites.push_back( std::move( result ) );
    }
    else if ( const auto* m = std::get_if<multidomain_unit_decl>( &decl ) )
    {
      const auto domains = resolve_domains( doc, m->domains );
      const unit u = build_multidomain_unit( domains );
      const std::size_t copies = domains.size();
      box_sampler sampler = make_sampler( domain_spans( domains ), suite_seed() );
      const auto oracle = [&domains]( std::span<const double> p ) {
        return std::any_of( domains.begin(), domains.end(),
                            [&]( const hyper_rect_domain& d ) { return d.contains( p ); } )
                   ? 1
                   : 0;
      };
      verification.suites.push_back( run_sampled_suite(
          "unit " + name + " (multidomain) vs union oracle", oracle,
          [&u, copies]( std::span<const double> p ) { return u.activate( fan_out( p, copies ) ); },
          [&domains]( std::span<const double> p ) {
            return std::any_of( domains.begin(), domains.end(),
                                [&]( const hyper_rect_domain& d ) { return d.on_boundary( p ); } );
          },
          sampler, options.samples, options.workers ) );
    }
  }

  for ( const auto& [name, decl] : doc.networks )
  {
    ++suite_index;
    const auto domains = resolve_domains( doc, decl.domains );
    const network net = build_disjunction_network( domains );
    const unit multi = build_multidomain_unit( domains );
    const std::size_t copies = domains.size();
    box_sampler sampler = make_sampler( domain_spans( domains ), suite_seed() );
    const auto oracle = [&domains]( std::span<const double> p ) {
      return std::any_of( domains.begin(), domains.end(),
                          [&]( const hyper_rect_domain& d ) { return d.contains( p ); } )
                 ? 1
                 : 0;
    };
    // three-way: report the network bit unless it agrees with the oracle, in
    // which case the deviant is the single-unit route
    const auto subject = [&net, &multi, copies, &oracle]( std::span<const double> p ) {
      const int via_network = net.evaluate( p ).front();
      const int via_unit = multi.activate( fan_out( p, copies ) );
      const int expected = oracle( p );
      if ( via_network != expected )
      {
        return via_network;
      }
      return via_unit;
    };
    verification.suites.push_back( run_sampled_suite(
        "network " + name + " (or) vs union oracle vs multidomain unit", oracle, subject,
        [&domains]( std::span<const double> p ) {
          return std::any_of( domains.begin(), domains.end(),
                              [&]( const hyper_rect_domain& d ) { return d.on_boundary( p ); } );
        },
        sampler, options.samples, options.workers ) );
  }

  return verification;
}

} // namespace receptron
