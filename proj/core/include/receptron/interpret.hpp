/* receptron: threshold logic units with input-dependent weight functions
 * Copyright (C) 2026 The receptron authors
 * MIT License (see LICENSE)
 */

/*!
  \file interpret.hpp
  \brief Turning parsed documents into evaluators and verification suites
*/

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "dsl.hpp"
#include "network.hpp"
#include "sampling.hpp"

namespace receptron
{

enum class artifact_kind
{
  domain_oracle,
  expression,
  selective_unit,
  expr_unit,
  truth_unit,
  multidomain_unit,
  disjunction_network
};

/*! \brief A named document artifact compiled into an evaluator

  The external arity is the number of analog columns the artifact consumes; a
  multidomain unit fans the external point out internally.
*/
class compiled_artifact
{
public:
  static compiled_artifact compile( const spec_document& doc, const std::string& name );
  static compiled_artifact compile_main( const spec_document& doc );

  artifact_kind kind() const { return kind_; }
  std::size_t input_arity() const { return input_arity_; }

  int evaluate( std::span<const double> x ) const;

private:
  compiled_artifact() = default;

  artifact_kind kind_{ artifact_kind::domain_oracle };
  std::size_t input_arity_{ 0 };
  std::size_t fan_copies_{ 1 };
  std::variant<hyper_rect_domain, bool_expr, unit, network> impl_{ bool_expr::pred(
      0, rect_predicate( 0.0, 1.0 ) ) };
};

/*! \brief Fault injections for negative-control runs of the verifier */
enum class fault_mode
{
  none,
  /// Build selective units with the lower threshold flipped into the positive
  /// range, which breaks activation inside every domain.
  threshold_sign
};

struct verify_options
{
  std::size_t samples{ 10000 };
  std::uint64_t seed{ 0 };
  std::size_t workers{ 1 };
  fault_mode fault{ fault_mode::none };
};

struct suite_result
{
  std::string label;
  std::size_t points{ 0 };
  std::size_t mismatches{ 0 };
  std::vector<counterexample> counterexamples; // capped at 10 per suite
};

struct document_verification
{
  std::vector<suite_result> suites;

  std::size_t total_mismatches() const;
};

/*! \brief Run every applicable equivalence suite over a document

  Each declared unit and network gets one suite: selective units against their
  domain oracle, expr units against expression evaluation, truth units
  exhaustively against their table, multidomain units against the union
  oracle, and disjunction networks three-way (oracle, network, single
  multidomain unit).  Sampled points are pregenerated sequentially from the
  seed, then evaluated across `workers` threads and merged in point order, so
  the report is byte-stable for any worker count.
*/
document_verification verify_document( const spec_document& doc, const verify_options& options );

} // namespace receptron
