/* receptron: threshold logic units with input-dependent weight functions
 * Copyright (C) 2026 The receptron authors
 * MIT License (see LICENSE)
 */

/*!
  \file sampling.hpp
  \brief Seeded point sources and equivalence-check reports
*/

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace receptron
{

/*! \brief A source of finite points of fixed arity */
using point_source = std::function<std::vector<double>()>;

/*! \brief Uniform sampler over an axis-aligned box, deterministic per seed */
class box_sampler
{
public:
  box_sampler( std::vector<double> lo, std::vector<double> hi, std::uint64_t seed );

  std::vector<double> next();

  /*! \brief View this sampler as a point_source (the sampler must outlive it) */
  point_source as_source();

private:
  std::vector<double> lo_;
  std::vector<double> hi_;
  std::mt19937_64 engine_;
};

/*! \brief One observed disagreement between two evaluation routes */
struct counterexample
{
  std::vector<double> point;
  int expected{ 0 };
  int actual{ 0 };
};

/*! \brief Outcome of a sampled equivalence check */
struct equivalence_report
{
  /// Counterexamples beyond this cap are counted but not stored.
  static constexpr std::size_t max_stored_counterexamples = 32;

  std::size_t points_tested{ 0 };
  std::size_t mismatches{ 0 };
  std::vector<counterexample> counterexamples;

  bool passed() const { return mismatches == 0; }

  void record_mismatch( std::vector<double> point, int expected, int actual );
};

} // namespace receptron
