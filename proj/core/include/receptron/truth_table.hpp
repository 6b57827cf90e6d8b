/* receptron: threshold logic units with input-dependent weight functions
 * Copyright (C) 2026 The receptron authors
 * MIT License (see LICENSE)
 */

/*!
  \file truth_table.hpp
  \brief Dense truth tables over n binary inputs
*/

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace receptron
{

/*! \brief Output bits of a Boolean function, indexed by input pattern

  Pattern p encodes the inputs with bit j of p = input j (LSB = input 0).
  The wire format is a bit string in ascending pattern order: XOR over two
  inputs is "0110".
*/
class truth_table
{
public:
  truth_table( std::size_t num_inputs, std::vector<int> bits );

  /*! \brief Parse a bit string whose length is a power of two (>= 2) */
  static truth_table from_string( std::string_view bits );

  std::string to_string() const;

  std::size_t num_inputs() const { return num_inputs_; }
  std::size_t size() const { return bits_.size(); }
  int bit( std::uint64_t pattern ) const;

  /*! \brief The table as a bit mask; only valid for num_inputs() <= 6 */
  std::uint64_t as_mask() const;

  friend bool operator==( const truth_table& a, const truth_table& b )
  {
    return a.num_inputs_ == b.num_inputs_ && a.bits_ == b.bits_;
  }

private:
  std::size_t num_inputs_;
  std::vector<std::uint8_t> bits_;
};

/*! \brief The analog image of a binary pattern: bit j -> x[j] in {0.0, 1.0} */
std::vector<double> pattern_inputs( std::uint64_t pattern, std::size_t num_inputs );

} // namespace receptron
