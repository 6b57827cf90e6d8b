/* receptron: threshold logic units with input-dependent weight functions
 * Copyright (C) 2026 The receptron authors
 * MIT License (see LICENSE)
 */

/*!
  \file parallel.hpp
  \brief Deterministic fixed-chunk fan-out over a worker count
*/

#pragma once

#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace receptron
{

/*! \brief Run fn(begin, end, chunk) over a fixed partition of [0, count)

  The partition depends only on count and workers, never on scheduling, so
  per-chunk results can be merged deterministically.  workers == 1 runs
  inline.  The first exception (by chunk index) is rethrown.
*/
template<typename Fn>
void for_each_chunk( std::size_t count, std::size_t workers, Fn&& fn )
{
  if ( workers == 0 )
  {
    workers = 1;
  }
  if ( workers == 1 || count < 2 )
  {
    if ( count > 0 )
    {
      fn( std::size_t{ 0 }, count, std::size_t{ 0 } );
    }
    return;
  }

  if ( workers > count )
  {
    workers = count;
  }
  const std::size_t base = count / workers;
  const std::size_t extra = count % workers;

  std::vector<std::exception_ptr> errors( workers );
  std::vector<std::thread> threads;
  threads.reserve( workers );

  std::size_t begin = 0;
  for ( std::size_t c = 0; c < workers; ++c )
  {
    const std::size_t len = base + ( c < extra ? 1 : 0 );
    const std::size_t end = begin + len;
    threads.emplace_back( [&fn, &errors, begin, end, c]() {
      try
      {
        fn( begin, end, c );
      }
      catch ( ... )
      {
        errors[c] = std::current_exception();
      }
    } );
    begin = end;
  }
  for ( auto& t : threads )
  {
    t.join();
  }
  for ( auto& e : errors )
  {
    if ( e )
    {
      std::rethrow_exception( e );
    }
  }
}

} // namespace receptron
