// SPDX-License-Identifier: MIT
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace qbx
{

/// Worker count: hardware concurrency, capped by the `QBX_THREADS` environment variable.
inline std::size_t worker_count()
{
  std::size_t workers = std::max<std::size_t>( 1u, std::thread::hardware_concurrency() );
  if ( char const* env = std::getenv( "QBX_THREADS" ); env != nullptr && *env != '\0' )
  {
    char* end = nullptr;
    auto const cap = std::strtoul( env, &end, 10 );
    if ( end != env && cap > 0 )
    {
      workers = std::min<std::size_t>( workers, cap );
    }
  }
  return workers;
}

/*! \brief Splits `[0, count)` into contiguous blocks and runs `fn(worker, begin, end)` on each.
 *
 * Blocks are assigned deterministically, so callers that merge per-worker
 * results in worker order get partition-independent output as long as the
 * merge is commutative. The first exception thrown by a worker is rethrown.
 */
template<typename Fn>
void parallel_blocks( std::size_t count, std::size_t workers, Fn&& fn )
{
  workers = std::max<std::size_t>( 1u, std::min( workers, count ) );
  if ( workers <= 1u )
  {
    fn( std::size_t{ 0 }, std::size_t{ 0 }, count );
    return;
  }

  std::vector<std::exception_ptr> errors( workers );
  std::vector<std::thread> threads;
  threads.reserve( workers );
  auto const chunk = ( count + workers - 1 ) / workers;
  for ( std::size_t w = 0; w < workers; ++w )
  {
    auto const begin = std::min( count, w * chunk );
    auto const end = std::min( count, begin + chunk );
    threads.emplace_back( [&, w, begin, end]() {
      try
      {
        fn( w, begin, end );
      }
      catch ( ... )
      {
        errors[w] = std::current_exception();
      }
    } );
  }
  for ( auto& t : threads )
  {
    t.join();
  }
  for ( auto const& e : errors )
  {
    if ( e )
    {
      std::rethrow_exception( e );
    }
  }
}

} // namespace qbx
