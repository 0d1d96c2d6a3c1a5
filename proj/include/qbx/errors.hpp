// SPDX-License-Identifier: MIT
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qbx
{

/// Malformed input text (expressions, truth tables, circuit and netlist files).
class parse_error : public std::runtime_error
{
public:
  parse_error( std::string const& message, std::size_t position = npos )
      : std::runtime_error( position == npos ? message : message + " at position " + std::to_string( position ) ),
        position_( position )
  {
  }

  /// Offset (0-based) or line number the error refers to, `npos` if unknown.
  std::size_t position() const noexcept { return position_; }

  static constexpr std::size_t npos = static_cast<std::size_t>( -1 );

private:
  std::size_t position_;
};

/// Well-formed input that violates a semantic constraint (index out of range, cycle, ...).
class semantic_error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// A verification sweep found a counterexample.
class verification_error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

} // namespace qbx
