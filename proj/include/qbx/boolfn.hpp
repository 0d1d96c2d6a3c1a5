// SPDX-License-Identifier: MIT
/*!
  \file boolfn.hpp
  \brief Single-output Boolean functions: expressions, truth tables, minterms

  Row index convention: for a function of arity k, variable x_i occupies
  bit (k - i) of the row index, i.e. x_1 is the most significant bit and
  row 0 is the all-zeros configuration.
*/
#pragma once

#include "errors.hpp"

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

namespace qbx
{

/// Largest supported arity for explicit truth tables.
inline constexpr unsigned max_arity = 24u;

/*! \brief Abstract syntax tree of a Boolean expression over x_1, x_2, ...
 *
 * `And`, `Or` and `Xor` nodes are n-ary: a chain such as `x1 + x2 + x3`
 * parses to a single `Or` node with three operands.
 */
struct BooleanExpression
{
  enum class Kind
  {
    Constant,
    Variable,
    Not,
    And,
    Or,
    Xor
  };

  Kind kind = Kind::Constant;
  unsigned index = 0u; // variable index (>= 1) or constant value (0/1)
  std::vector<BooleanExpression> operands;

  static BooleanExpression constant( bool value ) { return { Kind::Constant, value ? 1u : 0u, {} }; }

  static BooleanExpression variable( unsigned index )
  {
    if ( index == 0u )
    {
      throw semantic_error( "variable index must be >= 1" );
    }
    return { Kind::Variable, index, {} };
  }

  static BooleanExpression negation( BooleanExpression operand ) { return { Kind::Not, 0u, { std::move( operand ) } }; }

  static BooleanExpression nary( Kind kind, std::vector<BooleanExpression> operands )
  {
    return { kind, 0u, std::move( operands ) };
  }

  bool operator==( BooleanExpression const& ) const = default;

  /// Highest variable index referenced, 0 for variable-free expressions.
  unsigned max_variable() const
  {
    unsigned result = kind == Kind::Variable ? index : 0u;
    for ( auto const& op : operands )
    {
      result = std::max( result, op.max_variable() );
    }
    return result;
  }

  /// Evaluates with x_i read from bit (arity - i) of `row`.
  bool evaluate( std::uint64_t row, unsigned arity ) const
  {
    switch ( kind )
    {
    case Kind::Constant:
      return index != 0u;
    case Kind::Variable:
      return ( ( row >> ( arity - index ) ) & 1u ) != 0u;
    case Kind::Not:
      return !operands.front().evaluate( row, arity );
    case Kind::And:
      return std::all_of( operands.begin(), operands.end(), [&]( auto const& op ) { return op.evaluate( row, arity ); } );
    case Kind::Or:
      return std::any_of( operands.begin(), operands.end(), [&]( auto const& op ) { return op.evaluate( row, arity ); } );
    case Kind::Xor:
    {
      bool value = false;
      for ( auto const& op : operands )
      {
        value ^= op.evaluate( row, arity );
      }
      return value;
    }
    }
    return false;
  }
};

/// Prints an expression in the same syntax `parse_expression` accepts.
inline std::string to_string( BooleanExpression const& expr )
{
  using Kind = BooleanExpression::Kind;
  auto precedence = []( Kind k ) {
    switch ( k )
    {
    case Kind::Or:
      return 0;
    case Kind::Xor:
      return 1;
    case Kind::And:
      return 2;
    default:
      return 3;
    }
  };

  switch ( expr.kind )
  {
  case Kind::Constant:
    return expr.index ? "1" : "0";
  case Kind::Variable:
    return "x" + std::to_string( expr.index );
  case Kind::Not:
  {
    auto inner = to_string( expr.operands.front() );
    return precedence( expr.operands.front().kind ) < 3 ? "~(" + inner + ")" : "~" + inner;
  }
  default:
    break;
  }

  std::string_view const sep = expr.kind == Kind::Or ? " + " : expr.kind == Kind::Xor ? " ^ " : " ";
  std::string out;
  for ( std::size_t i = 0; i < expr.operands.size(); ++i )
  {
    if ( i != 0u )
    {
      out += sep;
    }
    auto const& op = expr.operands[i];
    auto text = to_string( op );
    out += precedence( op.kind ) <= precedence( expr.kind ) ? "(" + text + ")" : text;
  }
  return out;
}

namespace detail
{

class expression_parser
{
public:
  explicit expression_parser( std::string_view text ) : text_( text ) {}

  BooleanExpression parse()
  {
    auto result = parse_or();
    skip_space();
    if ( pos_ != text_.size() )
    {
      throw parse_error( std::string( "unexpected character '" ) + text_[pos_] + "'", pos_ );
    }
    return result;
  }

private:
  void skip_space()
  {
    while ( pos_ < text_.size() && std::isspace( static_cast<unsigned char>( text_[pos_] ) ) )
    {
      ++pos_;
    }
  }

  char peek()
  {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool starts_factor()
  {
    auto const c = peek();
    return c == '~' || c == 'x' || c == 'X' || c == '0' || c == '1' || c == '(';
  }

  static BooleanExpression fold( BooleanExpression::Kind kind, std::vector<BooleanExpression> ops )
  {
    if ( ops.size() == 1u )
    {
      return std::move( ops.front() );
    }
    return BooleanExpression::nary( kind, std::move( ops ) );
  }

  BooleanExpression parse_or()
  {
    std::vector<BooleanExpression> ops;
    ops.push_back( parse_xor() );
    while ( peek() == '+' )
    {
      ++pos_;
      ops.push_back( parse_xor() );
    }
    return fold( BooleanExpression::Kind::Or, std::move( ops ) );
  }

  BooleanExpression parse_xor()
  {
    std::vector<BooleanExpression> ops;
    ops.push_back( parse_and() );
    while ( peek() == '^' )
    {
      ++pos_;
      ops.push_back( parse_and() );
    }
    return fold( BooleanExpression::Kind::Xor, std::move( ops ) );
  }

  BooleanExpression parse_and()
  {
    std::vector<BooleanExpression> ops;
    ops.push_back( parse_factor() );
    for ( ;; )
    {
      if ( peek() == '*' )
      {
        ++pos_;
        ops.push_back( parse_factor() );
      }
      else if ( starts_factor() )
      {
        ops.push_back( parse_factor() );
      }
      else
      {
        break;
      }
    }
    return fold( BooleanExpression::Kind::And, std::move( ops ) );
  }

  BooleanExpression parse_factor()
  {
    auto const c = peek();
    auto const start = pos_;
    switch ( c )
    {
    case '~':
      ++pos_;
      return BooleanExpression::negation( parse_factor() );
    case '0':
    case '1':
      ++pos_;
      return BooleanExpression::constant( c == '1' );
    case '(':
    {
      ++pos_;
      auto inner = parse_or();
      if ( peek() != ')' )
      {
        throw parse_error( "expected ')'", pos_ );
      }
      ++pos_;
      return inner;
    }
    case 'x':
    case 'X':
    {
      ++pos_;
      std::size_t digits = 0u;
      std::uint64_t value = 0u;
      while ( pos_ < text_.size() && std::isdigit( static_cast<unsigned char>( text_[pos_] ) ) )
      {
        value = value * 10u + static_cast<unsigned>( text_[pos_] - '0' );
        if ( value > std::numeric_limits<unsigned>::max() )
        {
          throw parse_error( "variable index too large", start );
        }
        ++pos_;
        ++digits;
      }
      if ( digits == 0u )
      {
        throw parse_error( "expected variable index after 'x'", pos_ );
      }
      if ( value == 0u )
      {
        throw parse_error( "variable index 0 is not allowed", start );
      }
      return BooleanExpression::variable( static_cast<unsigned>( value ) );
    }
    case '\0':
      throw parse_error( "unexpected end of expression", pos_ );
    default:
      throw parse_error( std::string( "unexpected character '" ) + c + "'", pos_ );
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0u;
};

} // namespace detail

/*! \brief Parses an expression such as `~x1 + x2 x3`.
 *
 * Operators by decreasing precedence: `~` (NOT), juxtaposition or `*` (AND),
 * `^` (XOR), `+` (OR). Whitespace is ignored.
 */
inline BooleanExpression parse_expression( std::string_view text )
{
  return detail::expression_parser( text ).parse();
}

/// One input configuration (x_1, ..., x_k).
struct InputConfiguration
{
  std::vector<bool> bits;

  static InputConfiguration from_row( std::uint64_t row, unsigned arity )
  {
    InputConfiguration config;
    config.bits.resize( arity );
    for ( unsigned i = 1; i <= arity; ++i )
    {
      config.bits[i - 1] = ( ( row >> ( arity - i ) ) & 1u ) != 0u;
    }
    return config;
  }

  std::uint64_t row() const
  {
    std::uint64_t r = 0u;
    for ( bool b : bits )
    {
      r = ( r << 1u ) | ( b ? 1u : 0u );
    }
    return r;
  }

  /// x_i for 1-based i.
  bool operator[]( std::size_t i ) const { return bits[i - 1]; }

  std::size_t arity() const { return bits.size(); }

  std::string to_string() const
  {
    std::string s;
    for ( bool b : bits )
    {
      s += b ? '1' : '0';
    }
    return s;
  }

  bool operator==( InputConfiguration const& ) const = default;
};

/// Complete truth table of a k-input, single-output function.
class BooleanFunction
{
public:
  BooleanFunction() : outputs_( 1u, 0u ) {}

  /// Constant-0 function of the given arity.
  explicit BooleanFunction( unsigned arity ) : arity_( check_arity( arity ) ), outputs_( std::size_t{ 1 } << arity, 0u ) {}

  BooleanFunction( unsigned arity, std::vector<std::uint8_t> outputs ) : arity_( check_arity( arity ) ), outputs_( std::move( outputs ) )
  {
    if ( outputs_.size() != ( std::size_t{ 1 } << arity_ ) )
    {
      throw semantic_error( "truth table length must be 2^arity" );
    }
    for ( auto& b : outputs_ )
    {
      b = b != 0u ? 1u : 0u;
    }
  }

  /// From a bit string like "11110001" (row 0 first).
  static BooleanFunction from_bits( std::string_view bits );

  static BooleanFunction constant( unsigned arity, bool value )
  {
    BooleanFunction f( arity );
    std::fill( f.outputs_.begin(), f.outputs_.end(), value ? 1u : 0u );
    return f;
  }

  unsigned arity() const noexcept { return arity_; }
  std::size_t num_rows() const noexcept { return outputs_.size(); }

  bool operator[]( std::uint64_t row ) const { return outputs_[row] != 0u; }
  bool at( InputConfiguration const& config ) const { return ( *this )[config.row()]; }
  void set( std::uint64_t row, bool value ) { outputs_[row] = value ? 1u : 0u; }

  std::vector<std::uint8_t> const& outputs() const noexcept { return outputs_; }

  std::size_t count_ones() const { return static_cast<std::size_t>( std::count( outputs_.begin(), outputs_.end(), 1u ) ); }

  std::string to_bits() const
  {
    std::string s( outputs_.size(), '0' );
    for ( std::size_t i = 0; i < outputs_.size(); ++i )
    {
      s[i] = outputs_[i] ? '1' : '0';
    }
    return s;
  }

  bool operator==( BooleanFunction const& ) const = default;

private:
  static unsigned check_arity( unsigned arity )
  {
    if ( arity > max_arity )
    {
      throw semantic_error( "arity " + std::to_string( arity ) + " exceeds the supported maximum of " + std::to_string( max_arity ) );
    }
    return arity;
  }

  unsigned arity_ = 0u;
  std::vector<std::uint8_t> outputs_;
};

/*! \brief Parses the truth-table file format.
 *
 * `#` starts a comment that runs to the end of the line; the remaining
 * `0`/`1` characters (whitespace allowed anywhere) are the outputs for rows
 * 0, 1, 2, ... The number of bits must be a power of two.
 */
inline BooleanFunction function_from_table_text( std::string_view text )
{
  std::vector<std::uint8_t> bits;
  bool in_comment = false;
  for ( std::size_t i = 0; i < text.size(); ++i )
  {
    auto const c = text[i];
    if ( in_comment )
    {
      in_comment = c != '\n';
      continue;
    }
    if ( c == '#' )
    {
      in_comment = true;
    }
    else if ( c == '0' || c == '1' )
    {
      bits.push_back( c == '1' ? 1u : 0u );
    }
    else if ( !std::isspace( static_cast<unsigned char>( c ) ) )
    {
      throw parse_error( std::string( "invalid character '" ) + c + "' in truth table", i );
    }
  }

  auto const n = bits.size();
  if ( n == 0u || ( n & ( n - 1u ) ) != 0u )
  {
    throw parse_error( "truth table length " + std::to_string( n ) + " is not a power of two" );
  }
  unsigned arity = 0u;
  while ( ( std::size_t{ 1 } << arity ) < n )
  {
    ++arity;
  }
  if ( arity > max_arity )
  {
    throw parse_error( "truth table exceeds the supported maximum arity" );
  }
  return BooleanFunction( arity, std::move( bits ) );
}

inline BooleanFunction BooleanFunction::from_bits( std::string_view bits )
{
  return function_from_table_text( bits );
}

/// Formats a function in the truth-table file format.
inline std::string format_table( BooleanFunction const& f )
{
  return "# arity " + std::to_string( f.arity() ) + "\n" + f.to_bits() + "\n";
}

/// Tabulates `expr` over all 2^arity configurations.
inline BooleanFunction expression_to_function( BooleanExpression const& expr, unsigned arity )
{
  if ( auto const used = expr.max_variable(); used > arity )
  {
    throw semantic_error( "variable x" + std::to_string( used ) + " exceeds arity " + std::to_string( arity ) );
  }
  BooleanFunction f( arity );
  for ( std::uint64_t row = 0; row < f.num_rows(); ++row )
  {
    f.set( row, expr.evaluate( row, arity ) );
  }
  return f;
}

/// Configurations with output 1, in ascending row order.
inline std::vector<InputConfiguration> minterms( BooleanFunction const& f )
{
  std::vector<InputConfiguration> result;
  for ( std::uint64_t row = 0; row < f.num_rows(); ++row )
  {
    if ( f[row] )
    {
      result.push_back( InputConfiguration::from_row( row, f.arity() ) );
    }
  }
  return result;
}

} // namespace qbx
