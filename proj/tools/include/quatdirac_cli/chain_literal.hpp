#pragma once

#include <string_view>

#include "quatdirac/chains.hpp"

namespace quatdirac::cli {

/// Parses a chain-set literal.  Whitespace is ignored, outer braces optional:
///   s:15-13, s:14-6, s:2, u:4
///   {s:[15,13], s:[2], u:[7,5,3,1]}
///   [15,13]_s, [7,5,3,1]_u
/// "s:a-b" is the s-chain a, a-2, ..., b; "u:r" the u-chain 2r-1, ..., 1.
/// An empty literal (or "{}") is the empty chain set.  Errors throw
/// std::invalid_argument naming the 1-based column.
ChainSet parse_chainset(std::string_view text);

/// Comma-separated integers, e.g. "15,14,13"; empty text gives an empty list.
std::vector<Int> parse_int_list(std::string_view text);

}  // namespace quatdirac::cli
