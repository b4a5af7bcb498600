#pragma once

#include <string_view>

#include "mlint/frontend/ast.hpp"
#include "mlint/frontend/tokenizer.hpp"

namespace mlint {

/// Builds a syntax tree from a token stream. Throws SyntaxError.
///
/// Accepts Python 3.8+ syntax. Nesting deeper than kMaxNesting (brackets,
/// unary chains, blocks) is rejected instead of recursing without bound.
Ast parse_tokens(std::string_view text, const TokenStream& tokens);

inline constexpr int kMaxNesting = 180;

}  // namespace mlint
