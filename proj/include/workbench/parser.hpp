// Recursive-descent parser for the polynomial text grammar:
//
//   expr     := term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := atom ('^' uint)?
//   atom     := rational | var | '(' expr ')'
//   rational := int ('/' uint)?
//   var      := 'T' '[' uint ']' '[' uint ']' | 'S' '[' uint ']' | 't' | 's'
//
// Whitespace is insignificant; a leading '-' negates the first term. With
// bounds attached, out-of-range variable indices raise UnknownVariable.
#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "workbench/polynomial.hpp"

namespace workbench {

struct VariableBounds {
    int first_block = 0;           // q: 1 for type 1, 0 for type 2
    std::vector<int> block_sizes;  // n_i starting at first_block
    int s_count = 0;               // m

    bool allows(VarId v) const;
};

SparsePolynomial parse_polynomial(std::string_view text,
                                  const std::optional<VariableBounds>& bounds = std::nullopt);

}  // namespace workbench
