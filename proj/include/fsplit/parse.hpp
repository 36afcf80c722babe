#pragma once

#include <string_view>
#include <vector>

#include "fsplit/polynomial.hpp"

namespace fsplit {

/// Parses a polynomial in the input syntax; integer coefficients are reduced
/// mod p. Errors carry line/column (column_offset shifts reported columns
/// when the text is embedded in a larger line).
Polynomial parse_polynomial(const RingPtr& ring, std::string_view text, std::size_t line = 1,
                            std::size_t column_offset = 0);

/// Comma-separated list of polynomials; an empty or blank list gives none.
std::vector<Polynomial> parse_polynomial_list(const RingPtr& ring, std::string_view text,
                                              std::size_t line = 1, std::size_t column_offset = 0);

}  // namespace fsplit
