#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "stanley/ideal.hpp"

namespace stanley {

/// Text format:
///
///     n = 3
///     x1*x2
///     x2^2*x3
///
/// One monomial per line, factors `x<i>` or `x<i>^<e>` joined by `*`,
/// `1` for the unit monomial. Blank lines and `#` comments are ignored.
/// `listed`, when given, receives the number of monomials in the input
/// before minimalization.
MonomialIdeal parse_ideal_text(std::string_view text,
                               std::size_t *listed = nullptr);
std::string render_ideal_text(const MonomialIdeal &ideal);

/// JSON format: `{ "n": 3, "generators": [[1,1,0], [0,2,1]] }`.
MonomialIdeal parse_ideal_json(std::string_view text,
                               std::size_t *listed = nullptr);
std::string render_ideal_json(const MonomialIdeal &ideal);

/// Dispatches on the first non-blank character (`{` selects JSON).
MonomialIdeal parse_ideal(std::string_view text,
                          std::size_t *listed = nullptr);

/// Parses a single monomial such as `x1^2*x3` in ambient n.
Monomial parse_monomial(std::string_view token, std::size_t n);
std::string render_monomial(const Monomial &u);

/// Inline form used on the command line: monomials separated by `,`.
MonomialIdeal parse_ideal_inline(std::string_view list, std::size_t n,
                                 std::size_t *listed = nullptr);

} // namespace stanley
