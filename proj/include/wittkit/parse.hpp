#pragma once

// Text grammars shared by the CLI and the tests. Every to_string() in the
// library prints something these functions read back.
//
//   polynomial  1 - 3*t + 2*t^2     (whitespace-insensitive, '*' optional,
//                                    constant term must come to 1)
//   fraction    (<poly>)/(<poly>)   or a bare <poly> meaning denominator 1
//   matrix      [[1,1],[0,2]]       `[]` is the 0 x 0 matrix
//   list        [1, 0, 3]

#include <string_view>
#include <vector>

#include "wittkit/matrix.hpp"
#include "wittkit/rational_witt.hpp"
#include "wittkit/series.hpp"

namespace wittkit {

UnitPolynomial parse_polynomial(std::string_view text, const RingSpec& ring);
/// A polynomial read as a series of the given precision (truncated or zero-extended).
UnitSeries parse_series(std::string_view text, const RingSpec& ring, std::size_t precision);
RationalWitt parse_rational_witt(std::string_view text, const RingSpec& ring);
MatrixEndo parse_matrix(std::string_view text, const RingSpec& ring);
std::vector<RingElement> parse_element_list(std::string_view text, const RingSpec& ring);

std::string format_element_list(const std::vector<RingElement>& xs);

}  // namespace wittkit
