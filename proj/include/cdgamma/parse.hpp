#pragma once

#include "cdgamma/cd_number.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace cdgamma {

/// Parses `term (('+'|'-') term)*` with `term := real | real? 'e' index`.
/// `i`, `j`, `k` stand for e1, e2, e3 at level 2. Reals may carry an
/// exponent written `E<int>` or `e<sign><int>` (a bare `e<int>` is a basis unit).
/// Without an explicit level the smallest level >= 2 holding every index is used.
CDNumber parse_cd(std::string_view text, std::optional<int> level = std::nullopt);

/// Inverse of parse_cd: shortest round-trip coefficients, zero terms omitted.
std::string format_cd(const CDNumber& z);

} // namespace cdgamma
