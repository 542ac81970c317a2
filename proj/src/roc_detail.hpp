#pragma once

#include "hypcont/roc.hpp"

namespace hypcont::detail {

// |N/D| as t approaches `at` (nullopt = +infinity) from inside the positive axis.
Extended limit_abs(UPoly N, UPoly D, const std::optional<Rational>& at);

}  // namespace hypcont::detail
