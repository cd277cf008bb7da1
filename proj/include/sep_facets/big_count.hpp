#pragma once

#include <gmpxx.h>

#include <string>

namespace sep {

// Exact facet counts. Everything on a counting path stays in integers.
using BigCount = mpz_class;

inline std::string to_decimal(const BigCount& x) { return x.get_str(10); }

} // namespace sep
