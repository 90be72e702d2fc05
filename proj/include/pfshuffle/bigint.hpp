#pragma once

#include <gmpxx.h>

#include <string>

namespace pfshuffle {

using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Integer& value) { return value.get_str(); }

inline Integer parse_integer(const std::string& text) { return Integer(text, 10); }

} // namespace pfshuffle
