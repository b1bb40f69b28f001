#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace minsum {

// Exact rational. mpq_class keeps results of arithmetic canonical
// (lowest terms, positive denominator).
using Scalar = mpq_class;

// Accepts "p/q", "p", and terminating decimals such as "-0.15".
// Throws ParseError on malformed input or a zero denominator.
Scalar parse_scalar(std::string_view text);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Scalar& value);

std::string join(const std::vector<Scalar>& values, std::string_view sep = ",");
std::vector<Scalar> parse_scalar_list(std::string_view text, char sep = ',');

// floor(value) as a Scalar.
Scalar floor(const Scalar& value);

// Smallest integer >= value; throws if it does not fit in int64.
std::int64_t ceil_to_int(const Scalar& value);

double to_double(const Scalar& value);

}  // namespace minsum
