#pragma once

// Text form for series and polynomial coefficients: JSON with quaternions as
// 4-tuples of decimal reals plus center/radius metadata.  Round-trips within
// one ulp (values are emitted shortest-round-trip).

#include <optional>
#include <string>

#include "sliceapprox/slice_function.hpp"

namespace slice {

struct StoredFunction {
    SliceFunction function;
    std::optional<double> lipschitz;  // analytic modulus data when present
    std::string type;                 // schema tag the function was read from
};

std::string to_json(const RightPolynomial& p);
std::string to_json(const PowerSeries& s, std::optional<double> lipschitz = {});
std::string to_json(const CassiniSeries& s, std::optional<double> lipschitz = {});
std::string to_json(const LaurentPolynomial& l);

// Parses any of the schemas emitted above plus "sphere-trig" (trigonometric
// alpha/beta coefficients of a slice function on the unit sphere).  Throws
// std::invalid_argument on malformed input.
StoredFunction parse_function_json(const std::string& text);

StoredFunction load_function_file(const std::string& path);

}  // namespace slice
