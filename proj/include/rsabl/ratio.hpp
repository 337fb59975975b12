#pragma once

#include <boost/rational.hpp>
#include <cstdio>
#include <string>

namespace rsabl {

// Classification quality, significance and rule certainty are ratios of
// small integer counts. They are kept as exact rationals so that equality
// checks (reduct preservation, idempotence) never depend on floating-point
// rounding; conversion to double happens only at reporting boundaries.
using Ratio = boost::rational<long long>;

inline double to_double(const Ratio& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

// Decimal rendering for reports: "0.5", "1", "0.333333".
inline std::string format_ratio(const Ratio& r) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", to_double(r));
    return buf;
}

}  // namespace rsabl
