#pragma once

// Budgets evaluated with 60-digit decimal floating point, independent of the
// integer root comparisons used by the library.

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <cstddef>

namespace oracle {

using Real = boost::multiprecision::number<boost::multiprecision::cpp_dec_float<60>>;

inline std::size_t ceil_real(const Real& x) {
    const Real near = boost::multiprecision::round(x);
    if (boost::multiprecision::abs(x - near) < Real("1e-40")) return near.convert_to<std::size_t>();
    return boost::multiprecision::ceil(x).convert_to<std::size_t>();
}

inline std::size_t general_2tone(std::size_t d) { return 2 * d + ceil_real(boost::multiprecision::sqrt(Real(2)) * d); }

inline std::size_t bipartite_2tone(std::size_t d) { return 2 * ceil_real(boost::multiprecision::sqrt(Real(2)) * d); }

inline std::size_t chordal_2tone(std::size_t d) {
    return d + ceil_real(boost::multiprecision::sqrt(Real(6)) / 2 * d) + 1;
}

inline std::size_t degenerate_ttone(std::size_t k, unsigned t, std::size_t r) {
    const Real power = boost::multiprecision::pow(Real(r), Real(1) - Real(1) / Real(t));
    return k * t + ceil_real(Real(k) * t * t * power);
}

}  // namespace oracle
