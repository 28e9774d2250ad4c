// Working-precision real scalar and the precision contract shared by the
// whole library. All continuous quantities (s, w, x, t, zeta values, E0)
// are Real; arithmetic is deterministic for a fixed working_digits.
#ifndef ORBICAS_REAL_HPP
#define ORBICAS_REAL_HPP

#include <boost/multiprecision/mpfr.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>

namespace orbicas {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                            boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using BigRat = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                             boost::multiprecision::et_off>;

// Raised when an iterative scheme (Euler-Maclaurin tail, quadrature level
// refinement) fails to meet its tolerance within its term or level cap.
class convergence_error : public std::runtime_error {
 public:
  explicit convergence_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised for declared-but-unsupported variants (minimal propagation).
class unsupported_variant_error : public std::domain_error {
 public:
  explicit unsupported_variant_error(const std::string& what) : std::domain_error(what) {}
};

inline constexpr int kMinWorkingDigits = 20;
inline constexpr int kDefaultWorkingDigits = 40;

// Significant decimal digits carried by every Real created afterwards.
// Values below kMinWorkingDigits are rejected.
void set_working_digits(int digits);
int working_digits();

Real pi_value();

// 10^k at working precision (k may be negative).
Real pow10(int k);

// Decimal string with exactly `digits` significant digits (round to
// nearest). Positional notation for moderate exponents, otherwise
// scientific. x == 0 renders as "0".
std::string format_real(const Real& x, int digits);

Real parse_real(const std::string& text);

}  // namespace orbicas

#endif  // ORBICAS_REAL_HPP
