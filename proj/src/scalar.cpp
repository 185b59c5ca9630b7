#include "hypstokes/scalar.hpp"

#include <boost/math/constants/constants.hpp>

namespace hypstokes {

ComplexHP ScalarTraits<ComplexHP>::unit(const Exponent& x, int sign) {
  if (sign != 1 && sign != -1) fail(ErrorCode::InvalidArgument, "sign must be +1 or -1");
  RealHP r;
  if (x.is_exact()) {
    const Rational q = x.reduced().exact();
    r = RealHP(boost::multiprecision::numerator(q)) / RealHP(boost::multiprecision::denominator(q));
    // Land exactly on the axes for quarter turns.
    const Rational quarter(1, 4);
    if (q == 0) return ComplexHP(1, 0);
    if (q == quarter) return ComplexHP(0, sign);
    if (q == 2 * quarter) return ComplexHP(-1, 0);
    if (q == 3 * quarter) return ComplexHP(0, -sign);
  } else {
    r = RealHP(x.reduced().approx());
  }
  const RealHP t = 2 * boost::math::constants::pi<RealHP>() * r;
  return ComplexHP(cos(t), sign * sin(t));
}

}  // namespace hypstokes
