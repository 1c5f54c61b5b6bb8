#include "parallelo/rational.hpp"

namespace parallelo {

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

bool BigRational::fits_int64() const {
  // mpz fits_slong_p is int64 on LP64.
  return q_.get_num().fits_slong_p() && q_.get_den().fits_slong_p();
}

Rational BigRational::to_rational() const {
  if (!fits_int64()) throw OverflowError("rational " + str() + " does not fit int64");
  return Rational(q_.get_num().get_si(), q_.get_den().get_si());
}

}  // namespace parallelo
