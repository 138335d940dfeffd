#include "richwords/numeric.hpp"

#include "richwords/errors.hpp"

namespace richwords {

Real log_of(const BigInt& value) {
  if (value <= 0) throw DomainError("logarithm of a non-positive integer");
  return boost::multiprecision::log(Real(value));
}

BigInt falling_factorial(int q, int k) {
  if (k < 0) throw DomainError("falling factorial with negative length");
  BigInt out = 1;
  for (int i = 0; i < k; ++i) out *= q - i;
  return out;
}

}  // namespace richwords
