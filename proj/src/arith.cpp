#include "pq/arith.hpp"

namespace pq {

BigInt fibonacci(std::size_t k) {
  BigInt a = 0, b = 1;
  for (std::size_t i = 0; i < k; ++i) {
    BigInt next = a + b;
    a = std::move(b);
    b = std::move(next);
  }
  return a;
}

BigInt binomial(long long a, long long b) {
  if (b < 0 || a < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  BigInt r = 1;
  // r * (a-i) is always divisible by (i+1) at step i.
  for (long long i = 0; i < b; ++i) {
    r *= a - i;
    r /= i + 1;
  }
  return r;
}

BigInt catalan(std::size_t k) {
  const auto kk = static_cast<long long>(k);
  return binomial(2 * kk, kk) / (kk + 1);
}

}  // namespace pq
