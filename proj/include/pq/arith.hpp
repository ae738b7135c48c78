#pragma once

// Exact integer arithmetic for counting.  No floating point.

#include <cstddef>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace pq {

using BigInt = boost::multiprecision::cpp_int;

// f_0 = 0, f_1 = 1, f_{k+2} = f_{k+1} + f_k.
BigInt fibonacci(std::size_t k);

// C(2k,k) / (k+1).
BigInt catalan(std::size_t k);

// C(a,b); zero when b < 0 or b > a (in particular for negative a).
BigInt binomial(long long a, long long b);

inline std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace pq
