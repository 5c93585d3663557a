#pragma once

#include "invseq/bigint.hpp"

namespace invseq {

// C(n, k); zero for k < 0 or k > n. Negative n is rejected.
BigInt binomial(int n, int k);

// 1 + sum_{i=1}^{n-1} C(2i, i-1), n >= 1.
BigInt a279561(int n);

// 1 for n = 1, else 2^{n-2}; n >= 1.
BigInt pow2_last(int n);

// Bell number indexed so that bell(n) counts I_n(011); n >= 1.
BigInt bell(int n);

// Large Schroder number indexed so that schroder(n) counts I_n(021); n >= 1.
BigInt schroder(int n);

}  // namespace invseq
