#include "pierce/numeric.hpp"

#include <stdexcept>

namespace pierce {

BigInt binomial(int n, int k) {
    if (n < 0 || k < 0)
        throw std::invalid_argument("binomial arguments must be non-negative");
    if (k > n) return 0;
    k = std::min(k, n - k);
    BigInt result = 1;
    for (int i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i; // exact: result is C(n-k+i, i) after this step
    }
    return result;
}

} // namespace pierce
