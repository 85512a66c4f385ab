#include "swchain/common.hpp"

namespace swchain {

const char* model_name(Model m)
{
    switch (m) {
    case Model::UC: return "uc";
    case Model::Bipartite: return "bip";
    case Model::Directed: return "dir";
    }
    return "?";
}

BigInt binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

BigInt factorial(long n)
{
    BigInt r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace swchain
