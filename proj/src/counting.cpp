#include "polyteach/counting.hpp"

#include <functional>
#include <map>
#include <string>

namespace polyteach {

BigInt binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (long i = 1; i <= k; ++i) {
        result = result * (n - k + i) / i;
    }
    return result;
}

BigInt qGeneral(long n, long d) {
    if (n < 1 || d < 0) throw DomainError("qGeneral: need n >= 1, d >= 0");
    BigInt total = 0;
    for (long i = 0; i <= d; ++i) total += binomial(n, i);
    return total;
}

BigInt regionsRelaxed(long n, long dprime) {
    if (n < 1 || dprime < 1) throw DomainError("regionsRelaxed: need n >= 1, d' >= 1");
    return qGeneral(n, dprime);
}

BigInt facesRelaxed(long n, long dprime) {
    if (n < 1 || dprime < 1) throw DomainError("facesRelaxed: need n >= 1, d' >= 1");
    BigInt inner = 0;
    for (long i = 0; i <= dprime - 1; ++i) inner += binomial(n - 1, i);
    return BigInt(n) * inner;
}

Rational avgTeaching(long n, long dprime) {
    return Rational(2 * facesRelaxed(n, dprime), regionsRelaxed(n, dprime));
}

std::pair<Rational, Rational> regionBounds(long n, long dprime) {
    if (n <= 2 * dprime) {
        throw DomainError("regionBounds: requires n > 2d' (got n=" + std::to_string(n) +
                          ", d'=" + std::to_string(dprime) + ")");
    }
    const Rational lower(binomial(n - 1, dprime));
    const Rational upper = Rational(binomial(n, dprime)) *
                           Rational(n - dprime + 1, n - 2 * dprime + 1);
    return {lower, upper};
}

bool ratioBoundCheck(long k, long d) {
    if (d < 1 || k <= 2 * d) {
        throw DomainError("ratioBoundCheck: requires d >= 1 and k > 2d");
    }
    const Rational lhs(qGeneral(k, d - 1), qGeneral(k, d));
    return lhs <= Rational(2 * d, k);
}

namespace {

BigInt factorial(long n) {
    BigInt f = 1;
    for (long i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

BigInt rankingCells(long n, long d) {
    if (n < 1 || d < 0) throw DomainError("rankingCells: need n >= 1, d >= 0");
    std::map<std::pair<long, long>, BigInt> memo;
    const std::function<BigInt(long, long)> go = [&](long nn, long dd) -> BigInt {
        if (dd == 0) return 1;
        if (nn <= dd + 1) return factorial(nn);
        const auto key = std::make_pair(nn, dd);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        const BigInt value = go(nn - 1, dd) + BigInt(nn - 1) * go(nn - 1, dd - 1);
        memo.emplace(key, value);
        return value;
    };
    return go(n, d);
}

BigInt rankingFaces(long n, long d) {
    if (n < 2 || d < 1) throw DomainError("rankingFaces: need n >= 2, d >= 1");
    return binomial(n, 2) * rankingCells(n - 1, d - 1);
}

}  // namespace polyteach
