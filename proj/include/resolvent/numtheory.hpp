#ifndef RESOLVENT_NUMTHEORY_HPP
#define RESOLVENT_NUMTHEORY_HPP

#include <cstdint>
#include <numeric>
#include <vector>

#include "resolvent/errors.hpp"

namespace resolvent {

inline long gcd_long(long a, long b) { return std::gcd(a, b); }

inline bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<long> divisors(long n) {
    std::vector<long> ds;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            ds.push_back(d);
            if (d != n / d) ds.push_back(n / d);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

inline long euler_phi(long n) {
    long result = n, m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

inline long pow_mod(long base, long exp, long mod) {
    long r = 1 % mod;
    base %= mod;
    if (base < 0) base += mod;
    while (exp > 0) {
        if (exp & 1) r = (r * base) % mod;
        base = (base * base) % mod;
        exp >>= 1;
    }
    return r;
}

// Multiplicative order of a modulo n; requires gcd(a, n) = 1.
inline long mult_order(long a, long n) {
    if (std::gcd(((a % n) + n) % n, n) != 1) throw argument_error("mult_order: a not coprime to n");
    long x = ((a % n) + n % n) % n, cur = x, k = 1;
    while (cur != 1 % n) {
        cur = (cur * x) % n;
        ++k;
        if (k > n) throw argument_error("mult_order: no order found");
    }
    return k;
}

// Prime factors of n in descending order, with multiplicity.
inline std::vector<long> prime_factors_desc(long n) {
    std::vector<long> fs;
    for (long p = 2; p * p <= n; ++p)
        while (n % p == 0) {
            fs.push_back(p);
            n /= p;
        }
    if (n > 1) fs.push_back(n);
    std::sort(fs.rbegin(), fs.rend());
    return fs;
}

// Discrete logarithm base g modulo p (g a generator); brute force, desk scale.
inline long discrete_log(long g, long x, long p) {
    long cur = 1 % p;
    x = ((x % p) + p) % p;
    for (long k = 0; k < p; ++k) {
        if (cur == x) return k;
        cur = (cur * g) % p;
    }
    throw argument_error("discrete_log: no solution");
}

}  // namespace resolvent

#endif
