#include "weylext/scalar.hpp"

namespace weylext {

PrimeField::Elem PrimeField::inv(Elem a) const {
    if (a == 0) throw InvariantError("prime field inverse of zero");
    // extended Euclid on (a, p)
    long long t = 0, new_t = 1;
    long long r = static_cast<long long>(p_), new_r = static_cast<long long>(a);
    while (new_r != 0) {
        long long q = r / new_r;
        long long tmp = t - q * new_t;
        t = new_t; new_t = tmp;
        tmp = r - q * new_r;
        r = new_r; new_r = tmp;
    }
    if (r != 1) throw InvariantError("modulus is not prime: gcd != 1 in inverse");
    if (t < 0) t += static_cast<long long>(p_);
    return static_cast<Elem>(t);
}

}  // namespace weylext
