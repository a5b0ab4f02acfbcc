#include "weylext/matrix.hpp"

namespace weylext {

int homology_dim_int(const IntMat& d_in, const IntMat& d_out, FieldMode mode,
                     std::uint64_t prime) {
    int hq = -1, hp = -1;
    if (mode == FieldMode::Rational || mode == FieldMode::Both) {
        RationalField f;
        hq = homology_dim(f, lift(f, d_in), lift(f, d_out));
    }
    if (mode == FieldMode::Prime || mode == FieldMode::Both) {
        PrimeField f(prime);
        hp = homology_dim(f, lift(f, d_in), lift(f, d_out));
    }
    if (mode == FieldMode::Both && hq != hp)
        throw InvariantError("homology dimension differs over Q (" + std::to_string(hq) +
                             ") and F_" + std::to_string(prime) + " (" + std::to_string(hp) +
                             ")");
    return mode == FieldMode::Prime ? hp : hq;
}

int rank_int(const IntMat& m, FieldMode mode, std::uint64_t prime) {
    int rq = -1, rp = -1;
    if (mode == FieldMode::Rational || mode == FieldMode::Both) {
        RationalField f;
        rq = rank(f, lift(f, m));
    }
    if (mode == FieldMode::Prime || mode == FieldMode::Both) {
        PrimeField f(prime);
        rp = rank(f, lift(f, m));
    }
    if (mode == FieldMode::Both && rq != rp)
        throw InvariantError("rank differs over Q (" + std::to_string(rq) + ") and F_" +
                             std::to_string(prime) + " (" + std::to_string(rp) + ")");
    return mode == FieldMode::Prime ? rp : rq;
}

}  // namespace weylext
