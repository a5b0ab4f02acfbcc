#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace weylext {

/// Thrown when an internal consistency check fails (exit code 3 at the CLI).
struct InvariantError : std::runtime_error {
    explicit InvariantError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Thrown when a verification step fails (exit code 1 at the CLI).
struct VerifyError : std::runtime_error {
    explicit VerifyError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Exact rational scalar. All linear algebra in this project is exact;
/// there is no floating point anywhere.
using Rational = boost::multiprecision::cpp_rational;

/// Field of rational numbers, as a field object usable by the matrix templates.
struct RationalField {
    using Elem = Rational;
    static Elem from_int(long long n) { return Rational(n); }
    static Elem zero() { return Rational(0); }
    static Elem one() { return Rational(1); }
    static bool is_zero(const Elem& a) { return a == 0; }
    static Elem neg(const Elem& a) { return -a; }
    static Elem add(const Elem& a, const Elem& b) { return a + b; }
    static Elem sub(const Elem& a, const Elem& b) { return a - b; }
    static Elem mul(const Elem& a, const Elem& b) { return a * b; }
    static Elem div(const Elem& a, const Elem& b) {
        if (b == 0) throw InvariantError("rational division by zero");
        return a / b;
    }
    std::string name() const { return "Q"; }
};

/// Prime field F_p with runtime modulus. Elements are canonical residues in [0,p).
class PrimeField {
public:
    using Elem = std::uint64_t;

    explicit PrimeField(std::uint64_t p) : p_(p) {
        if (p < 2) throw InvariantError("prime field modulus must be >= 2");
    }

    std::uint64_t modulus() const { return p_; }

    Elem from_int(long long n) const {
        long long r = n % static_cast<long long>(p_);
        if (r < 0) r += static_cast<long long>(p_);
        return static_cast<Elem>(r);
    }
    Elem zero() const { return 0; }
    Elem one() const { return 1 % p_; }
    bool is_zero(Elem a) const { return a == 0; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem add(Elem a, Elem b) const { Elem s = a + b; return s >= p_ ? s - p_ : s; }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
    Elem mul(Elem a, Elem b) const {
        return static_cast<Elem>((static_cast<unsigned __int128>(a) * b) % p_);
    }
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    std::string name() const { return "F" + std::to_string(p_); }

private:
    std::uint64_t p_;
};

/// Which exact field(s) a computation runs over. `Both` computes over the
/// rationals and over F_p and raises a hard error on any dimension mismatch.
enum class FieldMode { Rational, Prime, Both };

}  // namespace weylext
