#ifndef QACM_CYCLOTOMIC_HPP
#define QACM_CYCLOTOMIC_HPP

#include <array>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "qacm/common.hpp"

namespace qacm {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Element of Z[z] (resp. Q(z)) with z a fixed primitive 5th root of unity,
// stored on the basis {1, z, z^2, z^3}; z^4 = -(1 + z + z^2 + z^3).
//
// Cyc<int64_t> is the working type for building condition matrices (all
// entries stay tiny there; multiplications are overflow-checked), Cyc<BigInt>
// is the fraction-free elimination type, Cyc<BigRat> the full field.
template <typename T>
struct Cyc {
    std::array<T, 4> c{};

    Cyc() = default;
    explicit Cyc(T a) { c[0] = std::move(a); }
    Cyc(T a0, T a1, T a2, T a3) : c{std::move(a0), std::move(a1), std::move(a2), std::move(a3)} {}

    static Cyc zero() { return Cyc(); }
    static Cyc one() { return Cyc(T(1)); }

    // z^e on the power basis (e taken mod 5).
    static Cyc zeta_pow(long e) {
        long r = e % 5;
        if (r < 0) r += 5;
        Cyc out;
        if (r < 4) {
            out.c[static_cast<size_t>(r)] = T(1);
        } else {
            out.c = {T(-1), T(-1), T(-1), T(-1)};
        }
        return out;
    }

    bool is_zero() const {
        return c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0;
    }

    friend bool operator==(const Cyc& x, const Cyc& y) { return x.c == y.c; }
    friend bool operator!=(const Cyc& x, const Cyc& y) { return !(x == y); }

    Cyc operator-() const { return Cyc(-c[0], -c[1], -c[2], -c[3]); }

    friend Cyc operator+(const Cyc& x, const Cyc& y) {
        return Cyc(x.c[0] + y.c[0], x.c[1] + y.c[1], x.c[2] + y.c[2], x.c[3] + y.c[3]);
    }
    friend Cyc operator-(const Cyc& x, const Cyc& y) {
        return Cyc(x.c[0] - y.c[0], x.c[1] - y.c[1], x.c[2] - y.c[2], x.c[3] - y.c[3]);
    }
    Cyc& operator+=(const Cyc& y) { return *this = *this + y; }
    Cyc& operator-=(const Cyc& y) { return *this = *this - y; }

    friend Cyc operator*(const Cyc& x, const Cyc& y) {
        // Convolution, then fold with z^5 = 1 and z^4 = -(1+z+z^2+z^3).
        std::array<T, 7> r{};
        for (int i = 0; i < 4; ++i) {
            if (x.c[static_cast<size_t>(i)] == 0) continue;
            for (int j = 0; j < 4; ++j) {
                r[static_cast<size_t>(i + j)] += x.c[static_cast<size_t>(i)] * y.c[static_cast<size_t>(j)];
            }
        }
        r[0] += r[5];
        r[1] += r[6];
        Cyc out(r[0] - r[4], r[1] - r[4], r[2] - r[4], r[3] - r[4]);
        return out;
    }
    Cyc& operator*=(const Cyc& y) { return *this = *this * y; }

    // Galois conjugate z -> z^j, j in 1..4.
    Cyc conjugate(int j) const {
        QACM_CHECK(j >= 1 && j <= 4, "conjugate index");
        Cyc out;
        for (int i = 0; i < 4; ++i) {
            if (c[static_cast<size_t>(i)] == 0) continue;
            Cyc zi = zeta_pow(static_cast<long>(i) * j);
            for (int k = 0; k < 4; ++k) out.c[static_cast<size_t>(k)] += c[static_cast<size_t>(i)] * zi.c[static_cast<size_t>(k)];
        }
        return out;
    }

    std::string str() const {
        std::ostringstream os;
        os << "(" << c[0] << "," << c[1] << "," << c[2] << "," << c[3] << ")";
        return os.str();
    }
};

using CycI = Cyc<std::int64_t>;
using CycZ = Cyc<BigInt>;
using CycQ = Cyc<BigRat>;

inline CycZ to_big(const CycI& x) {
    return CycZ(BigInt(x.c[0]), BigInt(x.c[1]), BigInt(x.c[2]), BigInt(x.c[3]));
}
inline CycQ to_rat(const CycZ& x) {
    return CycQ(BigRat(x.c[0]), BigRat(x.c[1]), BigRat(x.c[2]), BigRat(x.c[3]));
}
inline CycQ to_rat(const CycI& x) { return to_rat(to_big(x)); }

// Field norm N(x) = prod_{j=1..4} sigma_j(x); lands in the base ring.
template <typename T>
T cyc_norm(const Cyc<T>& x) {
    Cyc<T> p = x;
    for (int j = 2; j <= 4; ++j) p *= x.conjugate(j);
    QACM_CHECK(p.c[1] == 0 && p.c[2] == 0 && p.c[3] == 0, "norm must be rational: " + p.str());
    return p.c[0];
}

// Exact inverse in Q(z).
inline CycQ cyc_inverse(const CycQ& x) {
    QACM_CHECK(!x.is_zero(), "inverse of zero");
    CycQ adj = x.conjugate(2) * x.conjugate(3) * x.conjugate(4);
    BigRat n = cyc_norm(x);
    CycQ out;
    for (int k = 0; k < 4; ++k) out.c[static_cast<size_t>(k)] = adj.c[static_cast<size_t>(k)] / n;
    return out;
}

// Exact division in Z[z]; the quotient must lie in Z[z] (checked).
inline CycZ cyc_divide_exact(const CycZ& a, const CycZ& b) {
    QACM_CHECK(!b.is_zero(), "division by zero");
    CycZ adj = b.conjugate(2) * b.conjugate(3) * b.conjugate(4);
    BigInt n = cyc_norm(b);
    CycZ num = a * adj;
    CycZ out;
    for (int k = 0; k < 4; ++k) {
        BigInt q = num.c[static_cast<size_t>(k)] / n;
        QACM_CHECK(q * n == num.c[static_cast<size_t>(k)], "non-exact division in Z[z]");
        out.c[static_cast<size_t>(k)] = q;
    }
    return out;
}

// Overflow-checked small multiply used by condition builders; matrices built
// from line data keep coordinates far below 2^62, so a trip here is a bug.
inline CycI cyc_mul_checked(const CycI& x, const CycI& y) {
    std::array<__int128, 7> r{};
    for (int i = 0; i < 4; ++i) {
        if (x.c[static_cast<size_t>(i)] == 0) continue;
        for (int j = 0; j < 4; ++j) {
            r[static_cast<size_t>(i + j)] += static_cast<__int128>(x.c[static_cast<size_t>(i)]) * y.c[static_cast<size_t>(j)];
        }
    }
    r[0] += r[5];
    r[1] += r[6];
    CycI out;
    const __int128 lim = static_cast<__int128>(1) << 62;
    for (int k = 0; k < 4; ++k) {
        __int128 v = r[static_cast<size_t>(k)] - r[4];
        QACM_CHECK(v < lim && v > -lim, "small cyclotomic overflow");
        out.c[static_cast<size_t>(k)] = static_cast<std::int64_t>(v);
    }
    return out;
}

}  // namespace qacm

#endif
