#ifndef QACM_FIELD_HPP
#define QACM_FIELD_HPP

#include <cstdint>
#include <vector>

#include "qacm/cyclotomic.hpp"

namespace qacm {

enum class FieldMode { Exact, Modular };

// A prime field F_p with p = 1 (mod 5), carrying its chosen 5th root of
// unity so that Z[z] reduces through z -> zeta.
struct PrimeField {
    std::uint32_t p = 0;
    std::uint32_t zeta = 0;  // smallest residue > 1 with zeta^5 = 1

    static std::uint32_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p);
    static bool is_prime(std::uint32_t n);
    static PrimeField make(std::uint32_t p);  // throws input_error unless p prime, p = 1 mod 5

    std::uint32_t reduce(const CycI& x) const;
    std::uint32_t reduce(const CycZ& x) const;
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { std::uint64_t s = std::uint64_t(a) + b; return std::uint32_t(s >= p ? s - p : s); }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return a >= b ? a - b : a + p - b; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return std::uint32_t((std::uint64_t(a) * b) % p); }
    std::uint32_t inv(std::uint32_t a) const;
};

// Field backing for the oracle: either exact cyclotomic arithmetic, or a
// pool of modular fields run in consensus (first consensus_size primes),
// escalating to exact on disagreement.
struct FieldConfig {
    FieldMode mode = FieldMode::Modular;
    std::vector<std::uint32_t> primes = {11, 31, 41, 61, 71};
    int consensus_size = 3;

    std::vector<PrimeField> consensus_fields() const;
    // Primes large enough for the absolute-irreducibility count (needs
    // characteristic > 45 for a plane quintic); may be empty.
    std::vector<PrimeField> large_fields(std::uint32_t min_exclusive = 45) const;
    void validate() const;
};

// The public scalar type: an element of Q(z) or of a prime field. Mixing
// modes, or primes, in one expression is an input error.
class FieldElement {
  public:
    FieldElement() : mode_(FieldMode::Exact), q_(CycQ::zero()) {}
    static FieldElement exact(CycQ v) { FieldElement e; e.mode_ = FieldMode::Exact; e.q_ = std::move(v); return e; }
    static FieldElement exact_int(long v) { return exact(CycQ(BigRat(v))); }
    static FieldElement zeta_exact(long e = 1) { return exact(to_rat(CycZ::zeta_pow(e))); }
    static FieldElement modular(const PrimeField& f, std::uint32_t v) {
        FieldElement e; e.mode_ = FieldMode::Modular; e.f_ = f; e.v_ = v % f.p; return e;
    }
    static FieldElement zeta_modular(const PrimeField& f, long e = 1);

    FieldMode mode() const { return mode_; }
    const PrimeField& prime_field() const { return f_; }
    std::uint32_t residue() const { return v_; }
    const CycQ& rational() const { return q_; }
    bool is_zero() const { return mode_ == FieldMode::Exact ? q_.is_zero() : v_ == 0; }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    FieldElement inverse() const;
    FieldElement operator-() const;
    friend bool operator==(const FieldElement& a, const FieldElement& b);

  private:
    static void require_compatible(const FieldElement& a, const FieldElement& b);
    FieldMode mode_;
    CycQ q_;
    PrimeField f_{};
    std::uint32_t v_ = 0;
};

}  // namespace qacm

#endif
