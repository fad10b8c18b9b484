#include "qacm/field.hpp"

#include <algorithm>

namespace qacm {

std::uint32_t PrimeField::pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

bool PrimeField::is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

PrimeField PrimeField::make(std::uint32_t p) {
    QACM_INPUT(is_prime(p), "modular characteristic must be prime: " + std::to_string(p));
    QACM_INPUT(p % 5 == 1, "prime must be 1 mod 5 so a 5th root of unity exists: " + std::to_string(p));
    PrimeField f;
    f.p = p;
    for (std::uint32_t r = 2; r < p; ++r) {
        if (pow_mod(r, 5, p) == 1) {
            f.zeta = r;
            break;
        }
    }
    QACM_CHECK(f.zeta != 0, "no 5th root of unity found");
    return f;
}

std::uint32_t PrimeField::reduce(const CycI& x) const {
    std::uint64_t acc = 0;
    std::uint64_t zp = 1;
    for (int i = 0; i < 4; ++i) {
        std::int64_t ci = x.c[static_cast<size_t>(i)];
        std::uint64_t r = static_cast<std::uint64_t>(((ci % static_cast<std::int64_t>(p)) + p) % p);
        acc = (acc + r * zp) % p;
        zp = zp * zeta % p;
    }
    return static_cast<std::uint32_t>(acc);
}

std::uint32_t PrimeField::reduce(const CycZ& x) const {
    std::uint64_t acc = 0;
    std::uint64_t zp = 1;
    for (int i = 0; i < 4; ++i) {
        BigInt m = x.c[static_cast<size_t>(i)] % p;
        if (m < 0) m += p;
        acc = (acc + static_cast<std::uint64_t>(m) * zp) % p;
        zp = zp * zeta % p;
    }
    return static_cast<std::uint32_t>(acc);
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
    QACM_CHECK(a % p != 0, "modular inverse of zero");
    return pow_mod(a, p - 2, p);
}

std::vector<PrimeField> FieldConfig::consensus_fields() const {
    validate();
    std::vector<PrimeField> out;
    for (int i = 0; i < consensus_size && i < static_cast<int>(primes.size()); ++i)
        out.push_back(PrimeField::make(primes[static_cast<size_t>(i)]));
    return out;
}

std::vector<PrimeField> FieldConfig::large_fields(std::uint32_t min_exclusive) const {
    std::vector<PrimeField> out;
    for (std::uint32_t p : primes)
        if (p > min_exclusive) out.push_back(PrimeField::make(p));
    return out;
}

void FieldConfig::validate() const {
    if (mode == FieldMode::Modular) {
        QACM_INPUT(static_cast<int>(primes.size()) >= consensus_size,
                   "modular mode needs at least " + std::to_string(consensus_size) + " primes");
        for (std::uint32_t p : primes) (void)PrimeField::make(p);
    }
}

FieldElement FieldElement::zeta_modular(const PrimeField& f, long e) {
    long r = e % 5;
    if (r < 0) r += 5;
    return modular(f, PrimeField::pow_mod(f.zeta, static_cast<std::uint64_t>(r), f.p));
}

void FieldElement::require_compatible(const FieldElement& a, const FieldElement& b) {
    QACM_INPUT(a.mode_ == b.mode_, "mixed exact/modular field elements");
    if (a.mode_ == FieldMode::Modular)
        QACM_INPUT(a.f_.p == b.f_.p, "mixed primes in modular arithmetic");
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    FieldElement::require_compatible(a, b);
    if (a.mode_ == FieldMode::Exact) return FieldElement::exact(a.q_ + b.q_);
    return FieldElement::modular(a.f_, a.f_.add(a.v_, b.v_));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    FieldElement::require_compatible(a, b);
    if (a.mode_ == FieldMode::Exact) return FieldElement::exact(a.q_ - b.q_);
    return FieldElement::modular(a.f_, a.f_.sub(a.v_, b.v_));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    FieldElement::require_compatible(a, b);
    if (a.mode_ == FieldMode::Exact) return FieldElement::exact(a.q_ * b.q_);
    return FieldElement::modular(a.f_, a.f_.mul(a.v_, b.v_));
}

FieldElement FieldElement::inverse() const {
    if (mode_ == FieldMode::Exact) return exact(cyc_inverse(q_));
    return modular(f_, f_.inv(v_));
}

FieldElement FieldElement::operator-() const {
    if (mode_ == FieldMode::Exact) return exact(-q_);
    return modular(f_, f_.sub(0, v_));
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    FieldElement::require_compatible(a, b);
    if (a.mode_ == FieldMode::Exact) return a.q_ == b.q_;
    return a.v_ == b.v_;
}

}  // namespace qacm
