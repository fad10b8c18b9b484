#ifndef QACM_LINALG_HPP
#define QACM_LINALG_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "qacm/field.hpp"

namespace qacm {

// Dense matrix over F_p, row major. The elimination kernels below are the
// hot path of every cohomology computation.
struct ModMatrix {
    PrimeField f;
    std::size_t rows = 0, cols = 0;
    std::vector<std::uint32_t> a;

    ModMatrix() = default;
    ModMatrix(PrimeField field, std::size_t r, std::size_t c)
        : f(field), rows(r), cols(c), a(r * c, 0) {}
    std::uint32_t& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    std::uint32_t at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

// Serial reference elimination; kept verbatim as the correctness baseline.
std::size_t mod_rank_serial(ModMatrix m);
// OpenMP row-parallel variant; must agree with the serial kernel exactly.
std::size_t mod_rank_omp(ModMatrix m);
// Dispatch: parallel kernel for matrices large enough to pay for it.
std::size_t mod_rank(const ModMatrix& m, bool allow_parallel = false);

// Reduced row echelon + kernel basis (columns of the nullspace).
std::pair<std::size_t, std::vector<std::vector<std::uint32_t>>> mod_rank_kernel(ModMatrix m);

// Dense matrix over Z[z] for fraction-free (Bareiss) elimination.
struct CycMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<CycZ> a;

    CycMatrix() = default;
    CycMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
    CycZ& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const CycZ& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

// Fraction-free rank over Z[z]; every division is exact in the ring.
std::size_t bareiss_rank(CycMatrix m);

// Rank + kernel basis over Q(z) (Gauss-Jordan; used where a basis is needed
// or as the arbiter after the modular consensus disagrees).
std::pair<std::size_t, std::vector<std::vector<CycQ>>> exact_rank_kernel(const CycMatrix& m);

// Spec surface: rank/kernel of a matrix of FieldElement values. All entries
// must share one mode (and one prime); otherwise input_error.
struct FieldMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<FieldElement> a;
    FieldMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
    FieldElement& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const FieldElement& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

struct RankKernelResult {
    std::size_t rank = 0;
    std::vector<std::vector<FieldElement>> kernel;
};

RankKernelResult rank_kernel(const FieldMatrix& m);

}  // namespace qacm

#endif
