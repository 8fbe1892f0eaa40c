#ifndef ZP2_RINGMAT_HPP
#define ZP2_RINGMAT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zp2/common.hpp"

namespace zp2 {

// Modulus is either the prime p (field case) or p^2 (chain-ring case).
// p is checked for primality at construction; p^2 must fit a machine word
// with headroom for products, so p is capped at 46337.
struct Modulus {
    uint32_t p = 0;
    uint32_t m = 0;

    static Modulus field(uint32_t p);
    static Modulus square(uint32_t p);

    bool is_field() const { return m == p; }
    bool operator==(const Modulus&) const = default;
};

bool is_prime_u32(uint32_t n);

// Canonical residue of v in [0, m), also for negative v.
uint32_t reduce_mod(long long v, uint32_t m);

// Inverse of a unit; DomainError if gcd(a, m) != 1.
uint32_t inv_mod(uint32_t a, uint32_t m);

using Row = std::vector<uint32_t>;

// Dense matrix with entries stored as canonical residues in [0, m).
class ResidueMatrix {
   public:
    ResidueMatrix() = default;
    ResidueMatrix(Modulus mod, size_t rows, size_t cols);

    static ResidueMatrix from_rows(Modulus mod,
                                   const std::vector<std::vector<long long>>& rows,
                                   size_t cols_hint = 0);
    static ResidueMatrix from_urows(Modulus mod, const std::vector<Row>& rows,
                                    size_t cols_hint = 0);
    static ResidueMatrix identity(Modulus mod, size_t n);

    const Modulus& mod() const { return mod_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0; }

    uint32_t at(size_t r, size_t c) const { return e_[r * cols_ + c]; }
    void set(size_t r, size_t c, uint32_t v) { e_[r * cols_ + c] = v % mod_.m; }

    const uint32_t* row_ptr(size_t r) const { return e_.data() + r * cols_; }
    Row row(size_t r) const;
    void append_row(const Row& r);

    ResidueMatrix transpose() const;
    ResidueMatrix times(const ResidueMatrix& rhs) const;
    ResidueMatrix plus(const ResidueMatrix& rhs) const;
    ResidueMatrix scaled(uint32_t c) const;

    // Entry-wise reduction to the residue field F_p.
    ResidueMatrix reduce_to_field() const;
    // Reinterpret an F_p matrix over Z_{p^2} (entries unchanged).
    ResidueMatrix lift_to_square() const;

    bool is_zero() const;
    bool operator==(const ResidueMatrix&) const = default;
    bool lex_less(const ResidueMatrix& rhs) const;

    // Compact byte key; equal keys iff equal matrices of equal shape/modulus.
    std::string key() const;
    std::string to_string() const;

   private:
    Modulus mod_;
    size_t rows_ = 0, cols_ = 0;
    std::vector<uint32_t> e_;
};

struct RrefResult {
    ResidueMatrix mat;           // reduced row-echelon form, zero rows removed
    size_t rank = 0;
    std::vector<size_t> pivots;  // strictly increasing pivot columns
};

// Unique RREF over F_p.  DomainError if the modulus is not a field.
RrefResult rref_fp(const ResidueMatrix& m);

// Unique Howell normal form of the row span, zero rows removed.  Two
// matrices over Z_{p^2} have the same row span iff their Howell forms are
// identical.  Over a field this degenerates to the RREF.
ResidueMatrix howell_form(const ResidueMatrix& m);

// Pivot valuation profile of a matrix already in Howell form: one entry per
// row, 0 for unit pivots and 1 for pivots divisible by p.
std::vector<uint32_t> howell_pivot_valuations(const ResidueMatrix& h);

// Reduce x against a Howell-form matrix; x is in the row span iff the
// remainder is zero.
Row howell_reduce(const ResidueMatrix& h, Row x);

struct AffineSolution {
    Row particular;
    std::vector<Row> kernel;  // basis of ker A; full solution set is
                              // particular + span(kernel), size p^{|kernel|}
};

// Solve Ax = b over F_p.  Empty optional when inconsistent.
std::optional<AffineSolution> solve_affine_fp(const ResidueMatrix& a, const Row& b);

// Basis of {x : Ax = 0} over F_p.
std::vector<Row> kernel_fp(const ResidueMatrix& a);

}  // namespace zp2

#endif
