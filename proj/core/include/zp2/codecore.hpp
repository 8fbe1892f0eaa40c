#ifndef ZP2_CODECORE_HPP
#define ZP2_CODECORE_HPP

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "zp2/ringmat.hpp"

namespace zp2 {

// Linear code over F_p held as a reduced row-echelon basis without zero
// rows.  Equal codes compare equal.
class FpCode {
   public:
    FpCode() = default;

    static FpCode zero(uint32_t p, size_t n);
    static FpCode from_rows(uint32_t p, size_t n,
                            const std::vector<std::vector<long long>>& rows);
    static FpCode from_matrix(const ResidueMatrix& m);  // field modulus

    uint32_t prime() const { return basis_.mod().p; }
    size_t length() const { return n_; }
    size_t dim() const { return basis_.rows(); }
    const ResidueMatrix& basis() const { return basis_; }
    Bigint cardinality() const { return bigint_pow(prime(), dim()); }

    bool contains(const Row& v) const;
    bool contains_all_ones() const;
    bool subset_of(const FpCode& other) const;
    bool operator==(const FpCode&) const = default;

    FpCode dual() const;
    bool is_self_orthogonal() const;
    // p = 2 only: every codeword weight divisible by 4 (checked on the
    // basis: row weights 0 mod 4 and pairwise even intersections).
    bool is_doubly_even() const;

    // Visit all p^dim codewords in lexicographic coefficient order;
    // return false from the callback to stop early.
    void codewords(const std::function<bool(const Row&)>& visit) const;

   private:
    size_t n_ = 0;
    ResidueMatrix basis_;
};

// Code over Z_{p^2} held in Howell normal form with its type {k1, k2}.
// k1 is the dimension of the residue code, k2 the torsion co-dimension;
// |C| = p^{2 k1 + k2}.
class CodeZp2 {
   public:
    CodeZp2() = default;

    static CodeZp2 zero(uint32_t p, size_t n);
    static CodeZp2 from_generators(uint32_t p, size_t n,
                                   const std::vector<std::vector<long long>>& rows);
    static CodeZp2 from_matrix(const ResidueMatrix& m);  // square modulus

    uint32_t prime() const { return p_; }
    size_t length() const { return n_; }
    const ResidueMatrix& generators() const { return gens_; }
    size_t k1() const { return k1_; }
    size_t k2() const { return k2_; }

    Bigint cardinality() const { return bigint_pow(p_, 2 * k1_ + k2_); }
    // Exact codeword count as a machine word; BudgetError above the limit.
    uint64_t size_u64(uint64_t limit = uint64_t(1) << 62) const;

    bool contains(const Row& v) const;
    bool operator==(const CodeZp2&) const = default;
    bool lex_less(const CodeZp2& rhs) const { return gens_.lex_less(rhs.gens_); }
    std::string canonical_key() const { return gens_.key(); }

    FpCode residue() const;
    FpCode torsion() const;
    CodeZp2 dual() const;
    bool is_self_orthogonal() const;
    bool is_self_dual() const;

    // Visit all codewords in lexicographic order of the coefficients on
    // the Howell generators; BudgetError if |C| exceeds the limit.
    void codewords(const std::function<bool(const Row&)>& visit,
                   uint64_t limit = uint64_t(1) << 20) const;

   private:
    uint32_t p_ = 0;
    size_t n_ = 0;
    ResidueMatrix gens_;
    size_t k1_ = 0, k2_ = 0;
};

// Euclidean weight of a quaternary word: 0,1,2,3 weigh 0,1,4,1.
uint64_t euclidean_weight(const Row& word);

// p = 2 only: self-orthogonal with all generator Euclidean weights
// divisible by 8 (equivalent to every codeword weight divisible by 8).
bool is_even(const CodeZp2& c);

// p = 2 only: some codeword with all coordinates in {1,3}, if any.
std::optional<Row> contains_pm1(const CodeZp2& c);

// Duals over F_p / the dual of the residue code etc. compose via FpCode.

// All intermediate codes C2 with c1 <= C2 <= c1-dual and dim(C2) =
// dim(c1) + k2, enumerated through the quotient space.
std::vector<FpCode> intermediate_codes(const FpCode& c1, size_t k2);

// Shared matrix text format: header "p n", one generator row per line.
struct MatrixText {
    uint32_t p = 0;
    size_t n = 0;
    std::vector<std::vector<long long>> rows;
};

MatrixText parse_matrix_text(std::istream& in);
std::string format_matrix_text(uint32_t p, const ResidueMatrix& gens);

}  // namespace zp2

#endif
