#ifndef ZP2_CENSUS_HPP
#define ZP2_CENSUS_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zp2/codecore.hpp"

namespace zp2 {

// Number of k-dimensional subspaces of F_p^n, evaluated exactly from the
// product formula.  DomainError when k > n.
Bigint gaussian(size_t n, size_t k, uint32_t p);

// Visit every k-dimensional subspace of F_p^n exactly once through its
// RREF basis (pivot-column choice plus free entries).
void enumerate_rref_bases(uint32_t p, size_t n, size_t k,
                          const std::function<void(const ResidueMatrix&)>& visit);

// Base-field code counts by exhaustive enumeration (memoized).  No
// closed-form counts are imported; the sweep itself is the oracle.
Bigint sigma_p(size_t n, size_t k, uint32_t p);  // self-orthogonal, p odd
Bigint sigma_de(size_t n, size_t k);             // doubly even binary
Bigint sigma_one(size_t n, size_t k);            // doubly even binary containing 1

// Enumerate the codes behind the sigma counters.
enum class FpFamily { All, SelfOrthogonal, DoublyEven, DoublyEvenWithOne };
std::vector<FpCode> enumerate_fp_codes(uint32_t p, size_t n, size_t k, FpFamily family);

struct MassTerm {
    size_t k1 = 0, k2 = 0;
    Bigint term;
};

struct MassReport {
    std::string family;  // self-orthogonal | self-dual | even-with-one |
                         // even-with-pm1 | type2-one | type2-pm1
    uint32_t p = 0;
    size_t n = 0;
    std::optional<size_t> k1, k2;  // absent for totals over all types
    Bigint value;
    std::vector<MassTerm> breakdown;
    std::string note;  // diagnostic for infeasible parameters

    std::string to_json() const;
    std::string to_tsv() const;
    std::string to_text() const;
};

// Number of self-orthogonal codes over Z_{p^2} of length n, type {k1,k2}.
MassReport mass_so(size_t n, size_t k1, size_t k2, uint32_t p);

// Total number of self-dual codes over Z_{p^2} of length n.
MassReport mass_self_dual(size_t n, uint32_t p);

// Quaternary even codes of type {k1,k2} containing 1, resp. a +-1 word.
// DomainError unless 8 | n.
MassReport mass_even_one(size_t n, size_t k1, size_t k2);
MassReport mass_even_pm1(size_t n, size_t k1, size_t k2);

enum class With { One, Pm1 };

// Type II totals: sums of the even masses over all self-dual types.
MassReport mass_type2(size_t n, With with);

// ---------------------------------------------------------------------------
// Brute-force oracle over Z_{p^2}: sweeps every Howell normal form of
// length n (choose the pivot structure, fill the free entries, keep the
// matrices that satisfy the Howell span condition), so every code of
// length n appears exactly once.  Contains no lift-counting logic.

enum class OracleFamily { All, SelfOrthogonal, SelfDual, Even, EvenWithOne, EvenWithPm1 };

struct OracleBudget {
    // Per-prime sweep ceiling; primes without an entry fall back to the
    // ambient-space weight cap p^{2n} <= max_weight.
    std::map<uint32_t, size_t> max_n = {{2, 5}, {3, 4}};
    Bigint max_weight = Bigint(1000000);

    bool allows(uint32_t p, size_t n) const;
    static OracleBudget from_env_or_default();  // ZP2CODES_BUDGET overrides
};

struct TypeFilter {
    std::optional<size_t> k1, k2;
    bool matches(const CodeZp2& c) const {
        return (!k1 || c.k1() == *k1) && (!k2 || c.k2() == *k2);
    }
};

void oracle_enumerate(uint32_t p, size_t n, OracleFamily family,
                      const std::function<void(const CodeZp2&)>& visit,
                      const OracleBudget& budget = OracleBudget(),
                      const TypeFilter& filter = TypeFilter());

std::vector<CodeZp2> oracle_collect(uint32_t p, size_t n, OracleFamily family,
                                    const OracleBudget& budget = OracleBudget(),
                                    const TypeFilter& filter = TypeFilter());

}  // namespace zp2

#endif
