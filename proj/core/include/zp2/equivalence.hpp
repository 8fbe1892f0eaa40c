#ifndef ZP2_EQUIVALENCE_HPP
#define ZP2_EQUIVALENCE_HPP

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "zp2/census.hpp"

namespace zp2 {

// Element of the group E of (1,-1)-monomial transformations: a coordinate
// permutation combined with per-coordinate signs; |E| = 2^n n!.
// A word w maps to w' with w'_j = signs[j] * w[perm^{-1}(j)], i.e. perm
// sends input coordinate i to output coordinate perm[i].
struct SignedMonomial {
    std::vector<uint32_t> perm;
    std::vector<int8_t> signs;  // indexed by output coordinate

    static SignedMonomial identity(size_t n);
    static SignedMonomial random(size_t n, std::mt19937_64& rng);

    size_t length() const { return perm.size(); }
    // this
    SignedMonomial after(const SignedMonomial& first) const;  // apply first, then this
    SignedMonomial inverse() const;
    bool operator==(const SignedMonomial&) const = default;
};

Row apply_word(const SignedMonomial& g, const Row& w, uint32_t modulus);
CodeZp2 apply(const SignedMonomial& g, const CodeZp2& c);

Bigint monomial_group_order(size_t n);  // 2^n n!

struct EquivBudget {
    size_t max_n = 8;                       // |E| = 10,321,920 at n = 8
    uint64_t max_codewords = uint64_t(1) << 20;

    static EquivBudget from_env_or_default();  // ZP2CODES_BUDGET key aut=N
};

// |{g in E : g C = C}|, by backtracking over column images with pruning by
// sign-insensitive column fingerprints; the sign stabilizer is factored
// out and recovered per admissible permutation.
uint64_t aut_order(const CodeZp2& c, const EquivBudget& budget = EquivBudget());

// A witness g with apply(g, c) = d, if the codes are equivalent.
std::optional<SignedMonomial> are_equivalent(const CodeZp2& c, const CodeZp2& d,
                                             const EquivBudget& budget = EquivBudget());

enum class ClassFamily { SelfOrthogonal, SelfDual, EvenOne, EvenPm1, Type2One, Type2Pm1 };

const char* family_name(ClassFamily f);
ClassFamily parse_family(const std::string& name);  // DomainError on unknown names

struct ClassRep {
    CodeZp2 code;            // lexicographically least canonical form in its class
    uint64_t aut_order = 0;
    Bigint class_size;       // orbit size under E
    Bigint in_family;        // orbit members belonging to the classified family
};

struct ClassificationResult {
    std::string family;
    uint32_t p = 0;
    size_t n = 0;
    std::optional<size_t> k1, k2;
    std::vector<ClassRep> representatives;
    Bigint family_size;
    Rational mass_sum;     // sum of per-class family-counting terms
    Bigint expected_mass;  // the matching census value
    bool certified = false;

    std::string to_json() const;
    std::string to_tsv() const;
    std::string to_text() const;
};

// Partition the family into equivalence classes by orbit expansion with a
// canonical-form dedupe map, take the lexicographically least member as
// the representative, and certify the partition against the census mass.
// Sign-closed families weigh each class by |E|/|Aut C|; the all-ones
// families count the 1-containing orbit members, n! 2^{k1+k2}/|Aut C|.
ClassificationResult classify(uint32_t p, size_t n, ClassFamily family,
                              std::optional<size_t> k1 = std::nullopt,
                              std::optional<size_t> k2 = std::nullopt,
                              const EquivBudget& budget = EquivBudget());

// The constructive family behind classify: all codes produced by the lift
// enumerators over every admissible residue/torsion pair, sorted by
// canonical form.
std::vector<CodeZp2> build_family(uint32_t p, size_t n, ClassFamily family,
                                  std::optional<size_t> k1 = std::nullopt,
                                  std::optional<size_t> k2 = std::nullopt);

}  // namespace zp2

#endif
