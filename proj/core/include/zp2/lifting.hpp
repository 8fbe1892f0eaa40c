#ifndef ZP2_LIFTING_HPP
#define ZP2_LIFTING_HPP

#include <functional>
#include <vector>

#include "zp2/codecore.hpp"

namespace zp2 {

// N |-> A N^t + N A^t  over F_p (symmetric; alternating when p = 2).
ResidueMatrix psi_map(const ResidueMatrix& a, const ResidueMatrix& n);

// N |-> A N^t + N A^t + Diag(A N^t)  over F_2 (symmetric).
ResidueMatrix phi_map(const ResidueMatrix& a, const ResidueMatrix& n);

// N |-> 1 N^t  over F_2: row sums.
Row alpha_map(const ResidueMatrix& n);

enum class MapKind { Psi, Phi, PhiAlpha };

struct ImageCheck {
    size_t rank = 0;       // rank of the assembled linear map
    Bigint image_size;     // p^rank
    Bigint kernel_size;    // p^{m n} / image_size
};

// Computes the image of the requested map by assembling it as an explicit
// matrix over F_p and confirms the size the rank statements predict:
// Sym_m for odd p, Alt_m for Psi at p = 2, Sym_m for Phi, Sym_m (+) F_2^m
// for Phi(+)alpha.  PreconditionError when rank A < m, or (PhiAlpha only)
// when p != 2 or the all-ones vector lies in the row space of A.
ImageCheck image_check(const ResidueMatrix& a, MapKind kind);

// Affine solution set of one lifting congruence, in the permuted standard
// coordinates.  Every member N = particular + combination of the kernel
// basis satisfies the congruence of its family; the family has
// p^{|kernel|} members.
struct LiftSolutionSet {
    uint32_t p = 0;
    size_t n = 0, k1 = 0;
    bool with_one = false;        // block shape [1 1 1 / 0 I A] instead of [I A]
    std::vector<size_t> perm;     // perm[i] = original column of standard column i
    ResidueMatrix base_a;         // A block of the standard form (F_p entries)
    ResidueMatrix target;         // right-hand side of the congruence
    ResidueMatrix particular_n;
    std::vector<ResidueMatrix> kernel_basis;

    Bigint count() const { return bigint_pow(p, kernel_basis.size()); }
    // Substitution check of the defining congruence for one member.
    bool member_satisfies(const ResidueMatrix& n) const;
    // Generator rows of the member's code in original coordinate order.
    std::vector<Row> member_rows(const ResidueMatrix& n) const;
    // The self-orthogonal (resp. even) code the member generates, mapped
    // back to the original coordinate order.
    CodeZp2 code_for(const ResidueMatrix& n) const;
    // All member matrices in lexicographic kernel-coefficient order.
    void for_each_member(const std::function<void(const ResidueMatrix&)>& fn) const;
};

// Enumeration of lifts with prescribed residue c1 and torsion c2.  The
// solution set is quotiented by the fiber directions {M B}: one member per
// emitted code, no duplicates.
struct LiftFamily {
    LiftSolutionSet base;
    ResidueMatrix b;                            // k2 x (n - k1) torsion block
    std::vector<ResidueMatrix> fiber_basis;     // {e_rs B}, dimension k1 k2
    std::vector<ResidueMatrix> coset_basis;     // kernel complement of the fibers

    size_t k2() const { return b.rows(); }
    Bigint count() const { return bigint_pow(base.p, coset_basis.size()); }
    Bigint fiber_size() const { return bigint_pow(base.p, fiber_basis.size()); }
    CodeZp2 code_for(const ResidueMatrix& n) const;  // member + adjoined p B
    void for_each_code(const std::function<void(const CodeZp2&)>& fn) const;
    std::vector<CodeZp2> codes() const;
};

// All free self-orthogonal codes over Z_{p^2} with residue = torsion = c1.
// c1 must be self-orthogonal, and doubly even when p = 2.
LiftSolutionSet free_so_lifts(const FpCode& c1);

// All self-orthogonal codes with residue c1 and torsion c2, where
// c1 <= c2 <= c1-dual.
LiftFamily so_lifts(const FpCode& c1, const FpCode& c2);

// All even quaternary codes containing the all-ones vector with residue c1
// and torsion c2.  Requires p = 2, 8 | n, all-ones in c1, c1 doubly even.
LiftFamily even_lifts_with_one(const FpCode& c1, const FpCode& c2);

// All even quaternary codes containing a {+-1}-vector with the given
// residue and torsion: the sign-diagonal orbit of the all-ones family,
// deduplicated by canonical form.  The orbit factor 2^{n-k1-k2} is checked,
// not assumed.
std::vector<CodeZp2> even_lifts_with_pm1(const FpCode& c1, const FpCode& c2);

}  // namespace zp2

#endif
