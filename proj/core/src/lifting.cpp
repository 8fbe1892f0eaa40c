#include "zp2/lifting.hpp"

#include <algorithm>
#include <unordered_set>

namespace zp2 {

// ---------------------------------------------------------------------------
// Matrix maps

ResidueMatrix psi_map(const ResidueMatrix& a, const ResidueMatrix& n) {
    if (a.rows() != n.rows() || a.cols() != n.cols() || !(a.mod() == n.mod()))
        throw ShapeError("psi_map: A and N must have equal shape and modulus");
    ResidueMatrix ant = a.times(n.transpose());
    return ant.plus(ant.transpose());
}

ResidueMatrix phi_map(const ResidueMatrix& a, const ResidueMatrix& n) {
    if (a.mod().p != 2) throw DomainError("phi_map is defined over F_2");
    if (a.rows() != n.rows() || a.cols() != n.cols() || !(a.mod() == n.mod()))
        throw ShapeError("phi_map: A and N must have equal shape and modulus");
    ResidueMatrix ant = a.times(n.transpose());
    ResidueMatrix out = ant.plus(ant.transpose());
    for (size_t i = 0; i < out.rows(); ++i)
        out.set(i, i, (out.at(i, i) + ant.at(i, i)) % 2);
    return out;
}

Row alpha_map(const ResidueMatrix& n) {
    if (n.mod().p != 2) throw DomainError("alpha_map is defined over F_2");
    Row sums(n.rows(), 0);
    for (size_t i = 0; i < n.rows(); ++i) {
        uint32_t s = 0;
        for (size_t c = 0; c < n.cols(); ++c) s ^= (n.at(i, c) & 1);
        sums[i] = s;
    }
    return sums;
}

// ---------------------------------------------------------------------------
// Assembled linear maps.  Unknown N (m x w) is flattened row-major; output
// coordinates are the pairs (i <= j) of a symmetric matrix, then (for
// Phi(+)alpha) the m row-sum coordinates.

namespace {

size_t pair_index(size_t i, size_t j, size_t m) {
    // i <= j, lexicographic over the upper triangle
    return i * m - i * (i + 1) / 2 + j;
}

ResidueMatrix assemble_map(const ResidueMatrix& a, MapKind kind) {
    const uint32_t p = a.mod().p;
    const size_t m = a.rows(), w = a.cols();
    const size_t sym = m * (m + 1) / 2;
    const size_t rows = sym + (kind == MapKind::PhiAlpha ? m : 0);
    ResidueMatrix out(a.mod(), rows, m * w);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i; j < m; ++j) {
            size_t rix = pair_index(i, j, m);
            for (size_t c = 0; c < w; ++c) {
                // coefficient of N_{r,c} in (A N^t + N A^t)_{ij}
                uint64_t v;
                if (i == j) {
                    v = 2ull * a.at(i, c);
                    if (kind != MapKind::Psi) v += a.at(i, c);  // Diag(A N^t)
                } else {
                    v = 0;
                }
                if (i == j) {
                    size_t col = i * w + c;
                    out.set(rix, col, (out.at(rix, col) + v) % p);
                } else {
                    size_t cj = j * w + c;
                    out.set(rix, cj, (out.at(rix, cj) + a.at(i, c)) % p);
                    size_t ci = i * w + c;
                    out.set(rix, ci, (out.at(rix, ci) + a.at(j, c)) % p);
                }
            }
        }
    if (kind == MapKind::PhiAlpha) {
        for (size_t i = 0; i < m; ++i)
            for (size_t c = 0; c < w; ++c) out.set(sym + i, i * w + c, 1);
    }
    return out;
}

ResidueMatrix unflatten(const Row& flat, Modulus mod, size_t m, size_t w) {
    ResidueMatrix out(mod, m, w);
    for (size_t i = 0; i < m; ++i)
        for (size_t c = 0; c < w; ++c) out.set(i, c, flat[i * w + c]);
    return out;
}

bool all_ones_in_rowspace(const ResidueMatrix& a) {
    if (a.cols() == 0) return true;  // the empty vector
    RrefResult base = rref_fp(a);
    ResidueMatrix ext = base.mat;
    ext.append_row(Row(a.cols(), 1));
    return rref_fp(ext).rank == base.rank;
}

}  // namespace

ImageCheck image_check(const ResidueMatrix& a, MapKind kind) {
    const uint32_t p = a.mod().p;
    const size_t m = a.rows(), w = a.cols();
    if (rref_fp(a).rank != m) throw PreconditionError("image_check: rank A < m");
    if (kind != MapKind::Psi && p != 2)
        throw PreconditionError("image_check: Phi maps require p = 2");
    if (kind == MapKind::PhiAlpha && all_ones_in_rowspace(a))
        throw PreconditionError("image_check: all-ones vector lies in the row space of A");

    ResidueMatrix lin = assemble_map(a, kind);
    size_t rank = rref_fp(lin).rank;

    size_t expect;
    switch (kind) {
        case MapKind::Psi:
            expect = (p == 2) ? m * (m - 1) / 2 : m * (m + 1) / 2;
            break;
        case MapKind::Phi:
            expect = m * (m + 1) / 2;
            break;
        case MapKind::PhiAlpha:
            expect = m * (m + 1) / 2 + m;
            break;
    }
    if (m == 0) expect = 0;
    if (rank != expect)
        throw ConsistencyError("image_check: rank " + std::to_string(rank) +
                               " differs from the predicted " + std::to_string(expect));
    ImageCheck out;
    out.rank = rank;
    out.image_size = bigint_pow(p, rank);
    out.kernel_size = bigint_pow(p, m * w - rank);
    return out;
}

// ---------------------------------------------------------------------------
// Standard forms

namespace {

struct StdForm {
    uint32_t p = 0;
    size_t n = 0, k1 = 0, k2 = 0;
    bool with_one = false;
    std::vector<size_t> perm;     // standard col i <- original col perm[i]
    ResidueMatrix a;              // k1 x (n-k1), or (k1-1) x (n-k1) for with_one
    ResidueMatrix b;              // k2 x (n-k1)
};

Row permute_row(const Row& orig, const std::vector<size_t>& perm) {
    Row out(perm.size());
    for (size_t i = 0; i < perm.size(); ++i) out[i] = orig[perm[i]];
    return out;
}

Row unpermute_row(const Row& std_row, const std::vector<size_t>& perm) {
    Row out(perm.size());
    for (size_t i = 0; i < perm.size(); ++i) out[perm[i]] = std_row[i];
    return out;
}

void check_chain(const FpCode& c1, const FpCode& c2) {
    if (c1.prime() != c2.prime() || c1.length() != c2.length())
        throw PreconditionError("residue and torsion codes live in different spaces");
    if (!c1.subset_of(c2)) throw PreconditionError("chain condition violated: c1 is not contained in c2");
    if (!c2.subset_of(c1.dual()))
        throw PreconditionError("chain condition violated: c2 is not contained in the dual of c1");
}

// Extract the torsion block B from c2 in the frame that puts the pivot
// columns of c1 first, then rebalance the last block so B's own pivot
// columns lead.  basis_rows are the k1 standard-coordinate rows of c1 used
// for elimination (echelon in the first k1 columns).
void extract_b_and_finish(StdForm& f, const FpCode& c2,
                          const std::vector<size_t>& frame1,
                          const std::vector<Row>& basis_rows,
                          const ResidueMatrix& a0) {
    const uint32_t p = f.p;
    const size_t n = f.n, k1 = f.k1;
    const size_t w = n - k1;
    f.k2 = c2.dim() - k1;

    std::vector<Row> tails;
    for (size_t i = 0; i < c2.dim(); ++i) {
        Row v = permute_row(c2.basis().row(i), frame1);
        for (size_t c = 0; c < k1; ++c) {
            uint32_t fac = v[c];
            if (!fac) continue;
            for (size_t t = c; t < n; ++t)
                v[t] = (v[t] + (p - fac) * basis_rows[c][t]) % p;
        }
        for (size_t c = 0; c < k1; ++c)
            if (v[c] != 0) throw ConsistencyError("torsion elimination left a head entry");
        Row tail(v.begin() + k1, v.end());
        tails.push_back(std::move(tail));
    }
    RrefResult br = rref_fp(ResidueMatrix::from_urows(Modulus::field(p), tails, w));
    if (br.rank != f.k2) throw ConsistencyError("torsion block rank mismatch");

    // reorder the last block: B's pivot columns first
    std::vector<size_t> last_order;
    std::vector<char> taken(w, 0);
    for (size_t c : br.pivots) {
        last_order.push_back(c);
        taken[c] = 1;
    }
    for (size_t c = 0; c < w; ++c)
        if (!taken[c]) last_order.push_back(c);

    f.perm.assign(frame1.begin(), frame1.begin() + k1);
    for (size_t t : last_order) f.perm.push_back(frame1[k1 + t]);

    f.a = ResidueMatrix(Modulus::field(p), a0.rows(), w);
    for (size_t i = 0; i < a0.rows(); ++i)
        for (size_t t = 0; t < w; ++t) f.a.set(i, t, a0.at(i, last_order[t]));
    f.b = ResidueMatrix(Modulus::field(p), f.k2, w);
    for (size_t s = 0; s < f.k2; ++s)
        for (size_t t = 0; t < w; ++t) f.b.set(s, t, br.mat.at(s, last_order[t]));
}

StdForm standard_so_form(const FpCode& c1, const FpCode& c2) {
    check_chain(c1, c2);
    StdForm f;
    f.p = c1.prime();
    f.n = c1.length();
    f.k1 = c1.dim();

    RrefResult r = rref_fp(c1.basis());
    std::vector<size_t> frame1 = r.pivots;
    {
        std::vector<char> is_piv(f.n, 0);
        for (size_t c : r.pivots) is_piv[c] = 1;
        for (size_t c = 0; c < f.n; ++c)
            if (!is_piv[c]) frame1.push_back(c);
    }
    const size_t w = f.n - f.k1;
    ResidueMatrix a0(Modulus::field(f.p), f.k1, w);
    std::vector<Row> basis_rows;
    for (size_t i = 0; i < f.k1; ++i) {
        Row v = permute_row(c1.basis().row(i), frame1);
        for (size_t t = 0; t < w; ++t) a0.set(i, t, v[f.k1 + t]);
        basis_rows.push_back(std::move(v));
    }
    extract_b_and_finish(f, c2, frame1, basis_rows, a0);
    return f;
}

StdForm standard_even_form(const FpCode& c1, const FpCode& c2) {
    if (c1.prime() != 2) throw PreconditionError("even lifts require p = 2");
    if (c1.length() % 8 != 0)
        throw PreconditionError("even codes with +-1 words require length divisible by 8");
    if (!c1.contains_all_ones())
        throw PreconditionError("the all-ones vector must belong to the residue code");
    if (!c1.is_doubly_even())
        throw PreconditionError("residue code must be doubly even");
    check_chain(c1, c2);

    StdForm f;
    f.with_one = true;
    f.p = 2;
    f.n = c1.length();
    f.k1 = c1.dim();
    const size_t n = f.n, k1 = f.k1, w = n - k1;

    RrefResult r = rref_fp(c1.basis());
    std::vector<size_t> frame1 = r.pivots;
    {
        std::vector<char> is_piv(n, 0);
        for (size_t c : r.pivots) is_piv[c] = 1;
        for (size_t c = 0; c < n; ++c)
            if (!is_piv[c]) frame1.push_back(c);
    }
    // Basis {1, r_2, ..., r_{k1}}: the all-ones word plus the RREF rows
    // past the first.  In frame coordinates row i >= 1 reads [0 e_{i-1} A_i].
    std::vector<Row> basis_rows;
    basis_rows.push_back(Row(n, 1));
    for (size_t i = 1; i < k1; ++i) basis_rows.push_back(permute_row(c1.basis().row(i), frame1));

    ResidueMatrix a0(Modulus::field(2), k1 ? k1 - 1 : 0, w);
    for (size_t i = 1; i < k1; ++i) {
        uint64_t wt = 1;  // the identity-block one
        for (size_t t = 0; t < w; ++t) {
            a0.set(i - 1, t, basis_rows[i][k1 + t]);
            wt += basis_rows[i][k1 + t];
        }
        if (wt % 4 != 0)
            throw ConsistencyError("doubly even basis row with weight not divisible by 4");
    }
    if (all_ones_in_rowspace(a0) && w > 0 && a0.rows() > 0)
        throw ConsistencyError("all-ones vector unexpectedly in the row space of A");

    extract_b_and_finish(f, c2, frame1, basis_rows, a0);

    // every torsion block row is orthogonal to the all-ones vector
    for (size_t s = 0; s < f.k2; ++s) {
        uint32_t sum = 0;
        for (size_t t = 0; t < w; ++t) sum ^= f.b.at(s, t);
        if (sum) throw ConsistencyError("torsion block row with odd weight");
    }
    return f;
}

// Solve the defining congruence for the family and populate a solution set.
LiftSolutionSet solve_family(const StdForm& f) {
    LiftSolutionSet s;
    s.p = f.p;
    s.n = f.n;
    s.k1 = f.k1;
    s.with_one = f.with_one;
    s.perm = f.perm;
    s.base_a = f.a;

    const uint32_t p = f.p;
    const size_t m = f.a.rows();          // k1, or k1 - 1 in the all-ones form
    const size_t w = f.n - f.k1;

    if (m == 0) {
        s.particular_n = ResidueMatrix(Modulus::field(p), 0, w);
        return s;
    }

    // integer Gram block I + A A^t from the canonical representatives
    std::vector<std::vector<uint64_t>> gram(m, std::vector<uint64_t>(m, 0));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) {
            uint64_t acc = (i == j) ? 1 : 0;
            for (size_t c = 0; c < w; ++c) acc += uint64_t(f.a.at(i, c)) * f.a.at(j, c);
            gram[i][j] = acc;
        }

    ResidueMatrix target(Modulus::field(p), m, m);
    if (!f.with_one) {
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < m; ++j) {
                if (gram[i][j] % p != 0)
                    throw PreconditionError("residue code is not self-orthogonal");
                uint64_t q = (gram[i][j] / p) % p;
                target.set(i, j, (p - static_cast<uint32_t>(q)) % p);
            }
        if (p == 2)
            for (size_t i = 0; i < m; ++i)
                if (target.at(i, i) != 0)
                    throw PreconditionError("residue code is not doubly even");
    } else {
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < m; ++j) {
                if (gram[i][j] % 2 != 0)
                    throw PreconditionError("residue code is not self-orthogonal");
                uint32_t v = (gram[i][j] / 2) % 2;
                if (i == j) {
                    if (gram[i][i] % 4 != 0)
                        throw PreconditionError("residue code is not doubly even");
                    v = (v + (gram[i][i] / 4)) % 2;
                }
                target.set(i, j, v);
            }
    }
    s.target = target;

    MapKind kind = f.with_one ? MapKind::PhiAlpha : MapKind::Psi;
    ResidueMatrix lin = assemble_map(f.a, kind);
    Row rhs;
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i; j < m; ++j) rhs.push_back(target.at(i, j));
    if (f.with_one) rhs.insert(rhs.end(), m, 0);

    auto sol = solve_affine_fp(lin, rhs);
    if (!sol) throw ConsistencyError("lift congruence unexpectedly unsolvable");
    s.particular_n = unflatten(sol->particular, Modulus::field(p), m, w);
    for (const auto& k : sol->kernel)
        s.kernel_basis.push_back(unflatten(k, Modulus::field(p), m, w));
    return s;
}

}  // namespace

// ---------------------------------------------------------------------------
// LiftSolutionSet

bool LiftSolutionSet::member_satisfies(const ResidueMatrix& n) const {
    const size_t m = base_a.rows();
    if (m == 0) return n.rows() == 0;
    if (!with_one) {
        ResidueMatrix img = psi_map(base_a, n);
        return img == target;
    }
    ResidueMatrix img = phi_map(base_a, n);
    if (!(img == target)) return false;
    Row al = alpha_map(n);
    return std::all_of(al.begin(), al.end(), [](uint32_t v) { return v == 0; });
}

std::vector<Row> LiftSolutionSet::member_rows(const ResidueMatrix& nmat) const {
    const uint32_t m2 = p * p;
    const size_t w = n - k1;
    std::vector<Row> rows;
    if (!with_one) {
        for (size_t i = 0; i < k1; ++i) {
            Row std_row(n, 0);
            std_row[i] = 1;
            for (size_t c = 0; c < w; ++c)
                std_row[k1 + c] = (base_a.at(i, c) + p * nmat.at(i, c)) % m2;
            rows.push_back(unpermute_row(std_row, perm));
        }
    } else {
        rows.push_back(Row(n, 1));  // the all-ones word, stable under unpermutation
        for (size_t i = 1; i < k1; ++i) {
            Row std_row(n, 0);
            std_row[i] = 1;
            for (size_t c = 0; c < w; ++c)
                std_row[k1 + c] = (base_a.at(i - 1, c) + 2 * nmat.at(i - 1, c)) % 4;
            rows.push_back(unpermute_row(std_row, perm));
        }
    }
    return rows;
}

CodeZp2 LiftSolutionSet::code_for(const ResidueMatrix& nmat) const {
    return CodeZp2::from_matrix(
        ResidueMatrix::from_urows(Modulus::square(p), member_rows(nmat), n));
}

void LiftSolutionSet::for_each_member(
    const std::function<void(const ResidueMatrix&)>& fn) const {
    const size_t k = kernel_basis.size();
    std::vector<uint32_t> coeff(k, 0);
    while (true) {
        ResidueMatrix n = particular_n;
        for (size_t i = 0; i < k; ++i)
            if (coeff[i]) n = n.plus(kernel_basis[i].scaled(coeff[i]));
        fn(n);
        size_t i = k;
        while (i > 0 && ++coeff[i - 1] == p) coeff[--i] = 0;
        if (i == 0) return;
    }
}

// ---------------------------------------------------------------------------
// LiftFamily

CodeZp2 LiftFamily::code_for(const ResidueMatrix& nmat) const {
    const uint32_t p = base.p, m2 = p * p;
    const size_t n = base.n, k1 = base.k1, w = n - k1;
    std::vector<Row> rows = base.member_rows(nmat);
    for (size_t s = 0; s < b.rows(); ++s) {
        Row std_row(n, 0);
        for (size_t c = 0; c < w; ++c) std_row[k1 + c] = (p * b.at(s, c)) % m2;
        rows.push_back(unpermute_row(std_row, base.perm));
    }
    return CodeZp2::from_matrix(ResidueMatrix::from_urows(Modulus::square(p), rows, n));
}

void LiftFamily::for_each_code(const std::function<void(const CodeZp2&)>& fn) const {
    const uint32_t p = base.p;
    const size_t k = coset_basis.size();
    std::vector<uint32_t> coeff(k, 0);
    while (true) {
        ResidueMatrix n = base.particular_n;
        for (size_t i = 0; i < k; ++i)
            if (coeff[i]) n = n.plus(coset_basis[i].scaled(coeff[i]));
        fn(code_for(n));
        size_t i = k;
        while (i > 0 && ++coeff[i - 1] == p) coeff[--i] = 0;
        if (i == 0) return;
    }
}

std::vector<CodeZp2> LiftFamily::codes() const {
    std::vector<CodeZp2> out;
    out.reserve(64);
    for_each_code([&out](const CodeZp2& c) { out.push_back(c); });
    return out;
}

// ---------------------------------------------------------------------------
// Enumerators

LiftSolutionSet free_so_lifts(const FpCode& c1) {
    if (!c1.is_self_orthogonal())
        throw PreconditionError("free_so_lifts: residue code is not self-orthogonal");
    if (c1.prime() == 2 && !c1.is_doubly_even())
        throw PreconditionError("free_so_lifts: residue code must be doubly even for p = 2");
    StdForm f = standard_so_form(c1, c1);
    return solve_family(f);
}

namespace {

// Quotient the solution kernel by the fiber directions {M B}: fills
// fiber_basis with a basis of the span of the E_rs B and coset_basis with
// a complement inside the kernel.
void split_fibers(LiftFamily& fam) {
    const LiftSolutionSet& s = fam.base;
    const uint32_t p = s.p;
    const size_t m = s.base_a.rows();
    const size_t w = s.n - s.k1;
    const size_t k2 = fam.b.rows();

    ResidueMatrix acc(Modulus::field(p), 0, m * w);
    auto try_add = [&acc](const Row& flat) {
        ResidueMatrix trial = acc;
        trial.append_row(flat);
        RrefResult r = rref_fp(trial);
        if (r.rank > acc.rows()) {
            acc = r.mat;
            return true;
        }
        return false;
    };

    for (size_t r = 0; r < m; ++r)
        for (size_t sidx = 0; sidx < k2; ++sidx) {
            ResidueMatrix e(Modulus::field(p), m, w);
            for (size_t c = 0; c < w; ++c) e.set(r, c, fam.b.at(sidx, c));
            if (!s.member_satisfies(s.particular_n.plus(e)))
                throw ConsistencyError("fiber direction escapes the solution set");
            Row flat(m * w);
            for (size_t i = 0; i < m; ++i)
                for (size_t c = 0; c < w; ++c) flat[i * w + c] = e.at(i, c);
            if (try_add(flat)) fam.fiber_basis.push_back(std::move(e));
        }
    if (fam.fiber_basis.size() != m * k2)
        throw ConsistencyError("fiber space dimension differs from k1 k2");

    for (const auto& kb : s.kernel_basis) {
        Row flat(m * w);
        for (size_t i = 0; i < m; ++i)
            for (size_t c = 0; c < w; ++c) flat[i * w + c] = kb.at(i, c);
        if (try_add(flat)) fam.coset_basis.push_back(kb);
    }
    if (fam.coset_basis.size() + fam.fiber_basis.size() != s.kernel_basis.size())
        throw ConsistencyError("fiber directions do not lie inside the kernel");
}

}  // namespace

LiftFamily so_lifts(const FpCode& c1, const FpCode& c2) {
    if (!c1.is_self_orthogonal())
        throw PreconditionError("so_lifts: residue code is not self-orthogonal");
    if (c1.prime() == 2 && !c1.is_doubly_even())
        throw PreconditionError("so_lifts: residue code must be doubly even for p = 2");
    StdForm f = standard_so_form(c1, c2);
    LiftFamily fam;
    fam.base = solve_family(f);
    fam.b = f.b;
    split_fibers(fam);
    return fam;
}

LiftFamily even_lifts_with_one(const FpCode& c1, const FpCode& c2) {
    StdForm f = standard_even_form(c1, c2);
    LiftFamily fam;
    fam.base = solve_family(f);
    fam.b = f.b;
    split_fibers(fam);
    return fam;
}

namespace {

CodeZp2 negate_columns(const CodeZp2& c, uint32_t mask) {
    const uint32_t m2 = c.prime() * c.prime();
    const ResidueMatrix& g = c.generators();
    ResidueMatrix out = g;
    for (size_t j = 0; j < g.cols(); ++j) {
        if (!((mask >> j) & 1)) continue;
        for (size_t i = 0; i < g.rows(); ++i)
            out.set(i, j, (m2 - g.at(i, j)) % m2);
    }
    return CodeZp2::from_matrix(out);
}

}  // namespace

std::vector<CodeZp2> even_lifts_with_pm1(const FpCode& c1, const FpCode& c2) {
    LiftFamily fam = even_lifts_with_one(c1, c2);
    const size_t n = c1.length();
    const size_t k1 = c1.dim(), k2 = fam.k2();
    if (n > 31) throw BudgetError("sign orbit enumeration limited to n <= 31");

    std::vector<CodeZp2> out;
    std::unordered_set<std::string> seen;
    fam.for_each_code([&](const CodeZp2& base_code) {
        for (uint32_t mask = 0; mask < (uint32_t(1) << n); ++mask) {
            CodeZp2 signed_code = negate_columns(base_code, mask);
            if (seen.insert(signed_code.canonical_key()).second)
                out.push_back(std::move(signed_code));
        }
    });

    Bigint expect = bigint_pow(2, n - k1 - k2) * fam.count();
    if (Bigint(out.size()) != expect)
        throw ConsistencyError("sign orbit size " + std::to_string(out.size()) +
                               " differs from the predicted " + to_decimal(expect));
    // every member meets {+-1}^n in exactly |c2| = 2^{k1+k2} words
    const uint64_t want = uint64_t(1) << (k1 + k2);
    for (const CodeZp2& c : out) {
        if (c.cardinality() > (Bigint(1) << 20)) continue;
        uint64_t hits = 0;
        c.codewords([&hits](const Row& word) {
            bool odd = std::all_of(word.begin(), word.end(),
                                   [](uint32_t v) { return v % 2 == 1; });
            hits += odd;
            return true;
        });
        if (hits != want)
            throw ConsistencyError("member meets {+-1}^n in " + std::to_string(hits) +
                                   " words, expected " + std::to_string(want));
    }
    std::sort(out.begin(), out.end(),
              [](const CodeZp2& x, const CodeZp2& y) { return x.lex_less(y); });
    return out;
}

}  // namespace zp2
