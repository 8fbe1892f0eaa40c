#include "zp2/codecore.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace zp2 {

// ---------------------------------------------------------------------------
// FpCode

FpCode FpCode::zero(uint32_t p, size_t n) {
    FpCode c;
    c.n_ = n;
    c.basis_ = ResidueMatrix(Modulus::field(p), 0, n);
    return c;
}

FpCode FpCode::from_rows(uint32_t p, size_t n,
                         const std::vector<std::vector<long long>>& rows) {
    for (const auto& r : rows)
        if (r.size() != n) throw ShapeError("generator row length != n");
    return from_matrix(ResidueMatrix::from_rows(Modulus::field(p), rows, n));
}

FpCode FpCode::from_matrix(const ResidueMatrix& m) {
    if (!m.mod().is_field()) throw DomainError("FpCode requires a prime modulus");
    FpCode c;
    c.n_ = m.cols();
    c.basis_ = rref_fp(m).mat;
    return c;
}

bool FpCode::contains(const Row& v) const {
    if (v.size() != n_) throw ShapeError("word length != n");
    Row x = howell_reduce(basis_, v);
    return std::all_of(x.begin(), x.end(), [](uint32_t e) { return e == 0; });
}

bool FpCode::contains_all_ones() const { return contains(Row(n_, 1)); }

bool FpCode::subset_of(const FpCode& other) const {
    for (size_t i = 0; i < dim(); ++i)
        if (!other.contains(basis_.row(i))) return false;
    return true;
}

FpCode FpCode::dual() const {
    auto ker = kernel_fp(basis_);
    FpCode d;
    d.n_ = n_;
    d.basis_ = rref_fp(ResidueMatrix::from_urows(basis_.mod(), ker, n_)).mat;
    return d;
}

bool FpCode::is_self_orthogonal() const {
    const uint32_t p = prime();
    for (size_t i = 0; i < dim(); ++i)
        for (size_t j = i; j < dim(); ++j) {
            uint64_t dot = 0;
            for (size_t c = 0; c < n_; ++c) dot += uint64_t(basis_.at(i, c)) * basis_.at(j, c);
            if (dot % p != 0) return false;
        }
    return true;
}

bool FpCode::is_doubly_even() const {
    if (prime() != 2) throw DomainError("is_doubly_even is a binary-code notion");
    for (size_t i = 0; i < dim(); ++i) {
        uint64_t wt = 0;
        for (size_t c = 0; c < n_; ++c) wt += basis_.at(i, c);
        if (wt % 4 != 0) return false;
    }
    return is_self_orthogonal();
}

void FpCode::codewords(const std::function<bool(const Row&)>& visit) const {
    const uint32_t p = prime();
    const size_t k = dim();
    std::vector<uint32_t> coeff(k, 0);
    Row word(n_, 0);
    while (true) {
        word.assign(n_, 0);
        for (size_t i = 0; i < k; ++i) {
            if (!coeff[i]) continue;
            for (size_t c = 0; c < n_; ++c)
                word[c] = (word[c] + coeff[i] * basis_.at(i, c)) % p;
        }
        if (!visit(word)) return;
        size_t i = k;
        while (i > 0 && ++coeff[i - 1] == p) coeff[--i] = 0;
        if (i == 0) return;
    }
}

// ---------------------------------------------------------------------------
// CodeZp2

CodeZp2 CodeZp2::zero(uint32_t p, size_t n) {
    CodeZp2 c;
    c.p_ = p;
    c.n_ = n;
    c.gens_ = ResidueMatrix(Modulus::square(p), 0, n);
    return c;
}

CodeZp2 CodeZp2::from_generators(uint32_t p, size_t n,
                                 const std::vector<std::vector<long long>>& rows) {
    for (const auto& r : rows)
        if (r.size() != n) throw ShapeError("generator row length != n");
    return from_matrix(ResidueMatrix::from_rows(Modulus::square(p), rows, n));
}

CodeZp2 CodeZp2::from_matrix(const ResidueMatrix& m) {
    if (m.mod().is_field()) throw DomainError("CodeZp2 requires modulus p^2");
    CodeZp2 c;
    c.p_ = m.mod().p;
    c.n_ = m.cols();
    c.gens_ = howell_form(m);
    // type: k1 = dim of the residue code; the pivot valuations fix
    // 2 k1 + k2 through |C| = prod p^{2 - v_i}.
    size_t k1 = rref_fp(c.gens_.reduce_to_field()).rank;
    size_t sumv = 0;
    for (uint32_t v : howell_pivot_valuations(c.gens_)) sumv += 2 - v;
    if (sumv < 2 * k1) throw ConsistencyError("type derivation: |C| below residue bound");
    c.k1_ = k1;
    c.k2_ = sumv - 2 * k1;
    return c;
}

uint64_t CodeZp2::size_u64(uint64_t limit) const {
    Bigint card = cardinality();
    if (card > limit)
        throw BudgetError("codeword count " + to_decimal(card) + " exceeds limit " +
                          std::to_string(limit));
    return card.convert_to<uint64_t>();
}

bool CodeZp2::contains(const Row& v) const {
    if (v.size() != n_) throw ShapeError("word length != n");
    Row x = howell_reduce(gens_, v);
    return std::all_of(x.begin(), x.end(), [](uint32_t e) { return e == 0; });
}

FpCode CodeZp2::residue() const { return FpCode::from_matrix(gens_.reduce_to_field()); }

FpCode CodeZp2::torsion() const {
    // {v : p v in C} is spanned by the mod-p generators together with the
    // p-divisible combinations a H (a in the left kernel of H mod p) / p.
    const uint32_t p = p_, m = p * p;
    const size_t rows = gens_.rows();
    std::vector<Row> out;
    for (size_t i = 0; i < rows; ++i) {
        Row r(n_);
        for (size_t c = 0; c < n_; ++c) r[c] = gens_.at(i, c) % p;
        out.push_back(std::move(r));
    }
    if (rows > 0) {
        ResidueMatrix modp = gens_.reduce_to_field();
        auto left_kernel = kernel_fp(modp.transpose());
        for (const auto& a : left_kernel) {
            Row comb(n_, 0);
            for (size_t c = 0; c < n_; ++c) {
                uint64_t acc = 0;
                for (size_t i = 0; i < rows; ++i) acc += uint64_t(a[i]) * gens_.at(i, c);
                uint32_t v = static_cast<uint32_t>(acc % m);
                if (v % p != 0) throw ConsistencyError("torsion: combination not divisible by p");
                comb[c] = (v / p) % p;
            }
            out.push_back(std::move(comb));
        }
    }
    return FpCode::from_matrix(ResidueMatrix::from_urows(Modulus::field(p_), out, n_));
}

CodeZp2 CodeZp2::dual() const {
    // Left kernel of G^t over Z_{p^2} via the Howell form of [G^t | I]:
    // rows vanishing on the first block have their identity-block part
    // generate {x : x . g = 0 for all generators g}.
    const size_t k = gens_.rows();
    ResidueMatrix aug(gens_.mod(), n_, k + n_);
    for (size_t i = 0; i < n_; ++i) {
        for (size_t j = 0; j < k; ++j) aug.set(i, j, gens_.at(j, i));
        aug.set(i, k + i, 1);
    }
    ResidueMatrix h = howell_form(aug);
    std::vector<Row> duals;
    for (size_t i = 0; i < h.rows(); ++i) {
        bool zero_left = true;
        for (size_t j = 0; j < k && zero_left; ++j) zero_left = (h.at(i, j) == 0);
        if (!zero_left) continue;
        Row x(n_);
        for (size_t c = 0; c < n_; ++c) x[c] = h.at(i, k + c);
        duals.push_back(std::move(x));
    }
    return from_matrix(ResidueMatrix::from_urows(gens_.mod(), duals, n_));
}

bool CodeZp2::is_self_orthogonal() const {
    const uint32_t m = p_ * p_;
    for (size_t i = 0; i < gens_.rows(); ++i)
        for (size_t j = i; j < gens_.rows(); ++j) {
            uint64_t dot = 0;
            for (size_t c = 0; c < n_; ++c) dot += uint64_t(gens_.at(i, c)) * gens_.at(j, c);
            if (dot % m != 0) return false;
        }
    return true;
}

bool CodeZp2::is_self_dual() const { return is_self_orthogonal() && 2 * k1_ + k2_ == n_; }

void CodeZp2::codewords(const std::function<bool(const Row&)>& visit, uint64_t limit) const {
    size_u64(limit);
    const uint32_t m = p_ * p_;
    auto vals = howell_pivot_valuations(gens_);
    const size_t k = gens_.rows();
    std::vector<uint32_t> radix(k);
    for (size_t i = 0; i < k; ++i) radix[i] = vals[i] ? p_ : m;
    std::vector<uint32_t> coeff(k, 0);
    Row word(n_, 0);
    while (true) {
        word.assign(n_, 0);
        for (size_t i = 0; i < k; ++i) {
            if (!coeff[i]) continue;
            for (size_t c = 0; c < n_; ++c)
                word[c] = static_cast<uint32_t>((word[c] + uint64_t(coeff[i]) * gens_.at(i, c)) % m);
        }
        if (!visit(word)) return;
        size_t i = k;
        while (i > 0 && ++coeff[i - 1] == radix[i - 1]) coeff[--i] = 0;
        if (i == 0) return;
    }
}

// ---------------------------------------------------------------------------
// Quaternary notions

uint64_t euclidean_weight(const Row& word) {
    uint64_t w = 0;
    for (uint32_t v : word) {
        uint32_t r = v % 4;
        w += (r == 2) ? 4 : (r == 0 ? 0 : 1);
    }
    return w;
}

bool is_even(const CodeZp2& c) {
    if (c.prime() != 2) throw DomainError("even codes are quaternary");
    if (!c.is_self_orthogonal()) return false;
    for (size_t i = 0; i < c.generators().rows(); ++i)
        if (euclidean_weight(c.generators().row(i)) % 8 != 0) return false;
    return true;
}

std::optional<Row> contains_pm1(const CodeZp2& c) {
    if (c.prime() != 2) throw DomainError("contains_pm1 is a quaternary notion");
    // A word has all coordinates in {1,3} iff it is odd everywhere, i.e.
    // its mod-2 image is the all-ones vector; solve for coefficients on
    // the generators over F_2 and lift.
    const size_t n = c.length();
    ResidueMatrix modp = c.generators().reduce_to_field();
    if (modp.rows() == 0) return std::nullopt;
    auto sol = solve_affine_fp(modp.transpose(), Row(n, 1));
    if (!sol) return std::nullopt;
    Row z(n, 0);
    for (size_t c2 = 0; c2 < n; ++c2) {
        uint64_t acc = 0;
        for (size_t i = 0; i < c.generators().rows(); ++i)
            acc += uint64_t(sol->particular[i]) * c.generators().at(i, c2);
        z[c2] = static_cast<uint32_t>(acc % 4);
        if (z[c2] % 2 != 1) throw ConsistencyError("contains_pm1: witness not odd");
    }
    if (is_even(c) && n % 8 != 0)
        throw ConsistencyError("even code with a +-1 word must have length divisible by 8");
    return z;
}

// ---------------------------------------------------------------------------
// Intermediate codes

std::vector<FpCode> intermediate_codes(const FpCode& c1, size_t k2) {
    const uint32_t p = c1.prime();
    const size_t n = c1.length(), k1 = c1.dim();
    FpCode perp = c1.dual();
    if (!c1.subset_of(perp))
        throw PreconditionError("intermediate_codes: c1 is not self-orthogonal");
    const size_t q = perp.dim() - k1;  // n - 2 k1
    if (k2 > q) return {};

    // complement basis of c1 inside its dual
    std::vector<Row> complement;
    {
        ResidueMatrix acc = c1.basis();
        for (size_t i = 0; i < perp.dim(); ++i) {
            ResidueMatrix trial = acc;
            trial.append_row(perp.basis().row(i));
            RrefResult r = rref_fp(trial);
            if (r.rank > acc.rows()) {
                complement.push_back(perp.basis().row(i));
                acc = r.mat;
            }
        }
    }
    if (complement.size() != q) throw ConsistencyError("quotient dimension mismatch");

    // enumerate k2-dim subspaces of the quotient as RREF matrices and pull
    // the rows back through the complement basis
    std::vector<FpCode> out;
    std::vector<size_t> pivots(k2);
    std::vector<std::vector<long long>> gen_rows;

    // choose pivot columns 0 <= pivots[0] < ... < pivots[k2-1] < q
    std::function<void(size_t, size_t)> choose = [&](size_t idx, size_t start) {
        if (idx == k2) {
            // free positions: row i, columns > pivots[i], not a pivot column
            std::vector<std::pair<size_t, size_t>> free_pos;
            std::vector<char> is_piv(q, 0);
            for (size_t c : pivots) is_piv[c] = 1;
            for (size_t i = 0; i < k2; ++i)
                for (size_t c = pivots[i] + 1; c < q; ++c)
                    if (!is_piv[c]) free_pos.emplace_back(i, c);

            std::vector<uint32_t> fill(free_pos.size(), 0);
            while (true) {
                ResidueMatrix sub(Modulus::field(p), k2, q);
                for (size_t i = 0; i < k2; ++i) sub.set(i, pivots[i], 1);
                for (size_t t = 0; t < free_pos.size(); ++t)
                    sub.set(free_pos[t].first, free_pos[t].second, fill[t]);

                std::vector<Row> rows;
                for (size_t i = 0; i < c1.dim(); ++i) rows.push_back(c1.basis().row(i));
                for (size_t i = 0; i < k2; ++i) {
                    Row w(n, 0);
                    for (size_t c = 0; c < q; ++c) {
                        if (!sub.at(i, c)) continue;
                        for (size_t t = 0; t < n; ++t)
                            w[t] = (w[t] + sub.at(i, c) * complement[c][t]) % p;
                    }
                    rows.push_back(std::move(w));
                }
                out.push_back(FpCode::from_matrix(
                    ResidueMatrix::from_urows(Modulus::field(p), rows, n)));

                size_t t = fill.size();
                while (t > 0 && ++fill[t - 1] == p) fill[--t] = 0;
                if (t == 0) break;
            }
            return;
        }
        for (size_t c = start; c < q; ++c) {
            pivots[idx] = c;
            choose(idx + 1, c + 1);
        }
    };
    if (k2 == 0) {
        out.push_back(c1);
    } else {
        choose(0, 0);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Text format

MatrixText parse_matrix_text(std::istream& in) {
    MatrixText t;
    std::string line;
    if (!std::getline(in, line)) throw ShapeError("matrix text: missing header");
    {
        std::istringstream hs(line);
        long long p = 0, n = -1;
        if (!(hs >> p >> n) || p < 2 || n < 0) throw ShapeError("matrix text: bad header");
        t.p = static_cast<uint32_t>(p);
        t.n = static_cast<size_t>(n);
    }
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<long long> row;
        long long v;
        while (ls >> v) row.push_back(v);
        if (row.empty()) {
            if (t.rows.empty()) continue;  // leading blank lines
            break;                         // blank line terminates the block
        }
        if (row.size() != t.n) throw ShapeError("matrix text: row length != n");
        t.rows.push_back(std::move(row));
    }
    return t;
}

std::string format_matrix_text(uint32_t p, const ResidueMatrix& gens) {
    std::ostringstream os;
    os << p << ' ' << gens.cols() << '\n' << gens.to_string();
    return os.str();
}

}  // namespace zp2
