#include "zp2/ringmat.hpp"

#include <algorithm>
#include <sstream>

namespace zp2 {

bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

static void check_prime(uint32_t p) {
    if (!is_prime_u32(p)) throw DomainError("modulus base " + std::to_string(p) + " is not prime");
    if (p > 46337) throw DomainError("prime too large: p^2 must fit in 32 bits");
}

Modulus Modulus::field(uint32_t p) {
    check_prime(p);
    return Modulus{p, p};
}

Modulus Modulus::square(uint32_t p) {
    check_prime(p);
    return Modulus{p, p * p};
}

uint32_t reduce_mod(long long v, uint32_t m) {
    long long r = v % static_cast<long long>(m);
    if (r < 0) r += m;
    return static_cast<uint32_t>(r);
}

uint32_t inv_mod(uint32_t a, uint32_t m) {
    // extended Euclid
    int64_t t = 0, newt = 1;
    int64_t r = m, newr = a % m;
    while (newr != 0) {
        int64_t q = r / newr;
        std::swap(t = t - q * newt, newt);
        std::swap(r = r - q * newr, newr);
    }
    if (r != 1) throw DomainError("not a unit mod " + std::to_string(m));
    if (t < 0) t += m;
    return static_cast<uint32_t>(t);
}

ResidueMatrix::ResidueMatrix(Modulus mod, size_t rows, size_t cols)
    : mod_(mod), rows_(rows), cols_(cols), e_(rows * cols, 0) {}

ResidueMatrix ResidueMatrix::from_rows(Modulus mod,
                                       const std::vector<std::vector<long long>>& rows,
                                       size_t cols_hint) {
    size_t cols = cols_hint;
    if (!rows.empty()) {
        cols = rows.front().size();
        for (const auto& r : rows)
            if (r.size() != cols) throw ShapeError("ragged rows");
        if (cols_hint != 0 && cols != cols_hint) throw ShapeError("row length mismatch");
    }
    ResidueMatrix m(mod, rows.size(), cols);
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols; ++j) m.e_[i * cols + j] = reduce_mod(rows[i][j], mod.m);
    return m;
}

ResidueMatrix ResidueMatrix::from_urows(Modulus mod, const std::vector<Row>& rows,
                                        size_t cols_hint) {
    size_t cols = cols_hint;
    if (!rows.empty()) {
        cols = rows.front().size();
        for (const auto& r : rows)
            if (r.size() != cols) throw ShapeError("ragged rows");
        if (cols_hint != 0 && cols != cols_hint) throw ShapeError("row length mismatch");
    }
    ResidueMatrix m(mod, rows.size(), cols);
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols; ++j) m.e_[i * cols + j] = rows[i][j] % mod.m;
    return m;
}

ResidueMatrix ResidueMatrix::identity(Modulus mod, size_t n) {
    ResidueMatrix m(mod, n, n);
    for (size_t i = 0; i < n; ++i) m.e_[i * n + i] = 1 % mod.m;
    return m;
}

Row ResidueMatrix::row(size_t r) const {
    return Row(e_.begin() + r * cols_, e_.begin() + (r + 1) * cols_);
}

void ResidueMatrix::append_row(const Row& r) {
    if (r.size() != cols_) throw ShapeError("append_row: wrong length");
    e_.insert(e_.end(), r.begin(), r.end());
    ++rows_;
}

ResidueMatrix ResidueMatrix::transpose() const {
    ResidueMatrix t(mod_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) t.e_[j * rows_ + i] = e_[i * cols_ + j];
    return t;
}

ResidueMatrix ResidueMatrix::times(const ResidueMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw ShapeError("matrix product: dimension mismatch");
    if (!(mod_ == rhs.mod_)) throw ShapeError("matrix product: modulus mismatch");
    ResidueMatrix out(mod_, rows_, rhs.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            uint64_t a = e_[i * cols_ + k];
            if (!a) continue;
            for (size_t j = 0; j < rhs.cols_; ++j) {
                uint64_t v = out.e_[i * rhs.cols_ + j] + a * rhs.e_[k * rhs.cols_ + j];
                out.e_[i * rhs.cols_ + j] = static_cast<uint32_t>(v % mod_.m);
            }
        }
    return out;
}

ResidueMatrix ResidueMatrix::plus(const ResidueMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_ || !(mod_ == rhs.mod_))
        throw ShapeError("matrix sum: shape mismatch");
    ResidueMatrix out = *this;
    for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = (e_[i] + rhs.e_[i]) % mod_.m;
    return out;
}

ResidueMatrix ResidueMatrix::scaled(uint32_t c) const {
    ResidueMatrix out = *this;
    uint64_t cc = c % mod_.m;
    for (auto& v : out.e_) v = static_cast<uint32_t>((cc * v) % mod_.m);
    return out;
}

ResidueMatrix ResidueMatrix::reduce_to_field() const {
    ResidueMatrix out(Modulus::field(mod_.p), rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] % mod_.p;
    return out;
}

ResidueMatrix ResidueMatrix::lift_to_square() const {
    ResidueMatrix out(Modulus::square(mod_.p), rows_, cols_);
    out.e_ = e_;
    return out;
}

bool ResidueMatrix::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](uint32_t v) { return v == 0; });
}

bool ResidueMatrix::lex_less(const ResidueMatrix& rhs) const {
    if (rows_ != rhs.rows_) return rows_ < rhs.rows_;
    return e_ < rhs.e_;
}

std::string ResidueMatrix::key() const {
    std::string k;
    k.reserve(8 + e_.size() * 4);
    auto push32 = [&k](uint32_t v) {
        k.push_back(static_cast<char>(v & 0xff));
        k.push_back(static_cast<char>((v >> 8) & 0xff));
        k.push_back(static_cast<char>((v >> 16) & 0xff));
        k.push_back(static_cast<char>((v >> 24) & 0xff));
    };
    push32(static_cast<uint32_t>(rows_));
    push32(static_cast<uint32_t>(cols_));
    if (mod_.m < 256) {
        for (uint32_t v : e_) k.push_back(static_cast<char>(v));
    } else {
        for (uint32_t v : e_) push32(v);
    }
    return k;
}

std::string ResidueMatrix::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) {
            if (j) os << ' ';
            os << at(i, j);
        }
        os << '\n';
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// RREF over F_p

RrefResult rref_fp(const ResidueMatrix& m) {
    if (!m.mod().is_field()) throw DomainError("rref_fp requires a prime modulus");
    const uint32_t p = m.mod().p;
    const size_t rows = m.rows(), cols = m.cols();
    std::vector<Row> w(rows);
    for (size_t i = 0; i < rows; ++i) w[i] = m.row(i);

    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t sel = r;
        while (sel < rows && w[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(w[r], w[sel]);
        uint64_t inv = inv_mod(w[r][c], p);
        for (size_t j = c; j < cols; ++j) w[r][j] = static_cast<uint32_t>(inv * w[r][j] % p);
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || w[i][c] == 0) continue;
            uint64_t f = w[i][c];
            for (size_t j = c; j < cols; ++j) {
                uint64_t v = w[i][j] + (p - static_cast<uint32_t>(f * w[r][j] % p));
                w[i][j] = static_cast<uint32_t>(v % p);
            }
        }
        pivots.push_back(c);
        ++r;
    }
    RrefResult out;
    out.rank = r;
    out.pivots = std::move(pivots);
    std::vector<Row> keep(w.begin(), w.begin() + r);
    out.mat = ResidueMatrix::from_urows(m.mod(), keep, cols);
    return out;
}

// ---------------------------------------------------------------------------
// Howell form over Z_{p^2}
//
// Worklist echelonization.  Each column owns at most one pivot row with
// pivot value 1 or p.  A new row is reduced left to right; rows taking a
// pivot divisible by p enqueue their p-multiple so the span property holds
// (every span element with extra leading zeros is generated by later rows).
// A final back-substitution pass reduces entries above each pivot modulo
// the pivot value, which makes the form unique.

namespace {

struct HowellState {
    uint32_t p, m;
    size_t cols;
    std::vector<Row> slot;       // slot[c]: pivot row at column c, possibly empty
    std::vector<Row> worklist;

    void push(Row r) { worklist.push_back(std::move(r)); }

    void insert(Row r) {
        for (size_t c = 0; c < cols; ++c) {
            uint32_t v = r[c];
            if (v == 0) continue;
            uint32_t val = (v % p == 0) ? 1 : 0;  // p-adic valuation, m = p^2
            if (slot[c].empty()) {
                uint32_t unit = val ? v / p : v;
                uint64_t inv = inv_mod(unit, m);
                for (size_t j = c; j < cols; ++j)
                    r[j] = static_cast<uint32_t>(inv * r[j] % m);
                if (val) {
                    Row comp(cols, 0);
                    for (size_t j = c; j < cols; ++j)
                        comp[j] = static_cast<uint32_t>(uint64_t(p) * r[j] % m);
                    slot[c] = std::move(r);
                    push(std::move(comp));
                } else {
                    slot[c] = std::move(r);
                }
                return;
            }
            Row& h = slot[c];
            uint32_t pivval = h[c];  // 1 or p
            uint32_t hval = (pivval == 1) ? 0 : 1;
            if (val >= hval) {
                uint64_t q = v / pivval;
                for (size_t j = c; j < cols; ++j) {
                    uint64_t sub = q * h[j] % m;
                    r[j] = static_cast<uint32_t>((r[j] + m - sub) % m);
                }
            } else {
                // r carries a unit where the pivot is only p: r becomes the
                // pivot, the old pivot row re-enters reduction.
                uint64_t inv = inv_mod(v, m);
                for (size_t j = c; j < cols; ++j)
                    r[j] = static_cast<uint32_t>(inv * r[j] % m);
                std::swap(h, r);
                uint64_t q = r[c];  // old pivot value p, new pivot 1
                for (size_t j = c; j < cols; ++j) {
                    uint64_t sub = q * h[j] % m;
                    r[j] = static_cast<uint32_t>((r[j] + m - sub) % m);
                }
            }
        }
    }

    void drain() {
        while (!worklist.empty()) {
            Row r = std::move(worklist.back());
            worklist.pop_back();
            insert(std::move(r));
        }
    }
};

}  // namespace

ResidueMatrix howell_form(const ResidueMatrix& m) {
    const Modulus mod = m.mod();
    if (mod.is_field()) return rref_fp(m).mat;

    HowellState st{mod.p, mod.m, m.cols(), std::vector<Row>(m.cols()), {}};
    for (size_t i = 0; i < m.rows(); ++i) st.push(m.row(i));
    st.drain();

    std::vector<Row> rows;
    std::vector<size_t> pivcols;
    for (size_t c = 0; c < m.cols(); ++c)
        if (!st.slot[c].empty()) {
            rows.push_back(std::move(st.slot[c]));
            pivcols.push_back(c);
        }
    // reduce entries above each pivot modulo the pivot value
    const uint32_t mm = mod.m;
    for (size_t i = 0; i < rows.size(); ++i) {
        size_t c = pivcols[i];
        uint32_t d = rows[i][c];
        for (size_t j = 0; j < i; ++j) {
            uint64_t q = rows[j][c] / d;
            if (!q) continue;
            for (size_t k = c; k < st.cols; ++k) {
                uint64_t sub = q * rows[i][k] % mm;
                rows[j][k] = static_cast<uint32_t>((rows[j][k] + mm - sub) % mm);
            }
        }
    }
    return ResidueMatrix::from_urows(mod, rows, m.cols());
}

std::vector<uint32_t> howell_pivot_valuations(const ResidueMatrix& h) {
    std::vector<uint32_t> vals;
    vals.reserve(h.rows());
    for (size_t i = 0; i < h.rows(); ++i) {
        size_t c = 0;
        while (c < h.cols() && h.at(i, c) == 0) ++c;
        if (c == h.cols()) throw ConsistencyError("zero row in Howell form");
        vals.push_back(h.at(i, c) == 1 ? 0 : 1);
    }
    return vals;
}

Row howell_reduce(const ResidueMatrix& h, Row x) {
    if (x.size() != h.cols()) throw ShapeError("howell_reduce: wrong length");
    const uint32_t m = h.mod().m;
    size_t i = 0;
    for (size_t c = 0; c < h.cols(); ++c) {
        if (i < h.rows()) {
            // locate the pivot row for this column if any
            size_t pc = 0;
            while (pc < h.cols() && h.at(i, pc) == 0) ++pc;
            if (pc == c) {
                uint32_t d = h.at(i, c);
                uint64_t q = x[c] / d;
                if (q) {
                    for (size_t k = c; k < h.cols(); ++k) {
                        uint64_t sub = q * h.at(i, k) % m;
                        x[k] = static_cast<uint32_t>((x[k] + m - sub) % m);
                    }
                }
                ++i;
            }
        }
    }
    return x;
}

// ---------------------------------------------------------------------------
// F_p linear solving

std::optional<AffineSolution> solve_affine_fp(const ResidueMatrix& a, const Row& b) {
    if (a.rows() != b.size()) throw ShapeError("solve_affine_fp: size mismatch");
    if (!a.mod().is_field()) throw DomainError("solve_affine_fp requires a prime modulus");
    const uint32_t p = a.mod().p;
    const size_t n = a.cols();

    ResidueMatrix aug(a.mod(), a.rows(), n + 1);
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t j = 0; j < n; ++j) aug.set(i, j, a.at(i, j));
        aug.set(i, n, b[i]);
    }
    RrefResult r = rref_fp(aug);
    for (size_t i = 0; i < r.rank; ++i)
        if (r.pivots[i] == n) return std::nullopt;  // pivot in the constant column

    std::vector<char> is_pivot(n, 0);
    for (size_t c : r.pivots) is_pivot[c] = 1;

    AffineSolution sol;
    sol.particular.assign(n, 0);
    for (size_t i = 0; i < r.rank; ++i) sol.particular[r.pivots[i]] = r.mat.at(i, n);

    for (size_t c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        Row k(n, 0);
        k[c] = 1;
        for (size_t i = 0; i < r.rank; ++i)
            k[r.pivots[i]] = (p - r.mat.at(i, c)) % p;
        sol.kernel.push_back(std::move(k));
    }
    return sol;
}

std::vector<Row> kernel_fp(const ResidueMatrix& a) {
    Row zero(a.rows(), 0);
    auto sol = solve_affine_fp(a, zero);
    return sol->kernel;  // homogeneous system is always consistent
}

}  // namespace zp2
