#include "zp2/census.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <sstream>

namespace zp2 {

Bigint gaussian(size_t n, size_t k, uint32_t p) {
    if (k > n) throw DomainError("gaussian coefficient needs k <= n");
    Bigint num = 1, den = 1;
    Bigint pn = bigint_pow(p, n), pk = bigint_pow(p, k);
    Bigint pi = 1;
    for (size_t i = 0; i < k; ++i) {
        num *= pn - pi;
        den *= pk - pi;
        pi *= p;
    }
    Bigint q, r;
    boost::multiprecision::divide_qr(num, den, q, r);
    if (r != 0) throw ConsistencyError("gaussian coefficient division not exact");
    return q;
}

void enumerate_rref_bases(uint32_t p, size_t n, size_t k,
                          const std::function<void(const ResidueMatrix&)>& visit) {
    if (k > n) throw DomainError("enumerate_rref_bases needs k <= n");
    if (k == 0) {
        visit(ResidueMatrix(Modulus::field(p), 0, n));
        return;
    }
    std::vector<size_t> pivots(k);
    std::function<void(size_t, size_t)> choose = [&](size_t idx, size_t start) {
        if (idx == k) {
            std::vector<char> is_piv(n, 0);
            for (size_t c : pivots) is_piv[c] = 1;
            std::vector<std::pair<size_t, size_t>> free_pos;
            for (size_t i = 0; i < k; ++i)
                for (size_t c = pivots[i] + 1; c < n; ++c)
                    if (!is_piv[c]) free_pos.emplace_back(i, c);

            ResidueMatrix m(Modulus::field(p), k, n);
            for (size_t i = 0; i < k; ++i) m.set(i, pivots[i], 1);
            std::vector<uint32_t> fill(free_pos.size(), 0);
            while (true) {
                visit(m);
                size_t t = fill.size();
                while (t > 0 && ++fill[t - 1] == p) {
                    fill[t - 1] = 0;
                    m.set(free_pos[t - 1].first, free_pos[t - 1].second, 0);
                    --t;
                }
                if (t == 0) break;
                m.set(free_pos[t - 1].first, free_pos[t - 1].second, fill[t - 1]);
            }
            return;
        }
        for (size_t c = start; c + (k - idx) <= n; ++c) {
            pivots[idx] = c;
            choose(idx + 1, c + 1);
        }
    };
    choose(0, 0);
}

// ---------------------------------------------------------------------------
// sigma counters

namespace {

bool rref_self_orthogonal(const ResidueMatrix& m) {
    const uint32_t p = m.mod().p;
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = i; j < m.rows(); ++j) {
            uint64_t dot = 0;
            for (size_t c = 0; c < m.cols(); ++c) dot += uint64_t(m.at(i, c)) * m.at(j, c);
            if (dot % p != 0) return false;
        }
    return true;
}

bool rref_doubly_even(const ResidueMatrix& m) {
    for (size_t i = 0; i < m.rows(); ++i) {
        uint64_t wt = 0;
        for (size_t c = 0; c < m.cols(); ++c) wt += m.at(i, c);
        if (wt % 4 != 0) return false;
    }
    return rref_self_orthogonal(m);
}

bool rref_contains_ones(const ResidueMatrix& m) {
    Row x = howell_reduce(m, Row(m.cols(), 1));
    return std::all_of(x.begin(), x.end(), [](uint32_t v) { return v == 0; });
}

bool fp_family_matches(const ResidueMatrix& m, FpFamily f) {
    switch (f) {
        case FpFamily::All:
            return true;
        case FpFamily::SelfOrthogonal:
            return rref_self_orthogonal(m);
        case FpFamily::DoublyEven:
            return rref_doubly_even(m);
        case FpFamily::DoublyEvenWithOne:
            return rref_doubly_even(m) && rref_contains_ones(m);
    }
    return false;
}

std::mutex sigma_mutex;
std::map<std::tuple<uint32_t, size_t, size_t, int>, Bigint> sigma_cache;

Bigint sigma_sweep(uint32_t p, size_t n, size_t k, FpFamily family) {
    const auto key = std::make_tuple(p, n, k, static_cast<int>(family));
    {
        std::lock_guard<std::mutex> lk(sigma_mutex);
        auto it = sigma_cache.find(key);
        if (it != sigma_cache.end()) return it->second;
    }
    uint64_t count = 0;
    enumerate_rref_bases(p, n, k, [&](const ResidueMatrix& m) {
        if (fp_family_matches(m, family)) ++count;
    });
    Bigint out = count;
    std::lock_guard<std::mutex> lk(sigma_mutex);
    sigma_cache.emplace(key, out);
    return out;
}

}  // namespace

Bigint sigma_p(size_t n, size_t k, uint32_t p) {
    if (p == 2 || !is_prime_u32(p)) throw DomainError("sigma_p needs an odd prime");
    if (2 * k > n) throw DomainError("sigma_p needs k <= n/2");
    return sigma_sweep(p, n, k, FpFamily::SelfOrthogonal);
}

Bigint sigma_de(size_t n, size_t k) {
    if (2 * k > n) throw DomainError("sigma_de needs k <= n/2");
    return sigma_sweep(2, n, k, FpFamily::DoublyEven);
}

Bigint sigma_one(size_t n, size_t k) {
    if (2 * k > n) throw DomainError("sigma_one needs k <= n/2");
    return sigma_sweep(2, n, k, FpFamily::DoublyEvenWithOne);
}

std::vector<FpCode> enumerate_fp_codes(uint32_t p, size_t n, size_t k, FpFamily family) {
    std::vector<FpCode> out;
    enumerate_rref_bases(p, n, k, [&](const ResidueMatrix& m) {
        if (fp_family_matches(m, family)) out.push_back(FpCode::from_matrix(m));
    });
    return out;
}

// ---------------------------------------------------------------------------
// Mass formulas

namespace {

Bigint power_term(uint32_t p, long long twice_expo) {
    if (twice_expo % 2 != 0) throw ConsistencyError("odd doubled exponent in a mass formula");
    long long expo = twice_expo / 2;
    if (expo < 0) throw ConsistencyError("negative exponent in a mass formula");
    return bigint_pow(p, static_cast<uint64_t>(expo));
}

}  // namespace

MassReport mass_so(size_t n, size_t k1, size_t k2, uint32_t p) {
    MassReport r;
    r.family = "self-orthogonal";
    r.p = p;
    r.n = n;
    r.k1 = k1;
    r.k2 = k2;
    if (2 * k1 > n || k1 + k2 > n - k1) {
        r.value = 0;
        r.note = "infeasible type";
        return r;
    }
    Bigint sigma = (p == 2) ? sigma_de(n, k1) : sigma_p(n, k1, p);
    Bigint g = gaussian(n - 2 * k1, k2, p);
    long long nn = static_cast<long long>(n), a = static_cast<long long>(k1),
              b = static_cast<long long>(k2);
    long long twice = (p == 2) ? a * (2 * nn - 3 * a + 1 - 2 * b) : a * (2 * nn - 3 * a - 1 - 2 * b);
    r.value = sigma * g * power_term(p, twice);
    return r;
}

MassReport mass_self_dual(size_t n, uint32_t p) {
    MassReport r;
    r.family = "self-dual";
    r.p = p;
    r.n = n;
    r.value = 0;
    for (size_t k1 = 0; 2 * k1 <= n; ++k1) {
        MassReport term = mass_so(n, k1, n - 2 * k1, p);
        r.breakdown.push_back({k1, n - 2 * k1, term.value});
        r.value += term.value;
    }
    return r;
}

MassReport mass_even_one(size_t n, size_t k1, size_t k2) {
    if (n % 8 != 0)
        throw DomainError("even codes with +-1 words require length divisible by 8");
    MassReport r;
    r.family = "even-with-one";
    r.p = 2;
    r.n = n;
    r.k1 = k1;
    r.k2 = k2;
    if (k1 == 0) {
        r.value = 0;
        r.note = "containment of the all-ones vector forces k1 >= 1";
        return r;
    }
    if (2 * k1 > n || k1 + k2 > n - k1) {
        r.value = 0;
        r.note = "infeasible type";
        return r;
    }
    long long nn = static_cast<long long>(n), a = static_cast<long long>(k1),
              b = static_cast<long long>(k2);
    r.value = sigma_one(n, k1) * gaussian(n - 2 * k1, k2, 2) *
              power_term(2, (a - 1) * (2 * nn - 3 * a - 2 - 2 * b));
    return r;
}

MassReport mass_even_pm1(size_t n, size_t k1, size_t k2) {
    MassReport r = mass_even_one(n, k1, k2);
    r.family = "even-with-pm1";
    if (r.value != 0) {
        r.value <<= (n - k1 - k2);
    }
    return r;
}

MassReport mass_type2(size_t n, With with) {
    if (n % 8 != 0)
        throw DomainError("Type II codes require length divisible by 8");
    MassReport r;
    r.family = (with == With::One) ? "type2-one" : "type2-pm1";
    r.p = 2;
    r.n = n;
    r.value = 0;
    for (size_t k1 = 0; 2 * k1 <= n; ++k1) {
        size_t k2 = n - 2 * k1;
        MassReport term =
            (with == With::One) ? mass_even_one(n, k1, k2) : mass_even_pm1(n, k1, k2);
        r.breakdown.push_back({k1, k2, term.value});
        r.value += term.value;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Report formatting

std::string MassReport::to_json() const {
    nlohmann::ordered_json j;
    j["family"] = family;
    j["p"] = p;
    j["n"] = n;
    j["k1"] = k1 ? nlohmann::ordered_json(*k1) : nlohmann::ordered_json(nullptr);
    j["k2"] = k2 ? nlohmann::ordered_json(*k2) : nlohmann::ordered_json(nullptr);
    j["value"] = to_decimal(value);
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& t : breakdown) {
        nlohmann::ordered_json e;
        e["k1"] = t.k1;
        e["k2"] = t.k2;
        e["term"] = to_decimal(t.term);
        terms.push_back(e);
    }
    j["breakdown"] = terms;
    if (!note.empty()) j["note"] = note;
    return j.dump();
}

std::string MassReport::to_tsv() const {
    std::ostringstream os;
    os << "family\tp\tn\tk1\tk2\tvalue\n";
    os << family << '\t' << p << '\t' << n << '\t';
    if (k1)
        os << *k1;
    else
        os << '*';
    os << '\t';
    if (k2)
        os << *k2;
    else
        os << '*';
    os << '\t' << to_decimal(value) << '\n';
    for (const auto& t : breakdown)
        os << family << ":term\t" << p << '\t' << n << '\t' << t.k1 << '\t' << t.k2 << '\t'
           << to_decimal(t.term) << '\n';
    return os.str();
}

std::string MassReport::to_text() const {
    std::ostringstream os;
    os << family << " mass, p = " << p << ", n = " << n;
    if (k1 && k2) os << ", type {" << *k1 << ", " << *k2 << "}";
    os << ": " << to_decimal(value) << '\n';
    for (const auto& t : breakdown)
        os << "  type {" << t.k1 << ", " << t.k2 << "}: " << to_decimal(t.term) << '\n';
    if (!note.empty()) os << "  note: " << note << '\n';
    return os.str();
}

// ---------------------------------------------------------------------------
// Howell-form sweep oracle

namespace {

struct SweepStructure {
    std::vector<size_t> cols;      // strictly increasing pivot columns
    std::vector<uint32_t> vals;    // 0 => pivot 1, 1 => pivot p
};

bool closure_ok(const std::vector<Row>& rows, const SweepStructure& st, uint32_t p,
                uint32_t m, size_t n) {
    for (size_t i = 0; i < rows.size(); ++i) {
        if (st.vals[i] == 0) continue;  // p * row reduces against the row itself
        Row w(n);
        for (size_t c = 0; c < n; ++c) w[c] = static_cast<uint32_t>(uint64_t(p) * rows[i][c] % m);
        for (size_t j = i + 1; j < rows.size(); ++j) {
            size_t c = st.cols[j];
            uint32_t d = rows[j][c];
            uint64_t q = w[c] / d;
            if (!q) continue;
            for (size_t t = c; t < n; ++t) {
                uint64_t sub = q * rows[j][t] % m;
                w[t] = static_cast<uint32_t>((w[t] + m - sub) % m);
            }
        }
        if (!std::all_of(w.begin(), w.end(), [](uint32_t v) { return v == 0; })) return false;
    }
    return true;
}

}  // namespace

bool OracleBudget::allows(uint32_t p, size_t n) const {
    auto it = max_n.find(p);
    if (it != max_n.end()) return n <= it->second;
    return bigint_pow(p, 2 * n) <= max_weight;
}

OracleBudget OracleBudget::from_env_or_default() {
    OracleBudget b;
    if (const char* env = std::getenv("ZP2CODES_BUDGET")) {
        std::istringstream is{std::string(env)};
        std::string item;
        while (std::getline(is, item, ',')) {
            auto eq = item.find('=');
            if (eq == std::string::npos) continue;
            std::string key = item.substr(0, eq), val = item.substr(eq + 1);
            if (key == "oracle.weight") {
                b.max_weight = Bigint(val);
            } else if (key.size() > 8 && key.rfind("oracle.p", 0) == 0) {
                uint32_t p = static_cast<uint32_t>(std::stoul(key.substr(8)));
                b.max_n[p] = std::stoul(val);
            }
        }
    }
    return b;
}

void oracle_enumerate(uint32_t p, size_t n, OracleFamily family,
                      const std::function<void(const CodeZp2&)>& visit,
                      const OracleBudget& budget, const TypeFilter& filter) {
    if (family == OracleFamily::Even || family == OracleFamily::EvenWithOne ||
        family == OracleFamily::EvenWithPm1) {
        if (p != 2) throw DomainError("even families are quaternary");
    }
    if (!budget.allows(p, n))
        throw BudgetError("oracle sweep refused at p = " + std::to_string(p) + ", n = " +
                          std::to_string(n) + ": ambient weight p^(2n) = " +
                          to_decimal(bigint_pow(p, 2 * n)) + " is past the configured budget");

    const Modulus mod = Modulus::square(p);
    const uint32_t m = mod.m;
    Row ones(n, 1);

    auto emit = [&](const std::vector<Row>& rows, const SweepStructure& st) {
        if (!closure_ok(rows, st, p, m, n)) return;
        ResidueMatrix cand = ResidueMatrix::from_urows(mod, rows, n);
        CodeZp2 code = CodeZp2::from_matrix(cand);
        if (!(code.generators() == cand))
            throw ConsistencyError("sweep candidate was not in Howell form");
        if (!filter.matches(code)) return;
        switch (family) {
            case OracleFamily::All:
                break;
            case OracleFamily::SelfOrthogonal:
                if (!code.is_self_orthogonal()) return;
                break;
            case OracleFamily::SelfDual:
                if (!code.is_self_dual()) return;
                break;
            case OracleFamily::Even:
                if (!is_even(code)) return;
                break;
            case OracleFamily::EvenWithOne:
                if (!is_even(code) || !code.contains(ones)) return;
                break;
            case OracleFamily::EvenWithPm1:
                if (!is_even(code) || !contains_pm1(code)) return;
                break;
        }
        visit(code);
    };

    // fill the variable entries of one pivot structure
    auto sweep_structure = [&](const SweepStructure& st) {
        const size_t t = st.cols.size();
        std::vector<Row> rows(t, Row(n, 0));
        std::vector<char> pivot_at(n, 0);
        std::vector<size_t> pivot_row(n, 0);
        for (size_t i = 0; i < t; ++i) {
            rows[i][st.cols[i]] = st.vals[i] ? p : 1;
            pivot_at[st.cols[i]] = 1;
            pivot_row[st.cols[i]] = i;
        }
        struct Slot {
            size_t row, col;
            uint32_t radix;
        };
        std::vector<Slot> slots;
        for (size_t i = 0; i < t; ++i)
            for (size_t c = st.cols[i] + 1; c < n; ++c) {
                if (pivot_at[c]) {
                    size_t j = pivot_row[c];
                    if (j > i && st.vals[j] == 1) slots.push_back({i, c, p});
                    // entries above a unit pivot are fully reduced: stay 0
                } else {
                    slots.push_back({i, c, m});
                }
            }
        std::vector<uint32_t> fill(slots.size(), 0);
        while (true) {
            emit(rows, st);
            size_t s = slots.size();
            while (s > 0 && ++fill[s - 1] == slots[s - 1].radix) {
                fill[s - 1] = 0;
                rows[slots[s - 1].row][slots[s - 1].col] = 0;
                --s;
            }
            if (s == 0) break;
            rows[slots[s - 1].row][slots[s - 1].col] = fill[s - 1];
        }
    };

    // all pivot structures: each column carries no pivot, a unit pivot, or
    // a pivot divisible by p
    SweepStructure st;
    std::function<void(size_t)> rec = [&](size_t col) {
        if (col == n) {
            sweep_structure(st);
            return;
        }
        rec(col + 1);
        st.cols.push_back(col);
        st.vals.push_back(0);
        rec(col + 1);
        st.vals.back() = 1;
        rec(col + 1);
        st.cols.pop_back();
        st.vals.pop_back();
    };
    rec(0);
}

std::vector<CodeZp2> oracle_collect(uint32_t p, size_t n, OracleFamily family,
                                    const OracleBudget& budget, const TypeFilter& filter) {
    std::vector<CodeZp2> out;
    oracle_enumerate(p, n, family, [&out](const CodeZp2& c) { out.push_back(c); }, budget, filter);
    std::sort(out.begin(), out.end(),
              [](const CodeZp2& x, const CodeZp2& y) { return x.lex_less(y); });
    return out;
}

}  // namespace zp2
