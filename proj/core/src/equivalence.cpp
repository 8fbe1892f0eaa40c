#include "zp2/equivalence.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "zp2/lifting.hpp"

namespace zp2 {

// ---------------------------------------------------------------------------
// Group elements

SignedMonomial SignedMonomial::identity(size_t n) {
    SignedMonomial g;
    g.perm.resize(n);
    g.signs.assign(n, 1);
    for (size_t i = 0; i < n; ++i) g.perm[i] = static_cast<uint32_t>(i);
    return g;
}

SignedMonomial SignedMonomial::random(size_t n, std::mt19937_64& rng) {
    SignedMonomial g = identity(n);
    for (size_t i = n; i > 1; --i) std::swap(g.perm[i - 1], g.perm[rng() % i]);
    for (auto& s : g.signs) s = (rng() & 1) ? int8_t(1) : int8_t(-1);
    return g;
}

SignedMonomial SignedMonomial::after(const SignedMonomial& first) const {
    if (length() != first.length()) throw ShapeError("composing monomials of different length");
    SignedMonomial out = identity(length());
    for (size_t i = 0; i < length(); ++i) {
        uint32_t mid = first.perm[i];
        uint32_t end = perm[mid];
        out.perm[i] = end;
        out.signs[end] = static_cast<int8_t>(signs[end] * first.signs[mid]);
    }
    return out;
}

SignedMonomial SignedMonomial::inverse() const {
    SignedMonomial out = identity(length());
    for (size_t i = 0; i < length(); ++i) {
        out.perm[perm[i]] = static_cast<uint32_t>(i);
        out.signs[i] = signs[perm[i]];
    }
    return out;
}

Row apply_word(const SignedMonomial& g, const Row& w, uint32_t modulus) {
    if (g.length() != w.size()) throw ShapeError("monomial length != word length");
    Row out(w.size());
    for (size_t i = 0; i < w.size(); ++i) {
        uint32_t v = w[i] % modulus;
        out[g.perm[i]] = (g.signs[g.perm[i]] == 1) ? v : (modulus - v) % modulus;
    }
    return out;
}

CodeZp2 apply(const SignedMonomial& g, const CodeZp2& c) {
    if (g.length() != c.length()) throw ShapeError("monomial length != code length");
    const uint32_t m = c.prime() * c.prime();
    std::vector<Row> rows;
    for (size_t i = 0; i < c.generators().rows(); ++i)
        rows.push_back(apply_word(g, c.generators().row(i), m));
    return CodeZp2::from_matrix(
        ResidueMatrix::from_urows(Modulus::square(c.prime()), rows, c.length()));
}

Bigint monomial_group_order(size_t n) { return bigint_pow(2, n) * factorial(n); }

EquivBudget EquivBudget::from_env_or_default() {
    EquivBudget b;
    if (const char* env = std::getenv("ZP2CODES_BUDGET")) {
        std::istringstream is{std::string(env)};
        std::string item;
        while (std::getline(is, item, ',')) {
            auto eq = item.find('=');
            if (eq == std::string::npos) continue;
            std::string key = item.substr(0, eq), val = item.substr(eq + 1);
            if (key == "aut") b.max_n = std::stoul(val);
            if (key == "codewords") b.max_codewords = std::stoull(val);
        }
    }
    return b;
}

// ---------------------------------------------------------------------------
// Sign stabilizer: the masks t with C . diag((-1)^t) = C form an F_2
// subspace of {0,1}^n; it is computed by direct scan and kept as a binary
// RREF basis so coset representatives are canonical.

namespace {

ResidueMatrix negate_columns_mat(const ResidueMatrix& g, uint32_t mask) {
    const uint32_t m = g.mod().m;
    ResidueMatrix out = g;
    for (size_t j = 0; j < g.cols(); ++j) {
        if (!((mask >> j) & 1)) continue;
        for (size_t i = 0; i < g.rows(); ++i) out.set(i, j, (m - g.at(i, j)) % m);
    }
    return out;
}

struct SignStabilizer {
    std::vector<uint32_t> basis;      // binary RREF by leading (highest) bit
    uint64_t size = 1;
    std::vector<uint32_t> coset_reps;  // canonical representatives, ascending

    uint32_t reduce(uint32_t mask) const {
        for (uint32_t b : basis) {
            uint32_t lead = 31u - static_cast<uint32_t>(__builtin_clz(b));
            if ((mask >> lead) & 1) mask ^= b;
        }
        return mask;
    }
};

SignStabilizer sign_stabilizer(const CodeZp2& c) {
    const size_t n = c.length();
    const std::string self = c.generators().key();
    SignStabilizer st;
    uint64_t valid = 0;
    for (uint32_t mask = 0; mask < (uint32_t(1) << n); ++mask) {
        bool ok;
        if (mask == 0) {
            ok = true;
        } else {
            ok = howell_form(negate_columns_mat(c.generators(), mask)).key() == self;
        }
        if (!ok) continue;
        ++valid;
        uint32_t r = st.reduce(mask);
        if (r) {
            st.basis.push_back(r);
            std::sort(st.basis.begin(), st.basis.end(), std::greater<uint32_t>());
        }
    }
    st.size = uint64_t(1) << st.basis.size();
    if (st.size != valid)
        throw ConsistencyError("sign stabilizer is not closed under composition");
    for (uint32_t mask = 0; mask < (uint32_t(1) << n); ++mask)
        if (st.reduce(mask) == mask) st.coset_reps.push_back(mask);
    return st;
}

// ---------------------------------------------------------------------------
// Permutation backtracking with partition refinement.  Columns are matched
// source-by-source against target columns; codewords of both codes are
// partitioned by their value patterns up to sign, and a candidate dies as
// soon as the partitions disagree.  Full permutations are completed by an
// exact sign search over coset representatives of the target's sign
// stabilizer.

struct MonomialSearch {
    uint32_t m = 0;
    size_t n = 0, nwords = 0;
    std::vector<Row> wc, wd;
    const ResidueMatrix* cgens = nullptr;
    const ResidueMatrix* dgens = nullptr;
    std::string dkey;
    SignStabilizer stab;
    std::vector<uint16_t> valclass;  // v ~ m - v
    bool count_all = true;

    uint64_t found_sigma = 0;
    std::optional<SignedMonomial> witness;

    std::vector<std::vector<uint32_t>> gc, gd;  // group ids per depth
    std::vector<uint32_t> assign;               // source col -> target col
    std::vector<char> used;

    bool refine(size_t depth, size_t tgt) {
        const auto& gcd = gc[depth];
        const auto& gdd = gd[depth];
        std::vector<uint64_t> kc(nwords), kd(nwords);
        for (size_t w = 0; w < nwords; ++w)
            kc[w] = (uint64_t(gcd[w]) << 16) | valclass[wc[w][depth]];
        for (size_t w = 0; w < nwords; ++w)
            kd[w] = (uint64_t(gdd[w]) << 16) | valclass[wd[w][tgt]];
        std::vector<uint64_t> sc = kc, sd = kd;
        std::sort(sc.begin(), sc.end());
        std::sort(sd.begin(), sd.end());
        if (sc != sd) return false;
        std::unordered_map<uint64_t, uint32_t> ids;
        ids.reserve(nwords * 2);
        uint32_t next = 0;
        for (uint64_t k : sc)
            if (ids.emplace(k, next).second) ++next;
        auto& ngc = gc[depth + 1];
        auto& ngd = gd[depth + 1];
        for (size_t w = 0; w < nwords; ++w) ngc[w] = ids[kc[w]];
        for (size_t w = 0; w < nwords; ++w) ngd[w] = ids[kd[w]];
        return true;
    }

    // true when the caller should stop (witness found in find-one mode)
    bool leaf() {
        ResidueMatrix permuted(cgens->mod(), cgens->rows(), n);
        for (size_t i = 0; i < cgens->rows(); ++i)
            for (size_t t = 0; t < n; ++t) permuted.set(i, assign[t], cgens->at(i, t));
        for (uint32_t mask : stab.coset_reps) {
            if (howell_form(negate_columns_mat(permuted, mask)).key() != dkey) continue;
            ++found_sigma;
            if (!count_all) {
                SignedMonomial g = SignedMonomial::identity(n);
                for (size_t t = 0; t < n; ++t) {
                    g.perm[t] = assign[t];
                    g.signs[assign[t]] = ((mask >> assign[t]) & 1) ? int8_t(-1) : int8_t(1);
                }
                witness = g;
                return true;
            }
            break;  // remaining valid signs form one coset of the stabilizer
        }
        return false;
    }

    bool search(size_t depth) {
        if (depth == n) return leaf();
        for (uint32_t tgt = 0; tgt < n; ++tgt) {
            if (used[tgt]) continue;
            if (!refine(depth, tgt)) continue;
            used[tgt] = 1;
            assign[depth] = tgt;
            bool stop = search(depth + 1);
            used[tgt] = 0;
            if (stop) return true;
        }
        return false;
    }
};

std::vector<Row> collect_words(const CodeZp2& c, uint64_t limit) {
    std::vector<Row> words;
    c.codewords(
        [&words](const Row& w) {
            words.push_back(w);
            return true;
        },
        limit);
    return words;
}

// Invariant key of a word: the sorted multiset of its entry classes up to
// sign.  Monomial transformations permute entries and flip signs, so equal
// codes have equal key distributions.
Row word_invariant_key(const Row& w, uint32_t m) {
    Row key(w.size());
    for (size_t i = 0; i < w.size(); ++i) key[i] = std::min(w[i], (m - w[i]) % m);
    std::sort(key.begin(), key.end());
    return key;
}

// The refinement does not need every codeword: any union of whole
// invariant-key classes keeps the search sound, because automorphisms map
// each class onto itself.  Large codes keep only the leading classes.
constexpr size_t kSearchWordCap = 2048;

std::map<Row, std::vector<Row>> group_words(const std::vector<Row>& words, uint32_t m) {
    std::map<Row, std::vector<Row>> groups;
    for (const Row& w : words) groups[word_invariant_key(w, m)].push_back(w);
    return groups;
}

std::vector<Row> select_search_words(const std::map<Row, std::vector<Row>>& groups) {
    std::vector<Row> out;
    for (const auto& [key, members] : groups) {
        if (!out.empty() && out.size() + members.size() > kSearchWordCap) break;
        out.insert(out.end(), members.begin(), members.end());
    }
    return out;
}

uint64_t run_search(MonomialSearch& s) {
    s.valclass.resize(s.m);
    for (uint32_t v = 0; v < s.m; ++v)
        s.valclass[v] = static_cast<uint16_t>(std::min(v, (s.m - v) % s.m));
    s.nwords = s.wc.size();
    s.gc.assign(s.n + 1, std::vector<uint32_t>(s.nwords, 0));
    s.gd.assign(s.n + 1, std::vector<uint32_t>(s.nwords, 0));
    s.assign.assign(s.n, 0);
    s.used.assign(s.n, 0);
    s.search(0);
    return s.found_sigma;
}

}  // namespace

uint64_t aut_order(const CodeZp2& c, const EquivBudget& budget) {
    const size_t n = c.length();
    if (n > budget.max_n)
        throw BudgetError("automorphism search refused at n = " + std::to_string(n) +
                          ": |E| = " + to_decimal(monomial_group_order(n)) +
                          " is past the configured budget");
    MonomialSearch s;
    s.m = c.prime() * c.prime();
    s.n = n;
    s.wc = select_search_words(group_words(collect_words(c, budget.max_codewords), s.m));
    s.wd = s.wc;
    s.cgens = &c.generators();
    s.dgens = &c.generators();
    s.dkey = c.generators().key();
    s.stab = sign_stabilizer(c);
    s.count_all = true;
    uint64_t sigma = run_search(s);
    return sigma * s.stab.size;
}

std::optional<SignedMonomial> are_equivalent(const CodeZp2& c, const CodeZp2& d,
                                             const EquivBudget& budget) {
    if (c.prime() != d.prime() || c.length() != d.length())
        throw DomainError("are_equivalent: mismatched parameters");
    const size_t n = c.length();
    if (n > budget.max_n)
        throw BudgetError("equivalence search refused at n = " + std::to_string(n) +
                          ": |E| = " + to_decimal(monomial_group_order(n)) +
                          " is past the configured budget");
    if (c.k1() != d.k1() || c.k2() != d.k2()) return std::nullopt;  // type is invariant

    MonomialSearch s;
    s.m = c.prime() * c.prime();
    s.n = n;
    auto groups_c = group_words(collect_words(c, budget.max_codewords), s.m);
    auto groups_d = group_words(collect_words(d, budget.max_codewords), s.m);
    // the invariant-key distribution is itself an invariant
    if (groups_c.size() != groups_d.size()) return std::nullopt;
    for (auto itc = groups_c.begin(), itd = groups_d.begin(); itc != groups_c.end();
         ++itc, ++itd)
        if (itc->first != itd->first || itc->second.size() != itd->second.size())
            return std::nullopt;
    s.wc = select_search_words(groups_c);
    s.wd = select_search_words(groups_d);
    s.cgens = &c.generators();
    s.dgens = &d.generators();
    s.dkey = d.generators().key();
    s.stab = sign_stabilizer(d);
    s.count_all = false;
    run_search(s);
    if (s.witness) {
        if (!(apply(*s.witness, c) == d))
            throw ConsistencyError("equivalence witness fails to map the codes");
    }
    return s.witness;
}

// ---------------------------------------------------------------------------
// Families and classification

const char* family_name(ClassFamily f) {
    switch (f) {
        case ClassFamily::SelfOrthogonal: return "self-orthogonal";
        case ClassFamily::SelfDual: return "self-dual";
        case ClassFamily::EvenOne: return "even-with-one";
        case ClassFamily::EvenPm1: return "even-with-pm1";
        case ClassFamily::Type2One: return "type2-one";
        case ClassFamily::Type2Pm1: return "type2-pm1";
    }
    return "?";
}

ClassFamily parse_family(const std::string& name) {
    if (name == "so" || name == "self-orthogonal") return ClassFamily::SelfOrthogonal;
    if (name == "self-dual" || name == "sd") return ClassFamily::SelfDual;
    if (name == "even-one" || name == "even-with-one") return ClassFamily::EvenOne;
    if (name == "even-pm1" || name == "even-with-pm1") return ClassFamily::EvenPm1;
    if (name == "type2-one") return ClassFamily::Type2One;
    if (name == "type2-pm1") return ClassFamily::Type2Pm1;
    throw DomainError("unknown family: " + name);
}

namespace {

bool family_sign_closed(ClassFamily f) {
    return f == ClassFamily::SelfOrthogonal || f == ClassFamily::SelfDual ||
           f == ClassFamily::EvenPm1 || f == ClassFamily::Type2Pm1;
}

void append_lifts(std::vector<CodeZp2>& out, ClassFamily f, const FpCode& c1,
                  const FpCode& c2) {
    switch (f) {
        case ClassFamily::SelfOrthogonal:
        case ClassFamily::SelfDual:
            so_lifts(c1, c2).for_each_code([&out](const CodeZp2& c) { out.push_back(c); });
            break;
        case ClassFamily::EvenOne:
        case ClassFamily::Type2One:
            even_lifts_with_one(c1, c2).for_each_code(
                [&out](const CodeZp2& c) { out.push_back(c); });
            break;
        case ClassFamily::EvenPm1:
        case ClassFamily::Type2Pm1: {
            auto codes = even_lifts_with_pm1(c1, c2);
            out.insert(out.end(), codes.begin(), codes.end());
            break;
        }
    }
}

}  // namespace

std::vector<CodeZp2> build_family(uint32_t p, size_t n, ClassFamily family,
                                  std::optional<size_t> k1, std::optional<size_t> k2) {
    const bool even_kind = family == ClassFamily::EvenOne || family == ClassFamily::EvenPm1 ||
                           family == ClassFamily::Type2One || family == ClassFamily::Type2Pm1;
    if (even_kind && p != 2) throw DomainError("even families are quaternary");

    std::vector<size_t> k1s;
    std::vector<std::optional<size_t>> k2s;
    switch (family) {
        case ClassFamily::SelfOrthogonal:
        case ClassFamily::EvenOne:
        case ClassFamily::EvenPm1:
            if (!k1 || !k2) throw DomainError("this family needs an explicit type {k1, k2}");
            k1s = {*k1};
            k2s = {*k2};
            break;
        case ClassFamily::SelfDual:
            if (k1) {
                k1s = {*k1};
            } else {
                for (size_t a = 0; 2 * a <= n; ++a) k1s.push_back(a);
            }
            k2s.assign(k1s.size(), std::nullopt);  // k2 = n - 2 k1
            break;
        case ClassFamily::Type2One:
        case ClassFamily::Type2Pm1:
            if (k1 || k2) throw DomainError("Type II classifications cover all types");
            for (size_t a = 0; 2 * a <= n; ++a) k1s.push_back(a);
            k2s.assign(k1s.size(), std::nullopt);
            break;
    }

    FpFamily residue_family;
    if (even_kind)
        residue_family = FpFamily::DoublyEvenWithOne;
    else
        residue_family = (p == 2) ? FpFamily::DoublyEven : FpFamily::SelfOrthogonal;

    std::vector<CodeZp2> out;
    for (size_t idx = 0; idx < k1s.size(); ++idx) {
        size_t a = k1s[idx];
        size_t b = k2s[idx] ? *k2s[idx] : n - 2 * a;
        if (a + b > n - a) continue;
        if (even_kind && a == 0) continue;  // the all-ones vector forces k1 >= 1
        for (const FpCode& c1 : enumerate_fp_codes(p, n, a, residue_family))
            for (const FpCode& c2 : intermediate_codes(c1, b)) append_lifts(out, family, c1, c2);
    }
    std::sort(out.begin(), out.end(),
              [](const CodeZp2& x, const CodeZp2& y) { return x.lex_less(y); });
    for (size_t i = 1; i < out.size(); ++i)
        if (out[i] == out[i - 1])
            throw ConsistencyError("family enumeration produced a duplicate code");
    return out;
}

ClassificationResult classify(uint32_t p, size_t n, ClassFamily family,
                              std::optional<size_t> k1, std::optional<size_t> k2,
                              const EquivBudget& budget) {
    if (n > budget.max_n)
        throw BudgetError("classification refused at n = " + std::to_string(n) +
                          ": |E| = " + to_decimal(monomial_group_order(n)) +
                          " is past the configured budget");

    ClassificationResult res;
    res.family = family_name(family);
    res.p = p;
    res.n = n;
    res.k1 = k1;
    res.k2 = k2;

    std::vector<CodeZp2> fam = build_family(p, n, family, k1, k2);
    res.family_size = fam.size();

    std::unordered_map<std::string, size_t> family_index;
    for (size_t i = 0; i < fam.size(); ++i) family_index.emplace(fam[i].canonical_key(), i);

    const bool closed = family_sign_closed(family);
    const Bigint e_order = monomial_group_order(n);
    const Row ones(n, 1);

    // generators of E: adjacent transpositions and one sign flip
    std::vector<SignedMonomial> gens;
    for (size_t i = 0; i + 1 < n; ++i) {
        SignedMonomial g = SignedMonomial::identity(n);
        g.perm[i] = static_cast<uint32_t>(i + 1);
        g.perm[i + 1] = static_cast<uint32_t>(i);
        gens.push_back(g);
    }
    if (n > 0) {
        SignedMonomial g = SignedMonomial::identity(n);
        g.signs[0] = -1;
        gens.push_back(g);
    }

    std::unordered_set<std::string> visited;
    res.mass_sum = 0;
    Bigint family_covered = 0;

    for (const CodeZp2& start : fam) {
        if (visited.count(start.canonical_key())) continue;

        std::deque<CodeZp2> queue{start};
        std::unordered_set<std::string> orbit_keys{start.canonical_key()};
        visited.insert(start.canonical_key());
        CodeZp2 rep = start;
        Bigint in_family = 0;

        while (!queue.empty()) {
            CodeZp2 cur = std::move(queue.front());
            queue.pop_front();
            bool member = closed ? family_index.count(cur.canonical_key()) > 0
                                 : cur.contains(ones);
            if (closed && !member)
                throw ConsistencyError("orbit left a sign-closed family");
            if (member) ++in_family;

            if (cur.lex_less(rep)) rep = cur;
            for (const SignedMonomial& g : gens) {
                CodeZp2 next = apply(g, cur);
                std::string key = next.canonical_key();
                if (orbit_keys.insert(key).second) {
                    visited.insert(key);
                    queue.push_back(next);
                }
            }
        }

        ClassRep cls;
        cls.code = rep;
        cls.class_size = orbit_keys.size();
        cls.aut_order = aut_order(rep, budget);
        cls.in_family = in_family;
        if (Bigint(cls.aut_order) * cls.class_size != e_order)
            throw ConsistencyError("orbit size times automorphism order differs from |E|");

        Bigint weight = closed ? e_order
                               : factorial(n) * bigint_pow(2, rep.k1() + rep.k2());
        Rational term(weight, Bigint(cls.aut_order));
        if (Rational(cls.in_family) != term)
            throw ConsistencyError("family members per class differ from weight/|Aut|");
        res.mass_sum += term;
        family_covered += in_family;
        res.representatives.push_back(std::move(cls));
    }

    if (family_covered != res.family_size)
        throw ConsistencyError("orbit partition does not cover the family");

    switch (family) {
        case ClassFamily::SelfOrthogonal:
            res.expected_mass = mass_so(n, *k1, *k2, p).value;
            break;
        case ClassFamily::SelfDual:
            res.expected_mass =
                k1 ? mass_so(n, *k1, n - 2 * *k1, p).value : mass_self_dual(n, p).value;
            break;
        case ClassFamily::EvenOne:
            res.expected_mass = mass_even_one(n, *k1, *k2).value;
            break;
        case ClassFamily::EvenPm1:
            res.expected_mass = mass_even_pm1(n, *k1, *k2).value;
            break;
        case ClassFamily::Type2One:
            res.expected_mass = mass_type2(n, With::One).value;
            break;
        case ClassFamily::Type2Pm1:
            res.expected_mass = mass_type2(n, With::Pm1).value;
            break;
    }

    if (boost::multiprecision::denominator(res.mass_sum) != 1)
        throw ConsistencyError("mass sum is not an integer");
    res.certified = boost::multiprecision::numerator(res.mass_sum) == res.expected_mass;
    return res;
}

std::string ClassificationResult::to_json() const {
    nlohmann::ordered_json j;
    j["family"] = family;
    j["p"] = p;
    j["n"] = n;
    if (k1 && k2)
        j["type"] = {*k1, *k2};
    else
        j["type"] = "all";
    nlohmann::ordered_json reps = nlohmann::ordered_json::array();
    for (const auto& r : representatives) {
        nlohmann::ordered_json e;
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        const ResidueMatrix& g = r.code.generators();
        for (size_t i = 0; i < g.rows(); ++i) {
            nlohmann::ordered_json row = nlohmann::ordered_json::array();
            for (size_t c = 0; c < g.cols(); ++c) row.push_back(g.at(i, c));
            rows.push_back(row);
        }
        e["rows"] = rows;
        e["aut_order"] = std::to_string(r.aut_order);
        reps.push_back(e);
    }
    j["representatives"] = reps;
    j["mass_sum"] = to_decimal(boost::multiprecision::numerator(mass_sum));
    j["expected_mass"] = to_decimal(expected_mass);
    j["certified"] = certified;
    return j.dump();
}

std::string ClassificationResult::to_tsv() const {
    std::ostringstream os;
    os << "family\tp\tn\tclass\taut_order\tclass_size\tin_family\n";
    for (size_t i = 0; i < representatives.size(); ++i) {
        const auto& r = representatives[i];
        os << family << '\t' << p << '\t' << n << '\t' << i + 1 << '\t' << r.aut_order
           << '\t' << to_decimal(r.class_size) << '\t' << to_decimal(r.in_family) << '\n';
    }
    os << family << ":total\t" << p << '\t' << n << "\t*\t*\t*\t"
       << to_decimal(boost::multiprecision::numerator(mass_sum))
       << (certified ? "\tcertified" : "\tNOT-certified") << '\n';
    return os.str();
}

std::string ClassificationResult::to_text() const {
    std::ostringstream os;
    os << family << " classification, p = " << p << ", n = " << n;
    if (k1 && k2) os << ", type {" << *k1 << ", " << *k2 << "}";
    os << ": " << representatives.size() << " classes\n";
    for (size_t i = 0; i < representatives.size(); ++i) {
        const auto& r = representatives[i];
        os << "class " << i + 1 << ": |Aut| = " << r.aut_order
           << ", orbit size = " << to_decimal(r.class_size) << ", generators:\n";
        const ResidueMatrix& g = r.code.generators();
        for (size_t row = 0; row < g.rows(); ++row) {
            os << "  ";
            for (size_t c = 0; c < g.cols(); ++c) {
                if (c) os << ' ';
                os << g.at(row, c);
            }
            os << '\n';
        }
    }
    os << "mass sum = " << to_decimal(boost::multiprecision::numerator(mass_sum))
       << ", expected = " << to_decimal(expected_mass)
       << (certified ? " (certified)" : " (NOT certified)") << '\n';
    return os.str();
}

}  // namespace zp2
