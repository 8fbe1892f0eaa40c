#include "zp2/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "zp2/lifting.hpp"

namespace zp2 {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

CheckResult finish(const std::string& name, Clock::time_point start, std::string fail,
                   uint64_t comparisons, double limit, const VerifyOptions& opt,
                   const std::string& extra = "") {
    CheckResult r;
    r.name = name;
    r.seconds = elapsed_since(start);
    if (fail.empty() && opt.enforce_time && r.seconds >= limit) {
        fail = "runtime " + std::to_string(r.seconds) + "s exceeded the " +
               std::to_string(limit) + "s limit";
    }
    r.passed = fail.empty();
    if (r.passed) {
        std::ostringstream os;
        os << comparisons << " comparisons";
        if (!extra.empty()) os << "; " << extra;
        r.detail = os.str();
    } else {
        r.detail = fail;
    }
    return r;
}

std::string first_fail(const std::vector<std::string>& fails) {
    for (const auto& f : fails)
        if (!f.empty()) return f;
    return "";
}

Bigint power_half(uint32_t p, long long twice) {
    if (twice < 0 || twice % 2 != 0)
        throw ConsistencyError("bad doubled exponent in a count formula");
    return bigint_pow(p, static_cast<uint64_t>(twice / 2));
}

Bigint free_count_formula(uint32_t p, size_t n, size_t k1) {
    long long a = static_cast<long long>(k1), nn = static_cast<long long>(n);
    return power_half(p, a * (2 * nn - 3 * a + (p == 2 ? 1 : -1)));
}

Bigint so_count_formula(uint32_t p, size_t n, size_t k1, size_t k2) {
    long long a = static_cast<long long>(k1), nn = static_cast<long long>(n),
              b = static_cast<long long>(k2);
    return power_half(p, a * (2 * nn - 3 * a + (p == 2 ? 1 : -1) - 2 * b));
}

Bigint even_one_count_formula(size_t n, size_t k1, size_t k2) {
    long long a = static_cast<long long>(k1), nn = static_cast<long long>(n),
              b = static_cast<long long>(k2);
    return power_half(2, (a - 1) * (2 * nn - 3 * a - 2 - 2 * b));
}

ResidueMatrix random_matrix(std::mt19937_64& rng, uint32_t p, size_t rows, size_t cols) {
    ResidueMatrix m(Modulus::field(p), rows, cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t c = 0; c < cols; ++c) m.set(i, c, static_cast<uint32_t>(rng() % p));
    return m;
}

ResidueMatrix random_full_rank(std::mt19937_64& rng, uint32_t p, size_t m, size_t n) {
    while (true) {
        ResidueMatrix a = random_matrix(rng, p, m, n);
        if (rref_fp(a).rank == m) return a;
    }
}

bool ones_in_rowspace(const ResidueMatrix& a) {
    if (a.cols() == 0) return true;
    RrefResult base = rref_fp(a);
    ResidueMatrix ext = base.mat;
    ext.append_row(Row(a.cols(), 1));
    return rref_fp(ext).rank == base.rank;
}

CodeZp2 adjoin_torsion(const CodeZp2& free_code, const FpCode& c2) {
    const uint32_t p = free_code.prime();
    std::vector<Row> rows;
    for (size_t i = 0; i < free_code.generators().rows(); ++i)
        rows.push_back(free_code.generators().row(i));
    for (size_t i = 0; i < c2.dim(); ++i) {
        Row r = c2.basis().row(i);
        for (auto& v : r) v = (v * p) % (p * p);
        rows.push_back(std::move(r));
    }
    return CodeZp2::from_matrix(
        ResidueMatrix::from_urows(Modulus::square(p), rows, free_code.length()));
}

}  // namespace

// ---------------------------------------------------------------------------
// 1. Worked example: Z9, n = 4, type {1,1}

CheckResult check_worked_example(const VerifyOptions& opt) {
    auto start = Clock::now();
    std::string fail;
    uint64_t comparisons = 0;
    try {
        if (sigma_p(4, 1, 3) != 16) fail = "sigma_3(4,1) != 16";
        ++comparisons;
        if (fail.empty() && gaussian(2, 1, 3) != 4) fail = "[2 1]_3 != 4";
        ++comparisons;
        MassReport m = mass_so(4, 1, 1, 3);
        if (fail.empty() && m.value != 192) fail = "mass(4,{1,1},p=3) = " + to_decimal(m.value);
        ++comparisons;

        ClassificationResult r = classify(3, 4, ClassFamily::SelfOrthogonal, 1, 1);
        if (fail.empty() && r.representatives.size() != 4)
            fail = "expected 4 classes, found " + std::to_string(r.representatives.size());
        std::multiset<uint64_t> orders;
        for (const auto& rep : r.representatives) orders.insert(rep.aut_order);
        if (fail.empty() && orders != std::multiset<uint64_t>{24, 12, 4, 8})
            fail = "automorphism orders differ from {24, 12, 4, 8}";
        if (fail.empty() &&
            boost::multiprecision::numerator(r.mass_sum) != 192)
            fail = "mass sum != 192";
        if (fail.empty() && !r.certified) fail = "classification not certified";
        comparisons += 4;
    } catch (const Error& e) {
        fail = e.what();
    }
    return finish("worked-example classification (Z9, n=4, type {1,1})", start, fail,
                  comparisons, 5.0, opt);
}

// ---------------------------------------------------------------------------
// 2. Oracle sweep vs closed-form counts

CheckResult check_oracle_vs_formula(const VerifyOptions& opt) {
    auto start = Clock::now();
    std::string fail;
    uint64_t comparisons = 0;
    std::vector<std::pair<uint32_t, size_t>> grid;
    size_t n2 = opt.small_grid ? 4 : 5, n3 = opt.small_grid ? 3 : 4;
    for (size_t n = 1; n <= n2; ++n) grid.emplace_back(2, n);
    for (size_t n = 1; n <= n3; ++n) grid.emplace_back(3, n);
    try {
        for (auto [p, n] : grid) {
            std::map<std::pair<size_t, size_t>, Bigint> counts;
            oracle_enumerate(p, n, OracleFamily::SelfOrthogonal,
                             [&counts](const CodeZp2& c) {
                                 counts[{c.k1(), c.k2()}] += 1;
                             });
            for (size_t k1 = 0; 2 * k1 <= n; ++k1)
                for (size_t k2 = 0; k1 + k2 + k1 <= n; ++k2) {
                    Bigint seen = 0;
                    auto it = counts.find({k1, k2});
                    if (it != counts.end()) seen = it->second;
                    Bigint want = mass_so(n, k1, k2, p).value;
                    ++comparisons;
                    if (seen != want) {
                        std::ostringstream os;
                        os << "p=" << p << " n=" << n << " type{" << k1 << "," << k2
                           << "}: oracle " << seen << ", formula " << want;
                        fail = os.str();
                        break;
                    }
                    counts.erase({k1, k2});
                }
            if (!fail.empty()) break;
            if (!counts.empty()) {
                fail = "oracle produced a type the formula grid did not cover";
                break;
            }
        }
    } catch (const Error& e) {
        fail = e.what();
    }
    return finish("oracle sweep vs closed-form counts", start, fail, comparisons, 600.0, opt);
}

// ---------------------------------------------------------------------------
// 3. Self-dual totals

CheckResult check_self_dual_totals(const VerifyOptions& opt) {
    auto start = Clock::now();
    std::string fail;
    uint64_t comparisons = 0;
    std::vector<std::pair<uint32_t, size_t>> grid = {{2, 2}, {2, 4}, {3, 2}, {3, 4}};
    if (opt.small_grid) grid = {{2, 2}, {3, 2}};
    try {
        for (auto [p, n] : grid) {
            uint64_t seen = 0;
            oracle_enumerate(p, n, OracleFamily::SelfDual,
                             [&seen](const CodeZp2&) { ++seen; });
            Bigint want = mass_self_dual(n, p).value;
            ++comparisons;
            if (Bigint(seen) != want) {
                std::ostringstream os;
                os << "p=" << p << " n=" << n << ": oracle " << seen << ", formula " << want;
                fail = os.str();
                break;
            }
        }
    } catch (const Error& e) {
        fail = e.what();
    }
    return finish("self-dual totals vs oracle", start, fail, comparisons, 600.0, opt);
}

// ---------------------------------------------------------------------------
// 4. Free-lift counts

CheckResult check_free_lift_counts(const VerifyOptions& opt) {
    auto start = Clock::now();
    std::string fail;
    uint64_t comparisons = 0;
    std::vector<uint32_t> primes = opt.small_grid ? std::vector<uint32_t>{2, 3}
                                                  : std::vector<uint32_t>{2, 3, 5};
    size_t nmax = opt.small_grid ? 4 : 6;
    try {
        for (uint32_t p : primes) {
            for (size_t n = 1; n <= nmax && fail.empty(); ++n) {
                for (size_t k1 = 0; k1 <= 2 && 2 * k1 <= n && fail.empty(); ++k1) {
                    FpFamily famkind =
                        (p == 2) ? FpFamily::DoublyEven : FpFamily::SelfOrthogonal;
                    std::vector<FpCode> c1s = enumerate_fp_codes(p, n, k1, famkind);
                    Bigint want = free_count_formula(p, n, k1);
                    std::vector<std::string> fails(c1s.size());
                    std::vector<uint64_t> done(c1s.size(), 0);
                    parallel_for(c1s.size(), opt.workers, [&](size_t idx) {
                        const FpCode& c1 = c1s[idx];
                        std::ostringstream os;
                        LiftSolutionSet sol = free_so_lifts(c1);
                        if (sol.count() != want) {
                            os << "p=" << p << " n=" << n << " k1=" << k1 << ": count "
                               << sol.count() << " != " << want;
                            fails[idx] = os.str();
                            return;
                        }
                        std::unordered_set<std::string> keys;
                        std::string bad;
                        sol.for_each_member([&](const ResidueMatrix& nm) {
                            if (!bad.empty()) return;
                            if (!sol.member_satisfies(nm)) {
                                bad = "member fails its congruence";
                                return;
                            }
                            CodeZp2 code = sol.code_for(nm);
                            if (!code.is_self_orthogonal())
                                bad = "free lift not self-orthogonal";
                            else if (!(code.residue() == c1))
                                bad = "free lift residue differs from c1";
                            else if (!(code.torsion() == c1))
                                bad = "free lift torsion differs from c1";
                            else if (!keys.insert(code.canonical_key()).second)
                                bad = "distinct solutions produced the same code";
                        });
                        if (!bad.empty()) {
                            os << "p=" << p << " n=" << n << " k1=" << k1 << ": " << bad;
                            fails[idx] = os.str();
                            return;
                        }
                        done[idx] = 1 + keys.size();
                    });
                    fail = first_fail(fails);
                    for (uint64_t d : done) comparisons += d;
                }
            }
            if (!fail.empty()) break;
        }
    } catch (const Error& e) {
        fail = e.what();
    }
    return finish("free lift counts and membership checks", start, fail, comparisons, 300.0,
                  opt);
}

// ---------------------------------------------------------------------------
// 5. Fiber structure of lifts with torsion

namespace {

// Exhaustive adjoin-tally for one residue code: every free lift must land
// on exactly one enumerated lift, and every enumerated lift must absorb
// exactly p^{k1 k2} free lifts.
std::string fiber_check_one(uint32_t p, size_t n, const FpCode& c1,
                            const std::vector<FpCode>& c2s, uint64_t* comparisons,
                            bool containment_scan) {
    LiftSolutionSet free_set = free_so_lifts(c1);
    std::vector<CodeZp2> free_codes;
    free_set.for_each_member(
        [&](const ResidueMatrix& nm) { free_codes.push_back(free_set.code_for(nm)); });

    for (const FpCode& c2 : c2s) {
        const size_t k1 = c1.dim(), k2 = c2.dim() - k1;
        LiftFamily fam = so_lifts(c1, c2);
        Bigint want = so_count_formula(p, n, k1, k2);
        if (fam.count() != want)
            return "lift count " + to_decimal(fam.count()) + " != " + to_decimal(want);
        std::unordered_map<std::string, uint64_t> tally;
        fam.for_each_code([&tally](const CodeZp2& c) { tally.emplace(c.canonical_key(), 0); });
        if (Bigint(tally.size()) != want) return "enumerated lifts are not distinct";

        uint64_t fiber = 1;
        for (size_t i = 0; i < k1 * k2; ++i) fiber *= p;
        for (const CodeZp2& cf : free_codes) {
            CodeZp2 ext = adjoin_torsion(cf, c2);
            auto it = tally.find(ext.canonical_key());
            if (it == tally.end()) return "a free lift extends outside the enumerated family";
            ++it->second;
        }
        for (const auto& [key, cnt] : tally)
            if (cnt != fiber)
                return "fiber size " + std::to_string(cnt) + " != " + std::to_string(fiber);
        *comparisons += tally.size() + free_codes.size();

        if (containment_scan) {
            // direct generator-membership containment: each free lift lies
            // in exactly one enumerated lift
            std::vector<CodeZp2> lifts = fam.codes();
            for (const CodeZp2& cf : free_codes) {
                size_t hits = 0;
                for (const CodeZp2& big : lifts) {
                    bool inside = true;
                    for (size_t r = 0; r < cf.generators().rows() && inside; ++r)
                        inside = big.contains(cf.generators().row(r));
                    hits += inside;
                }
                if (hits != 1)
                    return "free lift contained in " + std::to_string(hits) + " lifts";
                ++*comparisons;
            }
        }
    }
    return "";
}

}  // namespace

CheckResult check_fiber_structure(const VerifyOptions& opt) {
    auto start = Clock::now();
    std::string fail;
    uint64_t comparisons = 0;

    struct Config {
        uint32_t p;
        size_t n;
        size_t max_c1;  // cap on residue codes per (p, n, k1); 0 = all
        size_t max_c2;  // cap on torsion codes per (c1, k2); 0 = all
    };
    std::vector<Config> grid;
    if (opt.small_grid) {
        grid = {{2, 2, 0, 0}, {2, 3, 0, 0}, {2, 4, 0, 0}, {3, 2, 0, 0}, {3, 3, 0, 0},
                {3, 4, 0, 0}};
    } else {
        for (size_t n = 1; n <= 6; ++n) grid.push_back({2, n, 0, 0});
        for (size_t n = 1; n <= 6; ++n) grid.push_back({3, n, 0, 0});
        for (size_t n = 1; n <= 5; ++n) grid.push_back({5, n, 0, 0});
        // full breadth is out of desk range here; deterministic samples
        grid.push_back({5, 6, 40, 4});
    }

    try {
        for (const Config& cfg : grid) {
            for (size_t k1 = 0; k1 <= 2 && 2 * k1 <= cfg.n && fail.empty(); ++k1) {
                FpFamily famkind =
                    (cfg.p == 2) ? FpFamily::DoublyEven : FpFamily::SelfOrthogonal;
                std::vector<FpCode> c1s = enumerate_fp_codes(cfg.p, cfg.n, k1, famkind);
                if (cfg.max_c1 && c1s.size() > cfg.max_c1) c1s.resize(cfg.max_c1);
                std::vector<std::string> fails(c1s.size());
                std::vector<uint64_t> counts(c1s.size(), 0);
                bool scan = cfg.p <= 3 && cfg.n <= 4;
                parallel_for(c1s.size(), opt.workers, [&](size_t idx) {
                    const FpCode& c1 = c1s[idx];
                    std::vector<FpCode> c2s;
                    for (size_t k2 = 0; k1 + k2 <= cfg.n - k1; ++k2) {
                        std::vector<FpCode> batch = intermediate_codes(c1, k2);
                        if (cfg.max_c2 && batch.size() > cfg.max_c2) batch.resize(cfg.max_c2);
                        c2s.insert(c2s.end(), batch.begin(), batch.end());
                    }
                    fails[idx] =
                        fiber_check_one(cfg.p, cfg.n, c1, c2s, &counts[idx], scan);
                    if (!fails[idx].empty())
                        fails[idx] = "p=" + std::to_string(cfg.p) + " n=" +
                                     std::to_string(cfg.n) + " k1=" + std::to_string(k1) +
                                     ": " + fails[idx];
                });
                fail = first_fail(fails);
                for (uint64_t c : counts) comparisons += c;
            }
            if (!fail.empty()) break;
        }
    } catch (const Error& e) {
        fail = e.what();
    }
    return finish("lift fiber structure", start, fail, comparisons, 300.0, opt);
}

// ---------------------------------------------------------------------------
// 6. Even lifts at n = 8

CheckResult check_even_lift_counts(const VerifyOptions& opt) {
    auto start = Clock::now();
    std::string fail;
    uint64_t comparisons = 0;
    const size_t n = 8;
    const size_t k1max = opt.small_grid ? 2 : 4;
    const Row ones(n, 1);
    try {
        for (size_t k1 = 1; k1 <= k1max && fail.empty(); ++k1) {
            std::vector<FpCode> c1s =
                enumerate_fp_codes(2, n, k1, FpFamily::DoublyEvenWithOne);
            if (Bigint(c1s.size()) != sigma_one(n, k1)) {
                fail = "sigma_one(8," + std::to_string(k1) + ") disagrees with the sweep";
                break;
            }
            std::vector<std::string> fails(c1s.size());
            std::vector<uint64_t> counts(c1s.size(), 0);
            parallel_for(c1s.size(), opt.workers, [&](size_t idx) {
                const FpCode& c1 = c1s[idx];
                std::ostringstream os;
                size_t k2max = n - 2 * k1;
                if (opt.small_grid) k2max = std::min<size_t>(k2max, 2);
                for (size_t k2 = 0; k2 <= k2max; ++k2) {
                    std::vector<FpCode> c2s = intermediate_codes(c1, k2);
                    if (Bigint(c2s.size()) != gaussian(n - 2 * k1, k2, 2)) {
                        fails[idx] = "intermediate-code count differs from the Gaussian"
                                     " coefficient";
                        return;
                    }
                    Bigint want_one = even_one_count_formula(n, k1, k2);
                    Bigint want_pm1 = want_one << (n - k1 - k2);
                    for (const FpCode& c2 : c2s) {
                        LiftFamily one = even_lifts_with_one(c1, c2);
                        if (one.count() != want_one) {
                            os << "k1=" << k1 << " k2=" << k2 << ": with-one count "
                               << one.count() << " != " << want_one;
                            fails[idx] = os.str();
                            return;
                        }
                        std::string bad;
                        one.for_each_code([&](const CodeZp2& c) {
                            if (!bad.empty()) return;
                            if (!is_even(c))
                                bad = "with-one lift not even";
                            else if (!c.contains(ones))
                                bad = "with-one lift misses the all-ones word";
                            else if (!(c.residue() == c1) || !(c.torsion() == c2))
                                bad = "with-one lift has wrong residue or torsion";
                        });
                        if (!bad.empty()) {
                            fails[idx] = bad;
                            return;
                        }
                        std::vector<CodeZp2> pm1 = even_lifts_with_pm1(c1, c2);
                        if (Bigint(pm1.size()) != want_pm1) {
                            os << "k1=" << k1 << " k2=" << k2 << ": pm1 count " << pm1.size()
                               << " != " << want_pm1;
                            fails[idx] = os.str();
                            return;
                        }
                        const uint64_t want_hits = uint64_t(1) << (k1 + k2);
                        for (const CodeZp2& c : pm1) {
                            if (!is_even(c)) {
                                fails[idx] = "pm1 lift not even";
                                return;
                            }
                            uint64_t hits = 0;
                            c.codewords([&hits](const Row& w) {
                                hits += std::all_of(w.begin(), w.end(), [](uint32_t v) {
                                    return v % 2 == 1;
                                });
                                return true;
                            });
                            if (hits != want_hits) {
                                fails[idx] = "pm1 lift meets {+-1}^8 in " +
                                             std::to_string(hits) + " words";
                                return;
                            }
                        }
                        counts[idx] += 2 + pm1.size();
                    }
                }
            });
            fail = first_fail(fails);
            for (uint64_t c : counts) comparisons += c;
        }
    } catch (const Error& e) {
        fail = e.what();
    }
    return finish("even lift counts at n = 8", start, fail, comparisons, 900.0, opt);
}

// ---------------------------------------------------------------------------
// 7. Type II totals and mass-certified classification at n = 8

CheckResult check_type2_totals(const VerifyOptions& opt) {
    auto start = Clock::now();
    std::string fail;
    uint64_t comparisons = 0;
    try {
        Bigint want_one = mass_type2(8, With::One).value;
        Bigint want_pm1 = mass_type2(8, With::Pm1).value;
        std::vector<CodeZp2> fam_one = build_family(2, 8, ClassFamily::Type2One);
        if (Bigint(fam_one.size()) != want_one)
            fail = "type2-one constructive total " + std::to_string(fam_one.size()) +
                   " != " + to_decimal(want_one);
        ++comparisons;
        if (fail.empty()) {
            std::vector<CodeZp2> fam_pm1 = build_family(2, 8, ClassFamily::Type2Pm1);
            if (Bigint(fam_pm1.size()) != want_pm1)
                fail = "type2-pm1 constructive total " + std::to_string(fam_pm1.size()) +
                       " != " + to_decimal(want_pm1);
            ++comparisons;
        }
        if (fail.empty() && !opt.small_grid) {
            ClassificationResult one = classify(2, 8, ClassFamily::Type2One);
            if (!one.certified) fail = "type2-one classification not certified";
            ++comparisons;
            if (fail.empty()) {
                ClassificationResult pm1 = classify(2, 8, ClassFamily::Type2Pm1);
                if (!pm1.certified) fail = "type2-pm1 classification not certified";
                if (fail.empty() &&
                    pm1.representatives.size() != one.representatives.size())
                    fail = "the two Type II families split into different classes";
                comparisons += 2;
            }
        }
    } catch (const Error& e) {
        fail = e.what();
    }
    return finish("Type II totals and certification at n = 8", start, fail, comparisons,
                  3600.0, opt);
}

// ---------------------------------------------------------------------------
// 8. Matrix map images

CheckResult check_map_images(const VerifyOptions& opt) {
    auto start = Clock::now();
    std::string fail;
    uint64_t comparisons = 0;
    std::mt19937_64 rng(opt.seed);
    const size_t trials = opt.small_grid ? 10 : opt.trials;
    try {
        for (uint32_t p : {2u, 3u, 5u}) {
            for (size_t m = 1; m <= 3 && fail.empty(); ++m) {
                for (size_t n = m; n <= 6 && fail.empty(); ++n) {
                    for (size_t t = 0; t < trials && fail.empty(); ++t) {
                        ResidueMatrix a = random_full_rank(rng, p, m, n);
                        ImageCheck psi = image_check(a, MapKind::Psi);
                        size_t want =
                            (p == 2) ? m * (m - 1) / 2 : m * (m + 1) / 2;
                        if (psi.rank != want) {
                            fail = "psi image rank mismatch";
                            break;
                        }
                        if (psi.image_size * psi.kernel_size != bigint_pow(p, m * n)) {
                            fail = "psi image x kernel != domain";
                            break;
                        }
                        ++comparisons;
                        if (p != 2) continue;
                        ImageCheck phi = image_check(a, MapKind::Phi);
                        if (phi.rank != m * (m + 1) / 2) {
                            fail = "phi not surjective onto Sym";
                            break;
                        }
                        ++comparisons;
                        if (!ones_in_rowspace(a)) {
                            ImageCheck pa = image_check(a, MapKind::PhiAlpha);
                            if (pa.rank != m * (m + 1) / 2 + m) {
                                fail = "phi(+)alpha not surjective";
                                break;
                            }
                            if (pa.image_size * pa.kernel_size != bigint_pow(2, m * n)) {
                                fail = "phi(+)alpha image x kernel != domain";
                                break;
                            }
                            ++comparisons;
                        }
                    }
                }
            }
            if (!fail.empty()) break;
        }
    } catch (const Error& e) {
        fail = e.what();
    }
    return finish("matrix map images", start, fail, comparisons, 120.0, opt);
}

// ---------------------------------------------------------------------------
// 9. Structural invariants on random codes

CheckResult check_structural_invariants(const VerifyOptions& opt) {
    auto start = Clock::now();
    std::string fail;
    uint64_t comparisons = 0;
    std::mt19937_64 rng(opt.seed + 1);
    const size_t samples = opt.small_grid ? 200 : 1000;
    try {
        for (size_t t = 0; t < samples && fail.empty(); ++t) {
            uint32_t p = (rng() & 1) ? 2 : 3;
            size_t n = 1 + rng() % 6;
            size_t nrows = rng() % (n + 2);
            std::vector<std::vector<long long>> rows(nrows, std::vector<long long>(n));
            for (auto& r : rows)
                for (auto& v : r) v = static_cast<long long>(rng() % (p * p));
            CodeZp2 c = CodeZp2::from_generators(p, n, rows);

            FpCode res = c.residue(), tor = c.torsion();
            if (res.dim() != c.k1() || tor.dim() != c.k1() + c.k2()) {
                fail = "residue/torsion dimensions disagree with the type";
                break;
            }
            if (!res.subset_of(tor)) {
                fail = "residue not contained in torsion";
                break;
            }
            if (c.cardinality() != res.cardinality() * tor.cardinality()) {
                fail = "|C| != |residue| x |torsion|";
                break;
            }
            if (c.cardinality() <= 4096) {
                std::unordered_set<std::string> words;
                c.codewords([&words](const Row& w) {
                    words.insert(std::string(reinterpret_cast<const char*>(w.data()),
                                             w.size() * sizeof(uint32_t)));
                    return true;
                });
                if (Bigint(words.size()) != c.cardinality()) {
                    fail = "codeword enumeration disagrees with |C|";
                    break;
                }
            }
            CodeZp2 d = c.dual();
            if (!(d.dual() == c)) {
                fail = "dual involution failed";
                break;
            }
            if (c.cardinality() * d.cardinality() != bigint_pow(p, 2 * n)) {
                fail = "|C| x |dual| != p^{2n}";
                break;
            }
            if (p == 2 && c.is_self_orthogonal()) {
                if (!res.is_doubly_even() || !tor.subset_of(res.dual())) {
                    fail = "self-orthogonal quaternary chain violated";
                    break;
                }
            }

            SignedMonomial g = SignedMonomial::random(n, rng);
            SignedMonomial h = SignedMonomial::random(n, rng);
            CodeZp2 gc = apply(g, c);
            if (!(apply(g.after(h), c) == apply(g, apply(h, c)))) {
                fail = "monomial composition law failed";
                break;
            }
            if (!(apply(g.inverse(), gc) == c)) {
                fail = "monomial inverse law failed";
                break;
            }
            if (gc.k1() != c.k1() || gc.k2() != c.k2() ||
                gc.is_self_orthogonal() != c.is_self_orthogonal()) {
                fail = "monomial action changed an invariant";
                break;
            }
            if (p == 2 && is_even(c) != is_even(gc)) {
                fail = "monomial action changed evenness";
                break;
            }

            if (c.cardinality() <= (Bigint(1) << 14)) {
                uint64_t aut = aut_order(c);
                Bigint e_order = monomial_group_order(n);
                if (e_order % aut != 0) {
                    fail = "|Aut| does not divide |E|";
                    break;
                }
                if (aut_order(gc) != aut) {
                    fail = "|Aut| not invariant under the group action";
                    break;
                }
                comparisons += 2;
            }
            comparisons += 10;
        }

        // the quaternary chain on every self-orthogonal code at small length
        for (size_t n = 1; n <= (opt.small_grid ? size_t(4) : size_t(5)) && fail.empty();
             ++n) {
            oracle_enumerate(2, n, OracleFamily::SelfOrthogonal, [&](const CodeZp2& c) {
                if (!fail.empty()) return;
                FpCode res = c.residue(), tor = c.torsion();
                if (!res.is_doubly_even() || !res.subset_of(tor) ||
                    !tor.subset_of(res.dual()))
                    fail = "chain violated at n = " + std::to_string(n);
                ++comparisons;
            });
        }

        // orbit-stabilizer cross-check by explicit orbit expansion
        std::mt19937_64 rng2(opt.seed + 2);
        for (size_t t = 0; t < (opt.small_grid ? size_t(10) : size_t(40)) && fail.empty();
             ++t) {
            uint32_t p = (rng2() & 1) ? 2 : 3;
            size_t n = 1 + rng2() % 4;
            std::vector<std::vector<long long>> rows(1 + rng2() % 2,
                                                     std::vector<long long>(n));
            for (auto& r : rows)
                for (auto& v : r) v = static_cast<long long>(rng2() % (p * p));
            CodeZp2 c = CodeZp2::from_generators(p, n, rows);

            std::vector<SignedMonomial> gens;
            for (size_t i = 0; i + 1 < n; ++i) {
                SignedMonomial g = SignedMonomial::identity(n);
                g.perm[i] = static_cast<uint32_t>(i + 1);
                g.perm[i + 1] = static_cast<uint32_t>(i);
                gens.push_back(g);
            }
            SignedMonomial flip = SignedMonomial::identity(n);
            flip.signs[0] = -1;
            gens.push_back(flip);

            std::unordered_set<std::string> orbit{c.canonical_key()};
            std::vector<CodeZp2> queue{c};
            while (!queue.empty()) {
                CodeZp2 cur = queue.back();
                queue.pop_back();
                for (const auto& g : gens) {
                    CodeZp2 nxt = apply(g, cur);
                    if (orbit.insert(nxt.canonical_key()).second) queue.push_back(nxt);
                }
            }
            if (Bigint(orbit.size()) * aut_order(c) != monomial_group_order(n)) {
                fail = "orbit size x |Aut| != |E|";
                break;
            }
            ++comparisons;
        }
    } catch (const Error& e) {
        fail = e.what();
    }
    return finish("structural invariants on random codes", start, fail, comparisons, 120.0,
                  opt);
}

// ---------------------------------------------------------------------------

std::vector<CheckResult> run_verification(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    out.push_back(check_worked_example(opt));
    out.push_back(check_oracle_vs_formula(opt));
    out.push_back(check_self_dual_totals(opt));
    out.push_back(check_free_lift_counts(opt));
    out.push_back(check_fiber_structure(opt));
    out.push_back(check_even_lift_counts(opt));
    out.push_back(check_type2_totals(opt));
    out.push_back(check_map_images(opt));
    out.push_back(check_structural_invariants(opt));
    return out;
}

// ---------------------------------------------------------------------------
// Single-statement drivers

CheckResult check_lemma(const std::string& lemma, uint32_t p, size_t m, size_t n,
                        size_t trials, uint64_t seed) {
    auto start = Clock::now();
    std::string fail;
    uint64_t comparisons = 0;
    std::mt19937_64 rng(seed);
    VerifyOptions opt;
    opt.enforce_time = false;
    try {
        if (lemma == "3.1" || lemma == "3.2") {
            for (size_t t = 0; t < trials && fail.empty(); ++t) {
                ResidueMatrix a = random_full_rank(rng, p, m, n);
                if (lemma == "3.1") {
                    ImageCheck psi = image_check(a, MapKind::Psi);
                    size_t want = (p == 2) ? m * (m - 1) / 2 : m * (m + 1) / 2;
                    if (psi.rank != want) fail = "psi image differs from Sym/Alt";
                    ++comparisons;
                    if (p == 2 && fail.empty()) {
                        if (image_check(a, MapKind::Phi).rank != m * (m + 1) / 2)
                            fail = "phi image differs from Sym";
                        ++comparisons;
                    }
                } else {
                    if (p != 2) throw DomainError("this statement needs p = 2");
                    if (ones_in_rowspace(a)) continue;
                    if (image_check(a, MapKind::PhiAlpha).rank != m * (m + 1) / 2 + m)
                        fail = "phi(+)alpha not surjective";
                    ++comparisons;
                }
            }
        } else if (lemma == "4.2" || lemma == "4.5") {
            FpFamily famkind = (p == 2) ? FpFamily::DoublyEven : FpFamily::SelfOrthogonal;
            for (const FpCode& c1 : enumerate_fp_codes(p, n, m, famkind)) {
                if (!fail.empty()) break;
                if (lemma == "4.2") {
                    if (free_so_lifts(c1).count() != free_count_formula(p, n, m))
                        fail = "free lift count mismatch";
                    ++comparisons;
                } else {
                    for (size_t k2 = 0; m + k2 <= n - m && fail.empty(); ++k2)
                        for (const FpCode& c2 : intermediate_codes(c1, k2)) {
                            if (so_lifts(c1, c2).count() !=
                                so_count_formula(p, n, m, k2)) {
                                fail = "lift count mismatch";
                                break;
                            }
                            ++comparisons;
                        }
                }
            }
        } else if (lemma == "5.3" || lemma == "5.6" || lemma == "5.7") {
            if (p != 2) throw DomainError("even lift statements need p = 2");
            for (const FpCode& c1 :
                 enumerate_fp_codes(2, n, m, FpFamily::DoublyEvenWithOne)) {
                if (!fail.empty()) break;
                size_t k2max = (lemma == "5.3") ? 0 : n - 2 * m;
                for (size_t k2 = 0; k2 <= k2max && fail.empty(); ++k2)
                    for (const FpCode& c2 : intermediate_codes(c1, k2)) {
                        Bigint want = even_one_count_formula(n, m, k2);
                        if (lemma == "5.7") {
                            if (Bigint(even_lifts_with_pm1(c1, c2).size()) !=
                                (want << (n - m - k2))) {
                                fail = "pm1 lift count mismatch";
                                break;
                            }
                        } else if (even_lifts_with_one(c1, c2).count() != want) {
                            fail = "with-one lift count mismatch";
                            break;
                        }
                        ++comparisons;
                    }
            }
        } else {
            throw DomainError("unknown statement tag: " + lemma);
        }
    } catch (const Error& e) {
        fail = e.what();
    }
    return finish("statement " + lemma + " spot check", start, fail, comparisons, 1e9, opt);
}

}  // namespace zp2
