#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "zp2/census.hpp"
#include "zp2/lifting.hpp"

using namespace zp2;

namespace {

ResidueMatrix fp_mat(uint32_t p, const std::vector<std::vector<long long>>& rows) {
    return ResidueMatrix::from_rows(Modulus::field(p), rows);
}

}  // namespace

TEST_CASE("psi map") {
    auto a = fp_mat(3, {{1, 1, 1}});
    auto n = fp_mat(3, {{1, 0, 0}});
    CHECK(psi_map(a, n) == fp_mat(3, {{2}}));
    CHECK(psi_map(a, fp_mat(3, {{0, 0, 0}})) == fp_mat(3, {{0}}));
    CHECK_THROWS_AS(psi_map(a, fp_mat(3, {{1, 0}})), ShapeError);

    std::mt19937_64 rng(3);
    for (int rep = 0; rep < 30; ++rep) {
        size_t m = 1 + rng() % 3, w = m + rng() % 3;
        ResidueMatrix a2(Modulus::field(2), m, w), n2(Modulus::field(2), m, w);
        for (size_t i = 0; i < m; ++i)
            for (size_t c = 0; c < w; ++c) {
                a2.set(i, c, rng() & 1);
                n2.set(i, c, rng() & 1);
            }
        ResidueMatrix out = psi_map(a2, n2);
        CHECK(out == out.transpose());
        for (size_t i = 0; i < m; ++i) CHECK(out.at(i, i) == 0);  // alternating at p = 2
    }
}

TEST_CASE("phi map") {
    CHECK(phi_map(fp_mat(2, {{1, 1}}), fp_mat(2, {{1, 0}})) == fp_mat(2, {{1}}));
    CHECK(phi_map(fp_mat(2, {{1, 1}}), fp_mat(2, {{0, 0}})) == fp_mat(2, {{0}}));
    CHECK(phi_map(fp_mat(2, {{1, 0}, {0, 1}}), fp_mat(2, {{0, 1}, {0, 0}})) ==
          fp_mat(2, {{0, 1}, {1, 0}}));
    CHECK_THROWS_AS(phi_map(fp_mat(3, {{1}}), fp_mat(3, {{1}})), DomainError);
}

TEST_CASE("alpha map") {
    CHECK(alpha_map(fp_mat(2, {{1, 1, 0}})) == Row{0});
    CHECK(alpha_map(fp_mat(2, {{0, 0, 0}})) == Row{0});
    CHECK(alpha_map(fp_mat(2, {{1, 0}, {1, 1}})) == Row{1, 0});
}

TEST_CASE("image sizes by rank and by exhaustive evaluation") {
    // p = 3, A = [I_2 | random], m = 2, n = 4: image is Sym_2(F_3)
    auto a3 = fp_mat(3, {{1, 0, 2, 1}, {0, 1, 1, 1}});
    ImageCheck psi3 = image_check(a3, MapKind::Psi);
    CHECK(psi3.image_size == 27);

    auto a2 = fp_mat(2, {{1, 0, 1}, {0, 1, 1}});
    CHECK(image_check(a2, MapKind::Psi).image_size == 2);
    CHECK(image_check(a2, MapKind::Phi).image_size == 8);

    // m = 1, A = [1 1 0]: exhaustive evaluation of (phi, alpha) over all N
    auto a1 = fp_mat(2, {{1, 1, 0}});
    ImageCheck pa = image_check(a1, MapKind::PhiAlpha);
    CHECK(pa.image_size == 4);
    std::set<std::pair<uint32_t, uint32_t>> seen;
    for (uint32_t bits = 0; bits < 8; ++bits) {
        ResidueMatrix n(Modulus::field(2), 1, 3);
        for (size_t c = 0; c < 3; ++c) n.set(0, c, (bits >> c) & 1);
        seen.insert({phi_map(a1, n).at(0, 0), alpha_map(n)[0]});
    }
    CHECK(Bigint(seen.size()) == pa.image_size);
    CHECK(pa.kernel_size * pa.image_size == 8);

    CHECK_THROWS_AS(image_check(fp_mat(2, {{1, 1}, {1, 1}}), MapKind::Psi),
                    PreconditionError);
    CHECK_THROWS_AS(image_check(fp_mat(2, {{1, 1}}), MapKind::PhiAlpha),
                    PreconditionError);  // all-ones row space
}

TEST_CASE("free lifts of a ternary line") {
    FpCode c1 = FpCode::from_rows(3, 4, {{1, 1, 1, 0}});
    LiftSolutionSet sol = free_so_lifts(c1);
    CHECK(sol.count() == 9);

    // independent sweep: every 1 x 3 matrix N, keep the self-orthogonal
    // codes span[1 | A + 3N]; counts and code sets must agree
    std::set<std::string> brute;
    for (uint32_t x = 0; x < 27; ++x) {
        std::vector<long long> row = {1, 1 + 3 * (long long)(x % 3),
                                      1 + 3 * (long long)((x / 3) % 3),
                                      0 + 3 * (long long)((x / 9) % 3)};
        CodeZp2 c = CodeZp2::from_generators(3, 4, {row});
        if (c.is_self_orthogonal()) brute.insert(c.canonical_key());
    }
    std::set<std::string> emitted;
    sol.for_each_member([&](const ResidueMatrix& nm) {
        CHECK(sol.member_satisfies(nm));
        CodeZp2 c = sol.code_for(nm);
        CHECK(c.is_self_orthogonal());
        CHECK(c.residue() == c1);
        CHECK(c.torsion() == c1);
        emitted.insert(c.canonical_key());
    });
    CHECK(emitted.size() == 9);  // distinct codes from distinct solutions
    CHECK(emitted == brute);
}

TEST_CASE("free lift edge cases") {
    CHECK(free_so_lifts(FpCode::zero(3, 4)).count() == 1);
    CHECK(free_so_lifts(FpCode::zero(3, 4)).code_for(ResidueMatrix(Modulus::field(3), 0, 4)) ==
          CodeZp2::zero(3, 4));

    FpCode ones8 = FpCode::from_rows(2, 8, {std::vector<long long>(8, 1)});
    CHECK(free_so_lifts(ones8).count() == 128);

    // not self-orthogonal
    CHECK_THROWS_AS(free_so_lifts(FpCode::from_rows(3, 2, {{1, 1}})), PreconditionError);
    // self-orthogonal but not doubly even at p = 2
    CHECK_THROWS_AS(free_so_lifts(FpCode::from_rows(2, 2, {{1, 1}})), PreconditionError);
}

TEST_CASE("lifts with prescribed torsion") {
    FpCode c1 = FpCode::from_rows(3, 4, {{1, 1, 1, 0}});
    auto mids = intermediate_codes(c1, 1);
    CHECK(mids.size() == 4);
    for (const FpCode& c2 : mids) {
        LiftFamily fam = so_lifts(c1, c2);
        CHECK(fam.count() == 3);
        CHECK(fam.fiber_size() == 3);
        std::set<std::string> keys;
        fam.for_each_code([&](const CodeZp2& c) {
            CHECK(c.is_self_orthogonal());
            CHECK(c.residue() == c1);
            CHECK(c.torsion() == c2);
            keys.insert(c.canonical_key());
        });
        CHECK(keys.size() == 3);
    }

    // k2 = 0 reduces to the free count
    LiftFamily same = so_lifts(c1, c1);
    CHECK(same.count() == free_so_lifts(c1).count());

    // p = 2, n = 8, k1 = 2, k2 = 2
    FpCode b1 = FpCode::from_rows(2, 8, {{1, 1, 1, 1, 0, 0, 0, 0}, {0, 0, 1, 1, 1, 1, 0, 0}});
    REQUIRE(b1.is_doubly_even());
    FpCode b2 = intermediate_codes(b1, 2).front();
    CHECK(so_lifts(b1, b2).count() == 128);

    // chain violations are refused
    FpCode other = FpCode::from_rows(3, 4, {{1, 0, 0, 0}});
    CHECK_THROWS_AS(so_lifts(c1, other), PreconditionError);
}

TEST_CASE("every free lift sits in exactly one extension") {
    FpCode c1 = FpCode::from_rows(3, 4, {{1, 1, 1, 0}});
    LiftSolutionSet free_set = free_so_lifts(c1);
    std::vector<CodeZp2> free_codes;
    free_set.for_each_member(
        [&](const ResidueMatrix& nm) { free_codes.push_back(free_set.code_for(nm)); });
    for (const FpCode& c2 : intermediate_codes(c1, 1)) {
        std::vector<CodeZp2> lifts = so_lifts(c1, c2).codes();
        std::map<std::string, uint64_t> tally;
        for (const CodeZp2& big : lifts) tally[big.canonical_key()] = 0;
        for (const CodeZp2& small : free_codes) {
            uint64_t hits = 0;
            for (const CodeZp2& big : lifts) {
                bool inside = true;
                for (size_t r = 0; r < small.generators().rows() && inside; ++r)
                    inside = big.contains(small.generators().row(r));
                if (inside) {
                    ++hits;
                    ++tally[big.canonical_key()];
                }
            }
            CHECK(hits == 1);
        }
        for (const auto& [key, cnt] : tally) CHECK(cnt == 3);  // p^{k1 k2}
    }
}

TEST_CASE("constructive lifts agree with the oracle sweep") {
    for (uint32_t p : {2u, 3u}) {
        for (size_t n = 1; n <= 4; ++n) {
            std::vector<std::string> oracle_keys;
            oracle_enumerate(p, n, OracleFamily::SelfOrthogonal, [&](const CodeZp2& c) {
                oracle_keys.push_back(c.canonical_key());
            });
            std::sort(oracle_keys.begin(), oracle_keys.end());

            std::vector<std::string> built;
            FpFamily famkind = (p == 2) ? FpFamily::DoublyEven : FpFamily::SelfOrthogonal;
            for (size_t k1 = 0; 2 * k1 <= n; ++k1)
                for (const FpCode& c1 : enumerate_fp_codes(p, n, k1, famkind))
                    for (size_t k2 = 0; k1 + k2 <= n - k1; ++k2)
                        for (const FpCode& c2 : intermediate_codes(c1, k2))
                            so_lifts(c1, c2).for_each_code([&](const CodeZp2& c) {
                                built.push_back(c.canonical_key());
                            });
            std::sort(built.begin(), built.end());
            CHECK(built.size() ==
                  std::set<std::string>(built.begin(), built.end()).size());
            CHECK(built == oracle_keys);
        }
    }
}

TEST_CASE("even lifts containing the all-ones word") {
    FpCode ones = FpCode::from_rows(2, 8, {std::vector<long long>(8, 1)});
    LiftFamily fam = even_lifts_with_one(ones, ones);
    CHECK(fam.count() == 1);
    std::vector<CodeZp2> codes = fam.codes();
    REQUIRE(codes.size() == 1);
    CHECK(codes[0] == CodeZp2::from_generators(2, 8, {std::vector<long long>(8, 1)}));
    CHECK(is_even(codes[0]));

    // k1 = 2: sixteen lifts per residue, confirmed by sweeping all N
    FpCode c1 = FpCode::from_rows(2, 8,
                                  {std::vector<long long>{1, 1, 1, 1, 1, 1, 1, 1},
                                   std::vector<long long>{0, 0, 0, 0, 1, 1, 1, 1}});
    REQUIRE(c1.is_doubly_even());
    REQUIRE(c1.contains_all_ones());
    LiftFamily fam2 = even_lifts_with_one(c1, c1);
    CHECK(fam2.count() == 16);

    std::set<std::string> brute;
    // standard form [1 1; 0 1 A] with A the 1 x 6 tail of the second row:
    // sweep every replacement A + 2N over the 64 binary N
    for (uint32_t bits = 0; bits < 64; ++bits) {
        std::vector<long long> r0(8, 1);
        std::vector<long long> r1 = {0, 0, 0, 0, 1, 1, 1, 1};
        // the identity column of the second row sits at its pivot; the
        // remaining six columns take the 2N offsets
        std::vector<size_t> tail_cols = {1, 2, 3, 5, 6, 7};
        for (size_t t = 0; t < 6; ++t) r1[tail_cols[t]] += 2 * ((bits >> t) & 1);
        CodeZp2 c = CodeZp2::from_generators(2, 8, {r0, r1});
        if (!is_even(c)) continue;
        if (!(c.residue() == c1) || !(c.torsion() == c1)) continue;
        if (!c.contains(Row(8, 1))) continue;
        brute.insert(c.canonical_key());
    }
    std::set<std::string> emitted;
    fam2.for_each_code([&](const CodeZp2& c) {
        CHECK(is_even(c));
        CHECK(c.contains(Row(8, 1)));
        emitted.insert(c.canonical_key());
    });
    CHECK(emitted == brute);

    // k1 = 4, k2 = 0 gives 8 codes
    FpCode c4 = FpCode::from_rows(2, 8,
                                  {std::vector<long long>{1, 1, 1, 1, 1, 1, 1, 1},
                                   std::vector<long long>{0, 0, 0, 0, 1, 1, 1, 1},
                                   std::vector<long long>{0, 0, 1, 1, 0, 0, 1, 1},
                                   std::vector<long long>{0, 1, 0, 1, 0, 1, 0, 1}});
    REQUIRE(c4.is_doubly_even());
    CHECK(even_lifts_with_one(c4, c4).count() == 8);

    CHECK_THROWS_AS(even_lifts_with_one(FpCode::from_rows(2, 4, {{1, 1, 1, 1}}),
                                        FpCode::from_rows(2, 4, {{1, 1, 1, 1}})),
                    PreconditionError);  // length not divisible by 8
    FpCode no_ones = FpCode::from_rows(2, 8, {{1, 1, 1, 1, 0, 0, 0, 0}});
    CHECK_THROWS_AS(even_lifts_with_one(no_ones, no_ones), PreconditionError);
}

TEST_CASE("even lifts meeting the sign orbit") {
    FpCode ones = FpCode::from_rows(2, 8, {std::vector<long long>(8, 1)});
    auto fam = even_lifts_with_pm1(ones, ones);
    CHECK(fam.size() == 128);  // 2^{8-1}
    for (const CodeZp2& c : fam) {
        CHECK(is_even(c));
        CHECK(contains_pm1(c).has_value());
    }

    FpCode c4 = FpCode::from_rows(2, 8,
                                  {std::vector<long long>{1, 1, 1, 1, 1, 1, 1, 1},
                                   std::vector<long long>{0, 0, 0, 0, 1, 1, 1, 1},
                                   std::vector<long long>{0, 0, 1, 1, 0, 0, 1, 1},
                                   std::vector<long long>{0, 1, 0, 1, 0, 1, 0, 1}});
    CHECK(even_lifts_with_pm1(c4, c4).size() == 128);  // 2^{4+3}
}
