#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "zp2/ringmat.hpp"

using namespace zp2;

namespace {

// Brute-force row span: every coefficient combination, as a set of words.
std::set<Row> span_set(const ResidueMatrix& m) {
    const uint32_t mod = m.mod().m;
    std::set<Row> out;
    std::vector<uint32_t> coeff(m.rows(), 0);
    while (true) {
        Row w(m.cols(), 0);
        for (size_t i = 0; i < m.rows(); ++i)
            for (size_t c = 0; c < m.cols(); ++c)
                w[c] = static_cast<uint32_t>((w[c] + uint64_t(coeff[i]) * m.at(i, c)) % mod);
        out.insert(w);
        size_t i = m.rows();
        while (i > 0 && ++coeff[i - 1] == mod) coeff[--i] = 0;
        if (i == 0) break;
    }
    return out;
}

ResidueMatrix random_mat(std::mt19937_64& rng, Modulus mod, size_t rows, size_t cols) {
    ResidueMatrix m(mod, rows, cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t c = 0; c < cols; ++c) m.set(i, c, static_cast<uint32_t>(rng() % mod.m));
    return m;
}

}  // namespace

TEST_CASE("modulus construction checks primality") {
    CHECK(Modulus::field(2).m == 2);
    CHECK(Modulus::square(3).m == 9);
    CHECK(Modulus::square(5).m == 25);
    CHECK_THROWS_AS(Modulus::field(4), DomainError);
    CHECK_THROWS_AS(Modulus::field(1), DomainError);
    CHECK_THROWS_AS(Modulus::square(0), DomainError);
    CHECK_THROWS_AS(Modulus::square(91), DomainError);  // 7 * 13
}

TEST_CASE("entries are reduced into canonical residues") {
    auto m = ResidueMatrix::from_rows(Modulus::square(3), {{-1, 10, 9}});
    CHECK(m.at(0, 0) == 8);
    CHECK(m.at(0, 1) == 1);
    CHECK(m.at(0, 2) == 0);
    CHECK_THROWS_AS(ResidueMatrix::from_rows(Modulus::field(2), {{1, 0}, {1}}), ShapeError);
}

TEST_CASE("rref over small fields") {
    auto r1 = rref_fp(ResidueMatrix::from_rows(Modulus::field(2), {{1, 1}, {1, 1}}));
    CHECK(r1.rank == 1);
    CHECK(r1.pivots == std::vector<size_t>{0});
    CHECK(r1.mat == ResidueMatrix::from_rows(Modulus::field(2), {{1, 1}}));

    auto r2 = rref_fp(ResidueMatrix::from_rows(Modulus::field(2), {{0, 1}, {1, 0}}));
    CHECK(r2.rank == 2);
    CHECK(r2.mat == ResidueMatrix::identity(Modulus::field(2), 2));

    auto r3 = rref_fp(ResidueMatrix::from_rows(Modulus::field(3), {{1, 2}, {2, 4}}));
    CHECK(r3.rank == 1);
    CHECK(r3.mat == ResidueMatrix::from_rows(Modulus::field(3), {{1, 2}}));

    CHECK_THROWS_AS(rref_fp(ResidueMatrix(Modulus::square(3), 1, 1)), DomainError);
}

TEST_CASE("howell form on the worked examples") {
    auto h1 = howell_form(ResidueMatrix::from_rows(Modulus::square(3), {{2}}));
    CHECK(h1 == ResidueMatrix::from_rows(Modulus::square(3), {{1}}));

    auto h2 = howell_form(ResidueMatrix::from_rows(Modulus::square(3), {{3}, {6}}));
    CHECK(h2 == ResidueMatrix::from_rows(Modulus::square(3), {{3}}));

    auto in3 = ResidueMatrix::from_rows(Modulus::square(3), {{1, 1}, {0, 3}});
    auto h3 = howell_form(in3);
    CHECK(h3 == in3);
    CHECK(span_set(h3) == span_set(in3));
}

TEST_CASE("howell form needs completion rows for p-valued pivots") {
    // span{(3,1)} over Z9 also contains (0,3) = 3*(3,1); the Howell form
    // must expose it as a second row.
    auto h = howell_form(ResidueMatrix::from_rows(Modulus::square(3), {{3, 1}}));
    CHECK(h == ResidueMatrix::from_rows(Modulus::square(3), {{3, 1}, {0, 3}}));
    CHECK(span_set(h) == span_set(ResidueMatrix::from_rows(Modulus::square(3), {{3, 1}})));
}

TEST_CASE("howell and rref are idempotent and span-preserving") {
    std::mt19937_64 rng(7);
    for (uint32_t p : {2u, 3u, 5u}) {
        for (size_t n = 1; n <= 4; ++n) {
            for (size_t rows = 0; rows <= 3; ++rows) {
                for (int rep = 0; rep < 8; ++rep) {
                    auto mq = random_mat(rng, Modulus::square(p), rows, n);
                    auto h = howell_form(mq);
                    CHECK(howell_form(h) == h);
                    CHECK(span_set(h) == span_set(mq));

                    auto mf = random_mat(rng, Modulus::field(p), rows, n);
                    auto r = rref_fp(mf).mat;
                    CHECK(rref_fp(r).mat == r);
                    CHECK(span_set(r) == span_set(mf));
                }
            }
        }
    }
}

TEST_CASE("equal spans have identical howell forms") {
    std::mt19937_64 rng(11);
    for (uint32_t p : {2u, 3u}) {
        const Modulus mod = Modulus::square(p);
        for (int rep = 0; rep < 40; ++rep) {
            size_t n = 1 + rng() % 3, rows = 1 + rng() % 3;
            auto m = random_mat(rng, mod, rows, n);
            // random span-preserving row operations
            auto mixed = m;
            for (int step = 0; step < 6; ++step) {
                size_t i = rng() % rows, j = rng() % rows;
                uint32_t c = static_cast<uint32_t>(rng() % mod.m);
                if (i == j) continue;
                for (size_t t = 0; t < n; ++t)
                    mixed.set(i, t,
                              static_cast<uint32_t>(
                                  (mixed.at(i, t) + uint64_t(c) * mixed.at(j, t)) % mod.m));
            }
            CHECK(howell_form(mixed) == howell_form(m));
        }
    }
}

TEST_CASE("howell reduce decides membership") {
    std::mt19937_64 rng(13);
    for (uint32_t p : {2u, 3u}) {
        const Modulus mod = Modulus::square(p);
        for (int rep = 0; rep < 20; ++rep) {
            size_t n = 1 + rng() % 3, rows = 1 + rng() % 2;
            auto m = random_mat(rng, mod, rows, n);
            auto h = howell_form(m);
            auto span = span_set(m);
            std::vector<uint32_t> probe(n);
            for (int t = 0; t < 20; ++t) {
                for (auto& v : probe) v = static_cast<uint32_t>(rng() % mod.m);
                Row rem = howell_reduce(h, probe);
                bool zero = std::all_of(rem.begin(), rem.end(),
                                        [](uint32_t v) { return v == 0; });
                CHECK(zero == (span.count(probe) > 0));
            }
        }
    }
}

TEST_CASE("affine solving over F_p") {
    auto s1 = solve_affine_fp(ResidueMatrix::from_rows(Modulus::field(2), {{1, 1}}), {0});
    REQUIRE(s1.has_value());
    CHECK(s1->particular == Row{0, 0});
    REQUIRE(s1->kernel.size() == 1);
    CHECK(s1->kernel[0] == Row{1, 1});

    auto s2 = solve_affine_fp(ResidueMatrix::identity(Modulus::field(3), 2), {1, 2});
    REQUIRE(s2.has_value());
    CHECK(s2->particular == Row{1, 2});
    CHECK(s2->kernel.empty());

    auto s3 = solve_affine_fp(ResidueMatrix::from_rows(Modulus::field(2), {{0, 0}}), {1});
    CHECK(!s3.has_value());

    CHECK_THROWS_AS(
        solve_affine_fp(ResidueMatrix::identity(Modulus::field(2), 2), Row{1, 0, 0}),
        ShapeError);
}

TEST_CASE("affine solutions match exhaustive solution counts") {
    std::mt19937_64 rng(17);
    for (uint32_t p : {2u, 3u}) {
        const Modulus mod = Modulus::field(p);
        for (int rep = 0; rep < 60; ++rep) {
            size_t cols = 1 + rng() % 5, rows = 1 + rng() % 3;
            auto a = random_mat(rng, mod, rows, cols);
            Row b(rows);
            for (auto& v : b) v = static_cast<uint32_t>(rng() % p);

            uint64_t brute = 0;
            std::vector<uint32_t> x(cols, 0);
            while (true) {
                bool ok = true;
                for (size_t i = 0; i < rows && ok; ++i) {
                    uint64_t acc = 0;
                    for (size_t c = 0; c < cols; ++c) acc += uint64_t(a.at(i, c)) * x[c];
                    ok = (acc % p) == b[i];
                }
                brute += ok;
                size_t i = cols;
                while (i > 0 && ++x[i - 1] == p) x[--i] = 0;
                if (i == 0) break;
            }

            auto sol = solve_affine_fp(a, b);
            if (!sol) {
                CHECK(brute == 0);
                continue;
            }
            uint64_t expected = 1;
            for (size_t i = 0; i < sol->kernel.size(); ++i) expected *= p;
            CHECK(brute == expected);
            // particular + any kernel member solves exactly
            for (const Row& k : sol->kernel) {
                for (size_t i = 0; i < rows; ++i) {
                    uint64_t acc = 0;
                    for (size_t c = 0; c < cols; ++c)
                        acc += uint64_t(a.at(i, c)) * ((sol->particular[c] + k[c]) % p);
                    CHECK(acc % p == b[i]);
                }
            }
        }
    }
}
