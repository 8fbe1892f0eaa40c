#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <sstream>

#include "zp2/census.hpp"

using namespace zp2;

namespace {

std::set<Row> all_codewords(const CodeZp2& c) {
    std::set<Row> out;
    c.codewords([&out](const Row& w) {
        out.insert(w);
        return true;
    });
    return out;
}

CodeZp2 random_code(std::mt19937_64& rng, uint32_t p, size_t n) {
    size_t rows = rng() % (n + 2);
    std::vector<std::vector<long long>> gen(rows, std::vector<long long>(n));
    for (auto& r : gen)
        for (auto& v : r) v = static_cast<long long>(rng() % (p * p));
    return CodeZp2::from_generators(p, n, gen);
}

}  // namespace

TEST_CASE("construction, type and cardinality") {
    CodeZp2 c = CodeZp2::from_generators(3, 4, {{1, 1, 4, 0}, {0, 3, 6, 0}});
    CHECK(c.k1() == 1);
    CHECK(c.k2() == 1);
    CHECK(c.cardinality() == 27);
    CHECK(all_codewords(c).size() == 27);

    CodeZp2 z = CodeZp2::from_generators(3, 4, {});
    CHECK(z.k1() == 0);
    CHECK(z.k2() == 0);
    CHECK(z.cardinality() == 1);

    CodeZp2 full = CodeZp2::from_generators(2, 2, {{1, 0}, {0, 1}, {1, 1}});
    CHECK(full.k1() == 2);
    CHECK(full.k2() == 0);
    CHECK(full.cardinality() == 16);

    CHECK_THROWS_AS(CodeZp2::from_generators(2, 2, {{1, 0, 0}}), ShapeError);
    CHECK_THROWS_AS(CodeZp2::from_generators(6, 2, {{1, 0}}), DomainError);
}

TEST_CASE("row order and redundancy do not matter") {
    CodeZp2 a = CodeZp2::from_generators(3, 4, {{1, 1, 4, 0}, {0, 3, 6, 0}});
    CodeZp2 b = CodeZp2::from_generators(3, 4, {{0, 3, 6, 0}, {1, 1, 4, 0}, {1, 4, 1, 0}});
    CHECK(a == b);
}

TEST_CASE("the type needs no unit pivot in the generators") {
    // span{(3,1)} over Z9 is free of rank 1, although its Howell form has
    // only pivots divisible by 3.
    CodeZp2 c = CodeZp2::from_generators(3, 2, {{3, 1}});
    CHECK(c.k1() == 1);
    CHECK(c.k2() == 0);
    CHECK(c.residue().dim() == 1);
    CHECK(c.torsion().dim() == 1);
}

TEST_CASE("residue codes") {
    CodeZp2 c = CodeZp2::from_generators(3, 4, {{1, 1, 4, 0}, {0, 3, 6, 0}});
    CHECK(c.residue() == FpCode::from_rows(3, 4, {{1, 1, 1, 0}}));
    CHECK(CodeZp2::zero(3, 4).residue() == FpCode::zero(3, 4));
    CHECK(CodeZp2::from_generators(2, 2, {{2, 2}}).residue() == FpCode::zero(2, 2));
}

TEST_CASE("torsion codes") {
    CodeZp2 c = CodeZp2::from_generators(3, 4, {{1, 1, 4, 0}, {0, 3, 6, 0}});
    FpCode tor = c.torsion();
    CHECK(tor == FpCode::from_rows(3, 4, {{1, 1, 1, 0}, {0, 1, 2, 0}}));
    CHECK(tor.dim() == 2);

    // every torsion word v has 3v in the code, and conversely
    std::set<Row> words = all_codewords(c);
    uint64_t scan = 0;
    std::vector<uint32_t> v(4, 0);
    while (true) {
        Row scaled(4);
        for (size_t i = 0; i < 4; ++i) scaled[i] = (3 * v[i]) % 9;
        bool inside = words.count(scaled) > 0;
        CHECK(inside == tor.contains(v));
        scan += inside;
        size_t i = 4;
        while (i > 0 && ++v[i - 1] == 3) v[--i] = 0;
        if (i == 0) break;
    }
    CHECK(scan == 9);  // = |torsion|

    CodeZp2 two = CodeZp2::from_generators(2, 2, {{2, 2}});
    CHECK(two.torsion() == FpCode::from_rows(2, 2, {{1, 1}}));

    // free codes: torsion equals residue
    CodeZp2 free_code = CodeZp2::from_generators(3, 4, {{1, 1, 4, 0}});
    CHECK(free_code.torsion() == free_code.residue());
}

TEST_CASE("duals against exhaustive search") {
    auto brute_dual = [](const CodeZp2& c) {
        const uint32_t m = c.prime() * c.prime();
        std::set<Row> words = all_codewords(c);
        std::set<Row> dual;
        std::vector<uint32_t> x(c.length(), 0);
        while (true) {
            bool ok = true;
            for (const Row& w : words) {
                uint64_t dot = 0;
                for (size_t i = 0; i < w.size(); ++i) dot += uint64_t(w[i]) * x[i];
                if (dot % m != 0) {
                    ok = false;
                    break;
                }
            }
            if (ok) dual.insert(x);
            size_t i = x.size();
            while (i > 0 && ++x[i - 1] == m) x[--i] = 0;
            if (i == 0) break;
        }
        return dual;
    };

    CodeZp2 z = CodeZp2::zero(2, 2);
    CHECK(z.dual().cardinality() == 16);

    CodeZp2 a = CodeZp2::from_generators(2, 2, {{2, 0}});
    CHECK(all_codewords(a.dual()) == brute_dual(a));
    CHECK(a.dual() == CodeZp2::from_generators(2, 2, {{2, 0}, {0, 1}}));

    CodeZp2 b = CodeZp2::from_generators(2, 2, {{1, 1}});
    CHECK(all_codewords(b.dual()) == brute_dual(b));
    CHECK(b.dual() == CodeZp2::from_generators(2, 2, {{1, 3}}));
    CHECK_FALSE(b.is_self_dual());

    std::mt19937_64 rng(5);
    for (int rep = 0; rep < 25; ++rep) {
        uint32_t p = (rng() & 1) ? 2 : 3;
        size_t n = 1 + rng() % 3;
        CodeZp2 c = random_code(rng, p, n);
        CHECK(all_codewords(c.dual()) == brute_dual(c));
        CHECK(c.dual().dual() == c);
        CHECK(c.cardinality() * c.dual().cardinality() == bigint_pow(p, 2 * n));
    }
}

TEST_CASE("self-orthogonality") {
    CHECK(CodeZp2::from_generators(3, 4, {{1, 1, 4, 0}}).is_self_orthogonal());
    CHECK_FALSE(CodeZp2::from_generators(2, 2, {{1, 1}}).is_self_orthogonal());
    CHECK(CodeZp2::zero(5, 3).is_self_orthogonal());
}

TEST_CASE("euclidean weight") {
    CHECK(euclidean_weight({1, 2, 3, 0}) == 6);
    CHECK(euclidean_weight(Row(8, 1)) == 8);
    CHECK(euclidean_weight({2, 2}) == 8);
}

TEST_CASE("even codes") {
    CHECK(is_even(CodeZp2::from_generators(2, 8, {std::vector<long long>(8, 1)})));
    CHECK(is_even(CodeZp2::from_generators(2, 2, {{2, 2}})));
    CHECK_FALSE(is_even(CodeZp2::from_generators(2, 2, {{1, 1}})));
    CHECK_THROWS_AS(is_even(CodeZp2::zero(3, 2)), DomainError);
}

TEST_CASE("generator criterion for evenness agrees with the full scan") {
    for (size_t n = 1; n <= 4; ++n) {
        oracle_enumerate(2, n, OracleFamily::All, [](const CodeZp2& c) {
            bool all_div8 = true;
            c.codewords([&all_div8](const Row& w) {
                all_div8 = euclidean_weight(w) % 8 == 0;
                return all_div8;
            });
            CHECK(is_even(c) == all_div8);
            if (is_even(c)) CHECK(c.is_self_orthogonal());
        });
    }
}

TEST_CASE("words with all coordinates odd") {
    auto ones8 = CodeZp2::from_generators(2, 8, {std::vector<long long>(8, 1)});
    auto w = contains_pm1(ones8);
    REQUIRE(w.has_value());
    CHECK(*w == Row(8, 1));

    CHECK_FALSE(contains_pm1(CodeZp2::zero(2, 4)).has_value());

    CodeZp2 c = CodeZp2::from_generators(2, 4, {{1, 1, 1, 3}, {0, 2, 0, 2}, {0, 0, 2, 2}});
    auto w2 = contains_pm1(c);
    bool scan_hit = false;
    c.codewords([&scan_hit](const Row& word) {
        scan_hit = std::all_of(word.begin(), word.end(),
                               [](uint32_t v) { return v % 2 == 1; });
        return !scan_hit;
    });
    CHECK(w2.has_value() == scan_hit);
    if (w2) CHECK(c.contains(*w2));

    // solver agrees with the exhaustive scan on random codes
    std::mt19937_64 rng(23);
    for (int rep = 0; rep < 60; ++rep) {
        CodeZp2 r = random_code(rng, 2, 1 + rng() % 5);
        bool hit = false;
        r.codewords([&hit](const Row& word) {
            hit = std::all_of(word.begin(), word.end(),
                              [](uint32_t v) { return v % 2 == 1; });
            return !hit;
        });
        auto found = contains_pm1(r);
        CHECK(found.has_value() == hit);
        if (found) {
            CHECK(r.contains(*found));
            for (uint32_t v : *found) CHECK(v % 2 == 1);
        }
    }
}

TEST_CASE("residue and torsion multiply to the cardinality") {
    std::mt19937_64 rng(29);
    for (int rep = 0; rep < 120; ++rep) {
        uint32_t p = (rng() & 1) ? 2 : 3;
        size_t n = 1 + rng() % 5;
        CodeZp2 c = random_code(rng, p, n);
        CHECK(c.residue().cardinality() * c.torsion().cardinality() == c.cardinality());
        CHECK(c.residue().subset_of(c.torsion()));
    }
}

TEST_CASE("self-orthogonal quaternary codes have doubly even residue") {
    for (size_t n = 1; n <= 4; ++n) {
        oracle_enumerate(2, n, OracleFamily::SelfOrthogonal, [](const CodeZp2& c) {
            FpCode res = c.residue(), tor = c.torsion();
            CHECK(res.is_doubly_even());
            CHECK(res.subset_of(tor));
            CHECK(tor.subset_of(res.dual()));
        });
    }
}

TEST_CASE("self-duality is self-orthogonality at full size") {
    CHECK(CodeZp2::from_generators(3, 1, {{3}}).is_self_dual());
    oracle_enumerate(2, 3, OracleFamily::SelfDual, [](const CodeZp2& c) {
        CHECK(c.is_self_orthogonal());
        CHECK(c == c.dual());
        CHECK(c.cardinality() == bigint_pow(2, 3));
    });
}

TEST_CASE("fp codes") {
    FpCode c = FpCode::from_rows(2, 4, {{1, 1, 0, 0}, {0, 0, 1, 1}});
    CHECK(c.dim() == 2);
    CHECK(c.dual().dim() == 2);
    CHECK(c.is_self_orthogonal());
    CHECK_FALSE(c.is_doubly_even());
    CHECK(c.contains({1, 1, 1, 1}));
    CHECK(c.contains_all_ones());

    FpCode d = FpCode::from_rows(2, 4, {{1, 1, 1, 1}});
    CHECK(d.is_doubly_even());
    CHECK(d.subset_of(c));
    CHECK_FALSE(c.subset_of(d));

    uint64_t count = 0;
    c.codewords([&count](const Row&) {
        ++count;
        return true;
    });
    CHECK(count == 4);
}

TEST_CASE("intermediate codes realize the gaussian count") {
    FpCode c1 = FpCode::from_rows(3, 4, {{1, 1, 1, 0}});
    for (size_t k2 = 0; k2 <= 2; ++k2) {
        auto mids = intermediate_codes(c1, k2);
        CHECK(Bigint(mids.size()) == gaussian(2, k2, 3));
        std::set<std::string> keys;
        for (const FpCode& c2 : mids) {
            CHECK(c1.subset_of(c2));
            CHECK(c2.subset_of(c1.dual()));
            CHECK(c2.dim() == c1.dim() + k2);
            keys.insert(c2.basis().key());
        }
        CHECK(keys.size() == mids.size());
    }
    CHECK_THROWS_AS(intermediate_codes(FpCode::from_rows(2, 2, {{1, 0}}), 1),
                    PreconditionError);
}

TEST_CASE("matrix text format round trip") {
    CodeZp2 c = CodeZp2::from_generators(3, 4, {{1, 1, 4, 0}, {0, 3, 6, 0}});
    std::string text = format_matrix_text(3, c.generators());
    std::istringstream in(text);
    MatrixText t = parse_matrix_text(in);
    CHECK(t.p == 3);
    CHECK(t.n == 4);
    CHECK(CodeZp2::from_generators(t.p, t.n, t.rows) == c);

    std::istringstream neg("3 2\n-1 10\n");
    MatrixText t2 = parse_matrix_text(neg);
    CHECK(CodeZp2::from_generators(t2.p, t2.n, t2.rows) ==
          CodeZp2::from_generators(3, 2, {{8, 1}}));

    std::istringstream bad("3\n");
    CHECK_THROWS_AS(parse_matrix_text(bad), ShapeError);
}
