#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "zp2/equivalence.hpp"

using namespace zp2;

namespace {

CodeZp2 random_code(std::mt19937_64& rng, uint32_t p, size_t n) {
    size_t rows = rng() % (n + 2);
    std::vector<std::vector<long long>> gen(rows, std::vector<long long>(n));
    for (auto& r : gen)
        for (auto& v : r) v = static_cast<long long>(rng() % (p * p));
    return CodeZp2::from_generators(p, n, gen);
}

// |Aut| the slow way: every permutation and every sign vector.
uint64_t brute_aut(const CodeZp2& c) {
    const size_t n = c.length();
    std::vector<uint32_t> perm(n);
    for (size_t i = 0; i < n; ++i) perm[i] = static_cast<uint32_t>(i);
    uint64_t count = 0;
    do {
        for (uint32_t mask = 0; mask < (uint32_t(1) << n); ++mask) {
            SignedMonomial g = SignedMonomial::identity(n);
            g.perm = perm;
            for (size_t j = 0; j < n; ++j)
                g.signs[j] = ((mask >> j) & 1) ? int8_t(-1) : int8_t(1);
            count += (apply(g, c) == c);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

std::multiset<uint64_t> euclidean_weights(const CodeZp2& c) {
    std::multiset<uint64_t> out;
    c.codewords([&out](const Row& w) {
        out.insert(euclidean_weight(w));
        return true;
    });
    return out;
}

}  // namespace

TEST_CASE("group laws on words and codes") {
    std::mt19937_64 rng(31);
    for (int rep = 0; rep < 50; ++rep) {
        size_t n = 1 + rng() % 6;
        uint32_t p = (rng() & 1) ? 2 : 3;
        SignedMonomial g = SignedMonomial::random(n, rng);
        SignedMonomial h = SignedMonomial::random(n, rng);
        Row w(n);
        for (auto& v : w) v = static_cast<uint32_t>(rng() % (p * p));
        CHECK(apply_word(g.after(h), w, p * p) ==
              apply_word(g, apply_word(h, w, p * p), p * p));
        CHECK(apply_word(g.inverse(), apply_word(g, w, p * p), p * p) == w);
        CHECK(g.after(g.inverse()) == SignedMonomial::identity(n));

        CodeZp2 c = random_code(rng, p, n);
        CHECK(apply(g.after(h), c) == apply(g, apply(h, c)));
        CHECK(apply(g.inverse(), apply(g, c)) == c);
    }
}

TEST_CASE("applying monomials to the worked-example code") {
    CodeZp2 c = CodeZp2::from_generators(3, 4, {{1, 1, 4, 0}, {0, 3, 6, 0}});
    CHECK(apply(SignedMonomial::identity(4), c) == c);

    // global negation fixes every code
    SignedMonomial neg = SignedMonomial::identity(4);
    for (auto& s : neg.signs) s = -1;
    CHECK(apply(neg, c) == c);

    SignedMonomial swap01 = SignedMonomial::identity(2);
    swap01.perm = {1, 0};
    CHECK(apply(swap01, CodeZp2::from_generators(2, 2, {{1, 2}})) ==
          CodeZp2::from_generators(2, 2, {{2, 1}}));
}

TEST_CASE("monomial action preserves the invariants") {
    std::mt19937_64 rng(37);
    for (int rep = 0; rep < 40; ++rep) {
        uint32_t p = (rng() & 1) ? 2 : 3;
        size_t n = 1 + rng() % 5;
        CodeZp2 c = random_code(rng, p, n);
        SignedMonomial g = SignedMonomial::random(n, rng);
        CodeZp2 d = apply(g, c);
        CHECK(d.k1() == c.k1());
        CHECK(d.k2() == c.k2());
        CHECK(d.cardinality() == c.cardinality());
        CHECK(d.is_self_orthogonal() == c.is_self_orthogonal());
        if (p == 2) {
            CHECK(is_even(d) == is_even(c));
            CHECK(euclidean_weights(d) == euclidean_weights(c));
        }
    }
}

TEST_CASE("automorphism orders of the published representatives") {
    CHECK(aut_order(CodeZp2::from_generators(3, 4, {{1, 1, 4, 0}, {0, 3, 6, 0}})) == 24);
    CHECK(aut_order(CodeZp2::from_generators(3, 4, {{1, 7, 7, 0}, {0, 0, 0, 3}})) == 8);
}

TEST_CASE("zero and full codes are fixed by the whole group") {
    for (size_t n = 1; n <= 4; ++n) {
        Bigint order = monomial_group_order(n);
        CHECK(Bigint(aut_order(CodeZp2::zero(2, n))) == order);
        CHECK(Bigint(aut_order(CodeZp2::zero(3, n))) == order);
    }
}

TEST_CASE("backtracking count equals full group enumeration") {
    std::mt19937_64 rng(41);
    for (int rep = 0; rep < 30; ++rep) {
        uint32_t p = (rng() & 1) ? 2 : 3;
        size_t n = 1 + rng() % 3;
        CodeZp2 c = random_code(rng, p, n);
        CHECK(aut_order(c) == brute_aut(c));
    }
}

TEST_CASE("automorphism order is a class function and divides |E|") {
    std::mt19937_64 rng(43);
    for (int rep = 0; rep < 20; ++rep) {
        uint32_t p = (rng() & 1) ? 2 : 3;
        size_t n = 2 + rng() % 4;
        CodeZp2 c = random_code(rng, p, n);
        uint64_t a = aut_order(c);
        CHECK(monomial_group_order(n) % a == 0);
        SignedMonomial g = SignedMonomial::random(n, rng);
        CHECK(aut_order(apply(g, c)) == a);
    }
}

TEST_CASE("equivalence witnesses") {
    std::mt19937_64 rng(47);
    for (int rep = 0; rep < 25; ++rep) {
        uint32_t p = (rng() & 1) ? 2 : 3;
        size_t n = 1 + rng() % 5;
        CodeZp2 c = random_code(rng, p, n);
        SignedMonomial g = SignedMonomial::random(n, rng);
        CodeZp2 d = apply(g, c);
        auto w = are_equivalent(c, d);
        REQUIRE(w.has_value());
        CHECK(apply(*w, c) == d);
    }
}

TEST_CASE("the worked-example representatives are pairwise inequivalent") {
    std::vector<CodeZp2> reps = {
        CodeZp2::from_generators(3, 4, {{1, 1, 4, 0}, {0, 3, 6, 0}}),
        CodeZp2::from_generators(3, 4, {{1, 1, 4, 3}, {0, 3, 6, 0}}),
        CodeZp2::from_generators(3, 4, {{1, 1, 4, 6}, {0, 3, 6, 3}}),
        CodeZp2::from_generators(3, 4, {{1, 7, 7, 0}, {0, 0, 0, 3}}),
    };
    for (size_t i = 0; i < reps.size(); ++i)
        for (size_t j = i + 1; j < reps.size(); ++j)
            CHECK_FALSE(are_equivalent(reps[i], reps[j]).has_value());

    // distinct types are rejected without search
    CHECK_FALSE(are_equivalent(CodeZp2::zero(3, 4), reps[0]).has_value());
    CHECK_THROWS_AS(are_equivalent(CodeZp2::zero(3, 4), CodeZp2::zero(3, 3)), DomainError);
}

TEST_CASE("classification of the worked example") {
    ClassificationResult r = classify(3, 4, ClassFamily::SelfOrthogonal, 1, 1);
    CHECK(r.representatives.size() == 4);
    CHECK(r.family_size == 192);
    std::multiset<uint64_t> orders;
    for (const auto& rep : r.representatives) orders.insert(rep.aut_order);
    CHECK(orders == std::multiset<uint64_t>{4, 8, 12, 24});
    CHECK(boost::multiprecision::numerator(r.mass_sum) == 192);
    CHECK(r.expected_mass == 192);
    CHECK(r.certified);

    // the published matrices appear, one per class, up to equivalence
    std::vector<CodeZp2> paper_reps = {
        CodeZp2::from_generators(3, 4, {{1, 1, 4, 0}, {0, 3, 6, 0}}),
        CodeZp2::from_generators(3, 4, {{1, 1, 4, 3}, {0, 3, 6, 0}}),
        CodeZp2::from_generators(3, 4, {{1, 1, 4, 6}, {0, 3, 6, 3}}),
        CodeZp2::from_generators(3, 4, {{1, 7, 7, 0}, {0, 0, 0, 3}}),
    };
    for (const CodeZp2& pub : paper_reps) {
        size_t hits = 0;
        for (const auto& rep : r.representatives)
            hits += are_equivalent(pub, rep.code).has_value();
        CHECK(hits == 1);
    }
}

TEST_CASE("trivial classifications") {
    ClassificationResult r = classify(2, 4, ClassFamily::SelfOrthogonal, 0, 0);
    CHECK(r.representatives.size() == 1);
    CHECK(r.certified);
    CHECK(r.representatives[0].code == CodeZp2::zero(2, 4));
    CHECK(Bigint(r.representatives[0].aut_order) == monomial_group_order(4));
}

TEST_CASE("classification of a tiny all-ones family") {
    ClassificationResult r = classify(2, 8, ClassFamily::EvenOne, 1, 0);
    CHECK(r.family_size == 1);
    CHECK(r.representatives.size() == 1);
    CHECK(r.expected_mass == 1);
    CHECK(r.certified);
    // the lone member is the span of the all-ones word
    CHECK(r.representatives[0].code ==
          CodeZp2::from_generators(2, 8, {std::vector<long long>(8, 1)}));
}

TEST_CASE("budget refusals carry an estimate") {
    EquivBudget tiny;
    tiny.max_n = 3;
    CHECK_THROWS_AS(aut_order(CodeZp2::zero(2, 4), tiny), BudgetError);
    CHECK_THROWS_AS(classify(2, 4, ClassFamily::SelfOrthogonal, 0, 0, tiny), BudgetError);
}

TEST_CASE("classification serialization") {
    ClassificationResult r = classify(3, 4, ClassFamily::SelfOrthogonal, 1, 1);
    std::string json = r.to_json();
    CHECK(json.find("\"family\":\"self-orthogonal\"") != std::string::npos);
    CHECK(json.find("\"certified\":true") != std::string::npos);
    CHECK(json.find("\"mass_sum\":\"192\"") != std::string::npos);
    CHECK(json.find("\"aut_order\"") != std::string::npos);
}
