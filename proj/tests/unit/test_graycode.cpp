#include "doctest.h"

#include <algorithm>
#include <set>

#include "hamcube/graycode.hpp"
#include "hamcube/random.hpp"

using namespace hamcube;

namespace {

const TransitionSequence kSeq3Golden{3, {1, 2, 1, 3, 1, 2, 1, 3}};
const TransitionSequence kSeq4Golden{4, {2, 3, 4, 1, 4, 3, 2, 3, 1, 4, 1, 3, 2, 1, 2, 4}};

// transition sequence of the standard reflected 4-bit code
TransitionSequence standard_code4() {
    std::vector<int> seq;
    for (Word i = 1; i <= 16; ++i) {
        const Word prev = (i - 1) ^ ((i - 1) >> 1);
        const Word cur = (i % 16) ^ ((i % 16) >> 1);
        int bit = 0;
        for (Word diff = prev ^ cur; diff > 1; diff >>= 1) ++bit;
        seq.push_back(bit + 1);
    }
    return {4, seq};
}

} // namespace

TEST_SUITE("graycode") {

TEST_CASE("transition counts") {
    CHECK(transition_counts({3, {3, 1, 3, 2, 3, 1, 3, 2}}) == std::vector<int>{2, 2, 4});
    CHECK(transition_counts(standard_code4()) == std::vector<int>{8, 4, 2, 2});
    CHECK(transition_counts({1, {1, 1}}) == std::vector<int>{2});
}

TEST_CASE("cyclic gray detection") {
    CHECK(is_cyclic_gray(kSeq3Golden));
    CHECK(is_cyclic_gray(kSeq4Golden));
    CHECK(is_cyclic_gray(standard_code4()));
    CHECK_FALSE(is_cyclic_gray({2, {1, 1, 2, 2}}));
    CHECK_FALSE(is_cyclic_gray({2, {1, 2, 2, 1}}));
    CHECK_THROWS_AS(is_cyclic_gray(TransitionSequence{2, {1, 2, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(is_cyclic_gray(TransitionSequence{2, {1, 2, 1, 3}}), std::invalid_argument);
}

TEST_CASE("balance classes") {
    CHECK(balance_class(kSeq4Golden) == BalanceClass::TotallyBalanced);
    CHECK(balance_class({3, {3, 1, 3, 2, 3, 1, 3, 2}}) == BalanceClass::Balanced);
    CHECK(balance_class(standard_code4()) == BalanceClass::Unbalanced);
}

TEST_CASE("balance targets") {
    const auto t3 = balance_targets(3);
    CHECK(t3.targets == std::vector<int>{2, 2, 4});
    CHECK(t3.a == 2);
    CHECK(t3.c == 2);
    CHECK(t3.d == 1);

    CHECK(balance_targets(4).targets == std::vector<int>{4, 4, 4, 4});
    CHECK(balance_targets(5).targets == std::vector<int>{6, 6, 8, 6, 6});
    CHECK(balance_targets(6).targets == std::vector<int>{10, 10, 10, 10, 12, 12});
    CHECK(balance_targets(7).targets == std::vector<int>{18, 18, 20, 18, 18, 18, 18});

    const auto t8 = balance_targets(8);
    CHECK(t8.a == 32);
    CHECK(t8.c == 8);
    CHECK(t8.d == 0);
    CHECK(t8.targets == std::vector<int>(8, 32));

    CHECK_THROWS_AS(balance_targets(2), std::domain_error);
}

TEST_CASE("plan for the two-bit base") {
    const TransitionSequence s2{2, {1, 2, 1, 2}};
    const auto plan = solve_plan(s2, balance_targets(4), 0);
    CHECK(plan.z == std::vector<int>{0, 0});
    CHECK(plan.t == std::vector<int>{2, 2});
    CHECK(plan.l == 4);
    CHECK(plan.singleton_positions == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("plan for the one-bit base") {
    const TransitionSequence s1{1, {1, 1}};
    const auto plan = solve_plan(s1, balance_targets(3), 0);
    CHECK(plan.z == std::vector<int>{0});
    CHECK(plan.t == std::vector<int>{2});
    CHECK(plan.l == 2);
    CHECK(plan.singleton_positions == std::vector<int>{1, 2});
}

TEST_CASE("plan splits for a three-bit code with counts [2,2,4]") {
    const TransitionSequence s{3, {3, 1, 3, 2, 3, 1, 3, 2}};
    const auto plan = solve_plan(s, balance_targets(5), 7);
    CHECK(plan.z == std::vector<int>{1, 1, 0});
    CHECK(plan.t == std::vector<int>{1, 1, 4});
    CHECK(plan.l == 6);
    CHECK(static_cast<int>(plan.singleton_positions.size()) == plan.l);
    CHECK(plan.singleton_positions.front() == 1);
    CHECK(plan.singleton_positions[1] == 2);
    CHECK(plan.singleton_positions.back() == 8);
}

TEST_CASE("extension reproduces the golden base cases") {
    const auto plan3 = solve_plan({1, {1, 1}}, balance_targets(3), 0);
    CHECK(robinson_cohn_extend({1, {1, 1}}, plan3).seq == kSeq3Golden.seq);

    const auto plan4 = solve_plan({2, {1, 2, 1, 2}}, balance_targets(4), 0);
    CHECK(robinson_cohn_extend({2, {1, 2, 1, 2}}, plan4).seq == kSeq4Golden.seq);
}

TEST_CASE("extension output is cyclic for seeded plans") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const TransitionSequence s3 = build_balanced_code(3, seed);
        const auto plan = solve_plan(s3, balance_targets(5), seed);
        const auto s5 = robinson_cohn_extend(s3, plan);
        CHECK(s5.seq.size() == 32);
        CHECK(is_cyclic_gray(s5));
    }
}

TEST_CASE("extension rejects inconsistent plans") {
    const auto plan = solve_plan({1, {1, 1}}, balance_targets(3), 0);
    ExtensionPlan broken = plan;
    broken.singleton_positions = {1, 2, 2};
    CHECK_THROWS_AS(robinson_cohn_extend({2, {1, 2, 1, 2}}, broken), ConstructionError);
    broken = plan;
    broken.t = {1};
    broken.z = {1};
    CHECK_THROWS_AS(robinson_cohn_extend({1, {1, 1}}, broken), ConstructionError);
}

TEST_CASE("golden codes are seed independent") {
    for (std::uint64_t seed : {0ull, 1ull, 42ull, 12345ull}) {
        CHECK(build_balanced_code(3, seed).seq == kSeq3Golden.seq);
        CHECK(build_balanced_code(4, seed).seq == kSeq4Golden.seq);
    }
}

TEST_CASE("built codes are balanced cyclic gray codes") {
    for (int n = 3; n <= 12; ++n) {
        const auto targets = balance_targets(n);
        std::multiset<int> expected(targets.targets.begin(), targets.targets.end());
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            const auto s = build_balanced_code(n, seed);
            CAPTURE(n);
            CAPTURE(seed);
            REQUIRE(is_cyclic_gray(s));
            const auto tc = transition_counts(s);
            const auto [lo, hi] = std::minmax_element(tc.begin(), tc.end());
            CHECK(*hi - *lo <= 2);
            for (int c : tc) CHECK((c == targets.a || c == targets.a + 2));
            CHECK(std::multiset<int>(tc.begin(), tc.end()) == expected);
        }
    }
}

TEST_CASE("length doubles and new bits occur l times") {
    TransitionSequence s{1, {1, 1}};
    for (int m = 3; m <= 11; m += 2) {
        const auto plan = solve_plan(s, balance_targets(m), 99);
        const auto next = robinson_cohn_extend(s, plan);
        CHECK(next.seq.size() == 4 * s.seq.size());
        const auto tc = transition_counts(next);
        CHECK(tc[m - 2] == plan.l);
        CHECK(tc[m - 1] == plan.l);
        s = next;
    }
}

TEST_CASE("walk touches every codeword once") {
    const auto s = build_balanced_code(8, 5);
    const auto words = codewords(s);
    CHECK(words.size() == 256);
    CHECK(std::set<Word>(words.begin(), words.end()).size() == 256);
    CHECK(words.front() == 0);
}

TEST_CASE("determinism given seed") {
    const auto a = build_balanced_code(9, 1234);
    const auto b = build_balanced_code(9, 1234);
    const auto c = build_balanced_code(9, 1235);
    CHECK(a.seq == b.seq);
    CHECK(a.seq != c.seq);
}

TEST_CASE("nine-bit counts land on the computed pair") {
    // a_9 = 2*floor(512/18) = 56, d_9 = (512 - 9*56)/2 = 4, c_9 = 5
    const auto t9 = balance_targets(9);
    CHECK(t9.a == 56);
    CHECK(t9.c == 5);
    CHECK(t9.d == 4);
    const auto s = build_balanced_code(9, 0);
    const auto tc = transition_counts(s);
    CHECK(std::count(tc.begin(), tc.end(), 56) == 5);
    CHECK(std::count(tc.begin(), tc.end(), 58) == 4);
}

TEST_CASE("serialization round trip") {
    const auto s = build_balanced_code(6, 3);
    const auto parsed = sequence_from_line(to_line(s));
    CHECK(parsed.n_bits == s.n_bits);
    CHECK(parsed.seq == s.seq);
    CHECK(to_line(kSeq3Golden) == "1,2,1,3,1,2,1,3");
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(build_balanced_code(2, 0), std::domain_error);
    CHECK_THROWS_AS(build_balanced_code(21, 0), std::domain_error);
}

} // TEST_SUITE
