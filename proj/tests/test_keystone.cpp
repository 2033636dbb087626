#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>

#include "lensurg/errors.hpp"
#include "lensurg/keystone.hpp"
#include "lensurg/surgery.hpp"
#include "support.hpp"
#include "worked.hpp"

using namespace lensurg;
using testing_support::ints;
using testing_support::worked_example;
using testing_support::worked_string;

namespace {

// Memoized search over subsets of remaining columns, trying every removable
// column at every step.
bool oracle_keystone(const IntMatrix& emb, int e) {
    const int n = static_cast<int>(emb.cols());
    std::map<unsigned, bool> memo;
    auto removable = [&](unsigned remaining, int c) {
        for (Eigen::Index i = 0; i < emb.rows(); ++i) {
            if (std::abs(emb(i, c)) != 1) continue;
            bool alone = true;
            for (int j = 0; j < n && alone; ++j)
                if (j != c && (remaining >> j & 1u) && emb(i, j) != 0) alone = false;
            if (alone) return true;
        }
        return false;
    };
    auto rec = [&](auto&& self, unsigned remaining) -> bool {
        if (remaining == 0) return true;
        if (auto it = memo.find(remaining); it != memo.end()) return it->second;
        bool ok = false;
        for (int c = 0; c < n && !ok; ++c)
            if ((remaining >> c & 1u) && removable(remaining, c)) ok = self(self, remaining & ~(1u << c));
        memo[remaining] = ok;
        return ok;
    };
    return rec(rec, ((1u << n) - 1) & ~(1u << e));
}

std::vector<int> oracle_keystones(const IntMatrix& emb) {
    std::vector<int> out;
    for (int e : two_support_basis(emb))
        if (oracle_keystone(emb, e)) out.push_back(e);
    return out;
}

LiscaString seed_string() { return {ints({-2, -2, -2}), StringType::T1, false, 0, 0, ints({2}), ints({2}), ""}; }

}  // namespace

TEST_CASE("seed") {
    auto emb = table_embedding(seed_string());
    auto report = keystone_set(emb);
    CHECK(report.e2 == std::vector<int>{0, 1, 2});
    CHECK(report.keystones == std::vector<int>{0, 1, 2});
    auto knot = suggested_knot(emb, ints({-2, -2, -2}), 0);
    CHECK(knot.epsilon == std::vector<int>{-1, 0, 1});
    CHECK(knot.framing == -1);
}

TEST_CASE("worked example keystones") {
    for (int n = 3; n <= 8; ++n) {
        INFO("n=", n);
        auto report = keystone_set(worked_example(n));
        CHECK(report.keystones == std::vector<int>{0, 1, 2, 4});
        CHECK_FALSE(is_keystone(worked_example(n), n + 2).has_value());
    }
    auto two = worked_example(2);
    auto knot = suggested_knot(two, worked_string(2), 0);
    CHECK(knot.epsilon == std::vector<int>{0, 0, -1, 0, 1});
    CHECK_THROWS_AS(suggested_knot(worked_example(4), worked_string(4), 3), DomainError);
}

TEST_CASE("witness replays the filtration") {
    auto emb = worked_example(5);
    for (int e : keystone_set(emb).keystones) {
        auto w = *is_keystone(emb, e);
        REQUIRE(w.order.size() == static_cast<std::size_t>(emb.cols()));
        std::vector<bool> remaining(static_cast<std::size_t>(emb.cols()), true);
        remaining[static_cast<std::size_t>(w.order[0])] = false;
        for (std::size_t k = 1; k < w.order.size(); ++k) {
            const int c = w.order[k];
            const int r = w.rows[k - 1];
            CHECK(std::abs(emb(r, c)) == 1);
            for (int j = 0; j < emb.cols(); ++j)
                if (j != c && remaining[static_cast<std::size_t>(j)]) CHECK(emb(r, j) == 0);
            remaining[static_cast<std::size_t>(c)] = false;
        }
    }
}

TEST_CASE("property: greedy keystone test agrees with exhaustive filtrations") {
    for (int ti = 1; ti <= 7; ++ti) {
        for (const auto& ls : generate_type_strings(static_cast<StringType>(ti), 9)) {
            auto emb = table_embedding(ls);
            INFO(format_terms(ls.coefficients));
            CHECK(keystone_set(emb).keystones == oracle_keystones(emb));
        }
    }
    // random unit-bounded matrices exercise the non-embedding case too
    for (int trial = 0; trial < 400; ++trial) {
        const int n = testing_support::uniform(2, 7);
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = testing_support::uniform(0, 3) == 0 ? testing_support::uniform(-1, 1) : 0;
        for (int e = 0; e < n; ++e) CHECK(is_keystone(m, e).has_value() == oracle_keystone(m, e));
    }
}

TEST_CASE("property: keystones move with column permutations and signs") {
    for (int n = 2; n <= 7; ++n) {
        IntMatrix emb = worked_example(n);
        const auto base = keystone_set(emb);
        for (int trial = 0; trial < 30; ++trial) {
            std::vector<int> perm(static_cast<std::size_t>(emb.cols()));
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), testing_support::rng());
            IntMatrix moved(emb.rows(), emb.cols());
            for (int c = 0; c < emb.cols(); ++c) {
                const int sign = testing_support::uniform(0, 1) ? 1 : -1;
                moved.col(perm[static_cast<std::size_t>(c)]) = sign * emb.col(c);
            }
            std::vector<int> expected;
            for (int e : base.keystones) expected.push_back(perm[static_cast<std::size_t>(e)]);
            std::sort(expected.begin(), expected.end());
            CHECK(keystone_set(moved).keystones == expected);
        }
    }
}

TEST_CASE("property: every suggested knot gives S1xS2 in homology") {
    for (int ti = 1; ti <= 7; ++ti) {
        for (const auto& ls : generate_type_strings(static_cast<StringType>(ti), 8)) {
            auto found = find_embeddings(form_from_string(ls.coefficients));
            REQUIRE(found.size() == 1);
            for (int e : keystone_set(found[0]).keystones) {
                auto knot = suggested_knot(found[0], ls.coefficients, e);
                auto r = verify_s1s2(knot.coefficients, knot.epsilon, knot.framing);
                INFO(format_terms(ls.coefficients), " e", e + 1);
                CHECK(r.pass);
            }
        }
    }
}
