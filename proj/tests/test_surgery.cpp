#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "lensurg/errors.hpp"
#include "lensurg/snf.hpp"
#include "lensurg/surgery.hpp"
#include "support.hpp"

using namespace lensurg;
using testing_support::ints;

namespace {

Integer det_laplace(const Matrix<Integer>& m) {
    const Eigen::Index n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    Integer total = 0;
    for (Eigen::Index j = 0; j < n; ++j) {
        if (m(0, j) == 0) continue;
        Matrix<Integer> minor(n - 1, n - 1);
        for (Eigen::Index r = 1; r < n; ++r)
            for (Eigen::Index c = 0, cc = 0; c < n; ++c)
                if (c != j) minor(r - 1, cc++) = m(r, c);
        const Integer term = m(0, j) * det_laplace(minor);
        total += j % 2 == 0 ? term : Integer(-term);
    }
    return total;
}

void subsets(int n, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (int i = start; i < n; ++i) {
        cur.push_back(i);
        subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

// Invariant factors from determinantal divisors: d_k = gcd of all k x k minors.
std::vector<Integer> oracle_snf(const Matrix<Integer>& m) {
    const int rows = static_cast<int>(m.rows());
    const int cols = static_cast<int>(m.cols());
    std::vector<Integer> out;
    Integer prev = 1;
    for (int k = 1; k <= std::min(rows, cols); ++k) {
        std::vector<std::vector<int>> rs, cs;
        std::vector<int> cur;
        subsets(rows, k, 0, cur, rs);
        subsets(cols, k, 0, cur, cs);
        Integer g = 0;
        for (const auto& r : rs)
            for (const auto& c : cs) {
                Matrix<Integer> sub(k, k);
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j) sub(i, j) = m(r[i], c[j]);
                g = gcd(g, det_laplace(sub));
            }
        if (g == 0) {
            out.resize(static_cast<std::size_t>(std::min(rows, cols)), 0);
            return out;
        }
        out.push_back(g / prev);
        prev = g;
    }
    return out;
}

std::vector<std::vector<Integer>> b_sequences(int length) {
    std::vector<std::vector<Integer>> out{{}};
    for (int i = 0; i < length; ++i) {
        std::vector<std::vector<Integer>> next;
        for (const auto& v : out)
            for (int x = 2; x <= 5; ++x) {
                auto w = v;
                w.push_back(x);
                next.push_back(w);
            }
        out = std::move(next);
    }
    return out;
}

bool pm(const Integer& x, const Integer& y, const Integer& p) { return floor_mod(x - y, p) == 0 || floor_mod(x + y, p) == 0; }

}  // namespace

TEST_CASE("smith normal form examples") {
    Matrix<Integer> m(2, 2);
    m << 2, 4, 6, 8;
    CHECK(smith_diagonal<Integer>(m) == ints({2, 4}));
    Matrix<Integer> z = Matrix<Integer>::Zero(2, 3);
    CHECK(smith_diagonal<Integer>(z) == ints({0, 0}));
    auto [torsion, free] = cokernel_summary<Integer>(m);
    CHECK(torsion == ints({2, 4}));
    CHECK(free == 0);
}

TEST_CASE("property: smith diagonal matches determinantal divisors") {
    for (int trial = 0; trial < 400; ++trial) {
        const int r = testing_support::uniform(1, 4), c = testing_support::uniform(1, 4);
        Matrix<Integer> m(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) m(i, j) = testing_support::uniform(-6, 6);
        auto d = smith_diagonal<Integer>(m);
        CHECK(d == oracle_snf(m));
        for (std::size_t i = 0; i + 1 < d.size(); ++i)
            if (d[i] != 0) CHECK(d[i + 1] % d[i] == 0);
    }
}

TEST_CASE("meridian classes") {
    auto a = meridian_classes(ints({-2, -2}));
    CHECK(a.order == 3);
    CHECK(a.classes == ints({1, 2}));

    auto b = meridian_classes(ints({2, -2, -2, -3, -2, 1}));
    CHECK(b.order == 49);
    CHECK(b.classes == ints({1, 47, 44, 41, 30, 19}));
    CHECK(b.q_inverse == 19);
    CHECK(b.q == 31);
    CHECK(b.lens == normalize(49, 31));

    auto c = meridian_classes(ints({0}));
    CHECK(c.degenerate);
    CHECK(c.order == 0);
    CHECK(c.lens == normalize(0, 1));
    CHECK_THROWS_AS(knot_class(ints({0}), ints({1})), DegenerateCokernel);
    CHECK_THROWS_AS(knot_class(ints({-2, -2}), ints({1})), DimensionMismatch);
}

TEST_CASE("property: q times P_(n-1) is 1 mod p") {
    for (int trial = 0; trial < 2000; ++trial) {
        auto f = testing_support::random_terms(9, -6, 6, 1);
        auto mc = meridian_classes(f);
        if (mc.degenerate || mc.order == 1) continue;
        INFO(format_terms(f));
        CHECK(floor_mod(mc.q * mc.q_inverse, mc.order) == 1);
        // mu_1 = q mu_n
        CHECK(floor_mod(mc.q * mc.classes.back() - 1, mc.order) == 0);
    }
}

TEST_CASE("knot classes for the palindromic families") {
    auto bgi = knot_class(ints({-2, -2, -1, 2, 2}), ints({0, 0, -1, 0, 0}));
    CHECK(bgi.in_first == 6);
    CHECK(pm(bgi.in_first, 3, 9));
    auto gofk = knot_class(ints({-2, -2, -1, 2, 2}), ints({1, 0, 0, 0, -1}));
    CHECK(pm(gofk.in_first, 6, 9));

    auto row = theorem16_instance(DualFamily::GOFK, {ints({2, 2}), 0, 0});
    CHECK(row.lens == normalize(9, 7));
    CHECK(row.match);
    CHECK(pm(row.computed.in_first, 6, 9));

    auto bgii = theorem16_instance(DualFamily::BGII, {ints({2}), 0, 0});
    CHECK(bgii.lens == normalize(16, 9));
    CHECK(bgii.m == 4);
    CHECK(bgii.d == 2);
    CHECK(pm(bgii.computed.in_first, 4, 16));
    CHECK(bgii.match);
}

TEST_CASE("knot classes for the six-component families") {
    auto spor = theorem16_instance(DualFamily::SPOR, {{}, 0, 1});
    CHECK(spor.lens == normalize(49, 31));
    CHECK(spor.computed.in_first == 28);
    CHECK(spor.computed.in_last == 35);
    CHECK(spor.match);

    auto bgiii = theorem16_instance(DualFamily::BGIII, {{}, 0, 1});
    CHECK(bgiii.lens == normalize(49, 31));
    CHECK(pm(bgiii.computed.in_first, 7, 49));
    CHECK(pm(bgiii.computed.in_last, 28, 49));
    CHECK(bgiii.match);

    CHECK_THROWS_AS(theorem16_instance(DualFamily::SPOR, {{}, 0, 2}), DomainError);
    CHECK_THROWS_AS(theorem16_instance(DualFamily::BGI, {{}, 0, 0}), DomainError);
    CHECK(parse_dual_family("BGIV'") == DualFamily::BGIVp);
    CHECK_FALSE(parse_dual_family("BGVI").has_value());
}

TEST_CASE("L(25,7) classes") {
    // s = -3, t = 1 is the n = -1 member of the sporadic line
    auto spor = theorem16_instance(DualFamily::SPOR, {{}, -3, 1});
    auto bgiii = theorem16_instance(DualFamily::BGIII, {{}, -3, 1});
    auto bgv = theorem16_instance(DualFamily::BGV, {{}, -3, 1});
    CHECK(spor.lens.p == 25);
    for (const auto* r : {&spor, &bgiii}) CHECK(pm(r->computed.in_last, 10, 25));
    CHECK(pm(bgv.computed.in_last, 5, 25));
    CHECK(is_homeomorphic(spor.lens, normalize(25, 7), false).homeomorphic);
}

TEST_CASE("property: every family instance in the sweep matches") {
    int count = 0;
    for (int len : {2, 4})
        for (const auto& b : b_sequences(len))
            for (auto f : {DualFamily::BGI, DualFamily::GOFK}) {
                auto row = theorem16_instance(f, {b, 0, 0});
                INFO(dual_family_name(f), " ", row.params.str(f));
                CHECK(row.match);
                ++count;
            }
    for (int len : {1, 2})
        for (const auto& b : b_sequences(len)) {
            auto row = theorem16_instance(DualFamily::BGII, {b, 0, 0});
            INFO(row.params.str(DualFamily::BGII));
            CHECK(row.match);
            ++count;
        }
    for (int s = 0; s <= 6; ++s)
        for (int t = 0; t <= 6; ++t)
            for (auto f : {DualFamily::BGIII, DualFamily::BGV, DualFamily::BGIV, DualFamily::BGIVp}) {
                auto row = theorem16_instance(f, {{}, s, t});
                INFO(dual_family_name(f), " s=", s, " t=", t);
                CHECK(row.match);
                ++count;
            }
    for (int s = 0; s <= 6; ++s) CHECK(theorem16_instance(DualFamily::SPOR, {{}, s, 1}).match);
    CHECK(count > 0);
}

TEST_CASE("S1xS2 homology check") {
    auto good = verify_s1s2(ints({-2, -2, -2}), std::vector<int>{-1, 0, 1}, -1);
    CHECK(good.pass);
    CHECK(good.snf == ints({1, 1, 1, 0}));

    auto bad = verify_s1s2(ints({-2, -2, -2}), std::vector<int>{1, 0, 1}, -1);
    CHECK_FALSE(bad.pass);
    CHECK(bad.snf == ints({1, 1, 1, 4}));
    CHECK(det_laplace(extended_linking_matrix(ints({-2, -2, -2}), std::vector<int>{1, 0, 1}, -1)) == -4);

    CHECK(verify_s1s2(ints({}), std::vector<int>{}, 0).pass);
    CHECK_FALSE(verify_s1s2(ints({}), std::vector<int>{}, 1).pass);
    CHECK_THROWS_AS(verify_s1s2(ints({-2}), std::vector<int>{1, 0}, -1), DimensionMismatch);
}

TEST_CASE("property: S1xS2 check is invariant under sign flip and handle slides") {
    for (int trial = 0; trial < 500; ++trial) {
        auto f = testing_support::random_terms(6, -4, -2, 1);
        const int n = static_cast<int>(f.size());
        std::vector<int> eps(static_cast<std::size_t>(n));
        for (int& x : eps) x = testing_support::uniform(-1, 1);
        const Integer framing = testing_support::uniform(-3, 1);
        const auto base = verify_s1s2(f, eps, framing);

        std::vector<int> flipped = eps;
        for (int& x : flipped) x = -x;
        CHECK(verify_s1s2(f, flipped, framing).snf == base.snf);

        // sliding the knot over component j changes epsilon by c times row j
        // of the chain matrix and the framing by c^2 a_jj + 2 c eps_j
        for (int j = 0; j < n; ++j) {
            for (int c : {1, -1}) {
                std::vector<int> slid = eps;
                slid[static_cast<std::size_t>(j)] += c * f[static_cast<std::size_t>(j)].convert_to<int>();
                if (j > 0) slid[static_cast<std::size_t>(j - 1)] += c;
                if (j + 1 < n) slid[static_cast<std::size_t>(j + 1)] += c;
                const Integer fr = framing + f[static_cast<std::size_t>(j)] + 2 * c * eps[static_cast<std::size_t>(j)];
                INFO(format_terms(f), " j=", j, " c=", c);
                CHECK(verify_s1s2(f, slid, fr).snf == base.snf);
                if (f[static_cast<std::size_t>(j)] == -2 && eps[static_cast<std::size_t>(j)] == c) CHECK(fr == framing);
            }
        }
    }
}

TEST_CASE("simple knot equivalence") {
    CHECK(simple_knot_equivalent({16, 9, 4}, {16, 9, 12}));
    // 6 = -3 mod 9, so negation alone relates these
    CHECK(simple_knot_equivalent({9, 7, 6}, {9, 7, 3}));
    CHECK_FALSE(simple_knot_equivalent({9, 7, 1}, {9, 7, 3}));
    for (int x : {14, 7, 21})
        for (int y : {14, 7, 21})
            if (x != y) CHECK_FALSE(simple_knot_equivalent({49, 31, x}, {49, 31, y}));

    CHECK_FALSE(simple_knot_equivalent({25, 7, 10}, {25, 7, 5}));
    CHECK(simple_knot_equivalent({25, 7, 10}, {25, 7, 5}, {true}));
    CHECK_FALSE(simple_knot_equivalent({16, 9, 4}, {25, 7, 4}));

    // L(4,3) and L(4,1) differ by orientation
    CHECK_FALSE(simple_knot_equivalent({4, 3, 2}, {4, 1, 2}));
    CHECK(simple_knot_equivalent({4, 3, 2}, {4, 1, 2}, {true}));
    CHECK(simple_knot_equivalent({16, 9, 1}, {16, 9, 9}));
    // L(49,30) is L(49,31) with reversed orientation and swapped tori
    CHECK(simple_knot_equivalent({49, 31, 7}, {49, 30, 14}, {true}));
    CHECK_FALSE(simple_knot_equivalent({49, 31, 7}, {49, 30, 14}));
    CHECK_FALSE(simple_knot_equivalent({49, 31, 1}, {49, 30, 1}, {true}));
    // L(49,19) is L(49,31) with the tori swapped
    CHECK(simple_knot_equivalent({49, 31, 1}, {49, 19, 19}));
}

TEST_CASE("property: simple knot equivalence is an equivalence relation") {
    for (int p : {9, 16, 25, 49, 50}) {
        std::vector<SimpleKnotClass> all;
        for (int q = 1; q < p; ++q)
            if (gcd(p, q) == 1)
                for (int k = 0; k < p; ++k) all.push_back({p, q, k});
        for (bool toggle : {false, true}) {
            const SymmetryOptions opt{toggle};
            for (int trial = 0; trial < 3000; ++trial) {
                const auto& a = all[static_cast<std::size_t>(testing_support::uniform(0, static_cast<int>(all.size()) - 1))];
                const auto& b = all[static_cast<std::size_t>(testing_support::uniform(0, static_cast<int>(all.size()) - 1))];
                CHECK(simple_knot_equivalent(a, a, opt));
                CHECK(simple_knot_equivalent(a, b, opt) == simple_knot_equivalent(b, a, opt));
            }
        }
    }
}

TEST_CASE("torus knot and cable surgeries") {
    CHECK(torus_knot_surgery(2, 1, 1) == normalize(4, 3));
    CHECK(is_homeomorphic(torus_knot_surgery(2, 1, 1), normalize(4, 1), false).homeomorphic);
    CHECK(cable_surgery(2, 1, 1) == normalize(16, 9));
    CHECK(cable_surgery(2, 1, -1) == normalize(16, 7));
    for (int n = 1; n <= 9; ++n) CHECK(torus_knot_surgery(1, 0, n) == normalize(n, 1));
    CHECK_THROWS_AS(torus_knot_surgery(2, 4, 1), InvalidPair);
    CHECK_THROWS_AS(torus_knot_surgery(2, 1, 0), InvalidPair);
    CHECK_THROWS_AS(cable_surgery(2, 1, 0), InvalidPair);
}
