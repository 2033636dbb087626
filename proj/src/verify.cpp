#include "lensurg/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <set>

#include "lensurg/cfrac.hpp"
#include "lensurg/io.hpp"
#include "lensurg/keystone.hpp"
#include "lensurg/lens.hpp"
#include "lensurg/lisca.hpp"
#include "lensurg/parallel.hpp"
#include "lensurg/surgery.hpp"

namespace lensurg {

namespace {

using Clock = std::chrono::steady_clock;

std::string terms_arg(std::span<const Integer> terms) { return "-- " + format_terms(terms); }

std::string lens_arg(const OrientedLensSpace& L) { return to_string(L.p) + "/" + to_string(L.q); }

// Runs `body`, times it and settles pass/fail from the findings and budget.
CriterionResult run_criterion(int id, std::string title, std::optional<double> budget,
                              const std::function<void(CriterionResult&)>& body) {
    CriterionResult r;
    r.id = id;
    r.title = std::move(title);
    r.budget_seconds = budget;
    const auto start = Clock::now();
    try {
        body(r);
    } catch (const std::exception& e) {
        r.failures.push_back({"criterion " + std::to_string(id), std::string("exception: ") + e.what(),
                              "lensurg verify all --only " + std::to_string(id)});
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    r.pass = r.failures.empty();
    if (budget && r.seconds > *budget) {
        r.pass = false;
        r.failures.push_back({"runtime", "took " + std::to_string(r.seconds) + " s, budget " + std::to_string(*budget) + " s",
                              "lensurg verify all --only " + std::to_string(id) + " --timing"});
    }
    return r;
}

bool snf_is_s1s2(const std::vector<Integer>& snf) {
    if (snf.empty() || snf.back() != 0) return false;
    for (std::size_t i = 0; i + 1 < snf.size(); ++i)
        if (snf[i] != 1) return false;
    return true;
}

std::string join(const std::vector<Integer>& xs) { return format_terms(xs); }

}  // namespace

// ---------------------------------------------------------------------------
// 1. continued fractions

CriterionResult check_continued_fractions(const VerifyConfig& config) {
    return run_criterion(1, "continued-fraction identities", 10.0, [&](CriterionResult& r) {
        std::mt19937_64 gen(0x5eed);
        std::uniform_int_distribution<int> term(-5, 5);
        auto random_terms = [&](int lo_len, int hi_len) {
            CFExpansion t(static_cast<std::size_t>(std::uniform_int_distribution<int>(lo_len, hi_len)(gen)));
            for (auto& x : t) x = term(gen);
            return t;
        };
        auto fail = [&](const CFExpansion& t, const std::string& what) {
            r.failures.push_back({format_terms(t), what, config.program + " cf eval " + terms_arg(t)});
        };

        std::size_t identities = 0;
        for (int k = 0; k < config.cf_cases; ++k) {
            const CFExpansion t = random_terms(1, 10);
            const ConvergentTable table = convergents(t);
            const long n = static_cast<long>(t.size());
            for (long i = 1; i <= n; ++i) {
                if (table.P(i - 1) * table.Q(i) - table.P(i) * table.Q(i - 1) != 1) fail(t, "determinant identity at i=" + std::to_string(i));
                if (table.q(i) != table.p(i - 1)) fail(t, "backward convergent q_i != p_(i-1) at i=" + std::to_string(i));
                identities += 2;
            }
        }

        for (int k = 0; k < config.cf_cases; ++k) {
            const CFExpansion b = random_terms(0, 4);
            const Integer c = term(gen);
            const CFExpansion pal = palindrome(b, c);
            const ConvergentTable half = convergents(b);
            // p_i/q_i = [-b_i, ..., -b_1], the backward convergents of -b
            CFExpansion negated;
            for (const auto& x : b) negated.push_back(-x);
            const ConvergentTable tail = convergents(negated);
            for (long i = 1; i <= static_cast<long>(b.size()); ++i) {
                const Integer expected = i % 2 == 0 ? half.P(i) : Integer(-half.P(i));
                if (tail.p(i) != expected) fail(pal, "sign identity p_i = (-1)^i P_i at i=" + std::to_string(i));
                ++identities;
            }
            // the closed form needs c P Q + 1 and c P^2 not both zero
            const Integer P = half.P(static_cast<long>(b.size()));
            const Integer Q = half.Q(static_cast<long>(b.size()));
            if (c * P * P == 0 && c * P * Q + 1 == 0) continue;
            if (palindrome_value(b, c) != eval_cf(pal)) fail(pal, "palindrome closed form c P^2 / (c P Q + 1)");
            ++identities;
        }
        r.checked = identities;
        r.summary = std::to_string(2 * config.cf_cases) + " random strings, " + std::to_string(identities) + " identities";
    });
}

// ---------------------------------------------------------------------------
// 2. family membership, string types and embeddings agree

namespace {

struct SweepCounts {
    std::size_t spaces = 0;
    std::size_t members = 0;
    std::size_t one_sided = 0;  // exactly one of the string and its mirror embeds
    std::vector<Finding> failures;
};

SweepCounts sweep_order(int p, const VerifyConfig& config) {
    SweepCounts out;
    const Integer P = p;
    for (int q = 1; q < p; ++q) {
        if (gcd(P, Integer(q)) != 1) continue;
        ++out.spaces;
        const OrientedLensSpace L = normalize(P, q);
        const bool member = !classify_family(L, false).empty();

        bool recognized = false;
        for (auto t : {HomeoTransform::Identity, HomeoTransform::Inverse, HomeoTransform::Reversed,
                       HomeoTransform::ReversedInverse}) {
            const auto s = chain_coefficients(to_standard_string(normalize(P, *apply_transform(t, L.q, P))));
            recognized = recognized || !recognize_string_type(s).empty();
        }

        const auto own = chain_coefficients(to_standard_string(L));
        const auto mirrored = chain_coefficients(to_standard_string(mirror(L)));
        const bool own_embeds = !cached_embeddings(config.cache, own).empty();
        const bool mirror_embeds = !cached_embeddings(config.cache, mirrored).empty();
        const bool embeds = own_embeds && mirror_embeds;
        if (own_embeds != mirror_embeds) ++out.one_sided;
        if (member) ++out.members;

        if (member != recognized || member != embeds) {
            out.failures.push_back(
                {L.str(),
                 std::string("families=") + (member ? "yes" : "no") + " recognized=" + (recognized ? "yes" : "no") +
                     " embeds=" + (own_embeds ? "yes" : "no") + "/" + (mirror_embeds ? "yes" : "no"),
                 config.program + " family classify " + lens_arg(L) + " && " + config.program + " lattice embed " +
                     terms_arg(own) + " && " + config.program + " lattice embed " + terms_arg(mirrored)});
        }
    }
    return out;
}

}  // namespace

CriterionResult check_family_sweep(const VerifyConfig& config) {
    const std::string title = "family membership <=> string type <=> embedding, p <= " + std::to_string(config.max_order);
    return run_criterion(2, title, 600.0, [&](CriterionResult& r) {
        std::vector<int> orders;
        for (int p = 2; p <= config.max_order; ++p) orders.push_back(p);
        auto parts = parallel_map(orders, config.jobs, [&](int p) { return sweep_order(p, config); });
        std::size_t members = 0, one_sided = 0;
        for (auto& part : parts) {
            r.checked += part.spaces;
            members += part.members;
            one_sided += part.one_sided;
            for (auto& f : part.failures) r.failures.push_back(std::move(f));
        }
        r.summary = std::to_string(r.checked) + " lens spaces, " + std::to_string(members) + " in the families, " +
                    std::to_string(r.failures.size()) + " discrepancies (" + std::to_string(one_sided) +
                    " with only one of the pair embedding)";
    });
}

// ---------------------------------------------------------------------------
// 3. unique embeddings of generated strings

namespace {

std::vector<LiscaString> all_generated(int bound) {
    std::vector<LiscaString> out;
    for (int ti = 1; ti <= 7; ++ti) {
        for (auto& ls : generate_type_strings(static_cast<StringType>(ti), bound)) out.push_back(std::move(ls));
    }
    return out;
}

}  // namespace

CriterionResult check_embedding_uniqueness(const VerifyConfig& config) {
    return run_criterion(3, "unique embedding of generated strings, rank <= " + std::to_string(config.rank_bound),
                         std::nullopt, [&](CriterionResult& r) {
        const auto strings = all_generated(config.rank_bound);
        auto verdicts = parallel_map(strings, config.jobs, [&](const LiscaString& ls) -> std::string {
            const auto found = cached_embeddings(config.cache, ls.coefficients);
            if (found.size() != 1) return std::to_string(found.size()) + " embedding classes";
            const auto table = table_embedding(ls);
            if (!verify_embedding(form_from_string(ls.coefficients), table)) return "table does not embed the form";
            if (!embeddings_equivalent(found[0], table)) return "search result differs from the table";
            if (!entries_unit_bounded(found[0])) return "entry outside {-1,0,1}";
            return {};
        });
        for (std::size_t i = 0; i < strings.size(); ++i) {
            if (verdicts[i].empty()) continue;
            r.failures.push_back({std::string(type_name(strings[i].type)) + " " + format_terms(strings[i].coefficients),
                                  verdicts[i], config.program + " lattice embed " + terms_arg(strings[i].coefficients)});
        }
        r.checked = strings.size();
        r.summary = std::to_string(strings.size()) + " strings over seven types";
    });
}

// ---------------------------------------------------------------------------
// 4. dual-knot homology classes

namespace {

void b_sequences(std::size_t length, CFExpansion& cur, std::vector<CFExpansion>& out) {
    if (cur.size() == length) {
        out.push_back(cur);
        return;
    }
    for (int x = 2; x <= 5; ++x) {
        cur.push_back(x);
        b_sequences(length, cur, out);
        cur.pop_back();
    }
}

std::string theorem16_args(DualFamily f, const FamilyParams& params) {
    std::string out = " homology theorem16 --family " + std::string(dual_family_name(f));
    if (f == DualFamily::BGI || f == DualFamily::GOFK || f == DualFamily::BGII) return out + " --b " + format_terms(params.b);
    return out + " --s=" + std::to_string(params.s) + " --t=" + std::to_string(params.t);
}

}  // namespace

std::vector<std::pair<DualFamily, FamilyParams>> theorem16_grid() {
    std::vector<std::pair<DualFamily, FamilyParams>> grid;
    for (int k = 1; k <= 2; ++k) {
        std::vector<CFExpansion> seqs;
        CFExpansion cur;
        b_sequences(static_cast<std::size_t>(2 * k), cur, seqs);
        for (const auto& b : seqs)
            for (auto f : {DualFamily::BGI, DualFamily::GOFK}) grid.push_back({f, {b, 0, 0}});
        seqs.clear();
        b_sequences(static_cast<std::size_t>(k), cur, seqs);
        for (const auto& b : seqs) grid.push_back({DualFamily::BGII, {b, 0, 0}});
    }
    for (int s = 0; s <= 6; ++s) {
        for (int t = 0; t <= 6; ++t) {
            for (auto f : {DualFamily::BGIII, DualFamily::BGV, DualFamily::BGIV, DualFamily::BGIVp}) grid.push_back({f, {{}, s, t}});
        }
        grid.push_back({DualFamily::SPOR, {{}, s, 1}});
    }
    return grid;
}

CriterionResult check_dual_classes(const VerifyConfig& config) {
    return run_criterion(4, "dual-knot homology classes", 60.0, [&](CriterionResult& r) {
        const auto grid = theorem16_grid();
        auto rows = parallel_map(grid, config.jobs, [](const auto& item) { return theorem16_instance(item.first, item.second); });
        for (const auto& row : rows) {
            if (row.match) continue;
            r.failures.push_back({std::string(dual_family_name(row.family)) + " " + row.params.str(row.family),
                                  "order " + std::string(row.order_matches ? "ok" : "wrong") + ", computed " +
                                      to_string(row.computed.in_first) + "/" + to_string(row.computed.in_last) +
                                      " vs claimed " + to_string(row.claimed.in_first) + "/" + to_string(row.claimed.in_last),
                                  config.program + theorem16_args(row.family, row.params)});
        }
        r.checked = rows.size();
        r.summary = std::to_string(rows.size()) + " family instances, classes compared in both meridian bases";
    });
}

// ---------------------------------------------------------------------------
// 5. keystones and suggested knots

namespace {

CFExpansion worked_string(int n) {
    CFExpansion s{-2, -n - 1, -2, -3, -3};
    for (int i = 0; i < n - 2; ++i) s.push_back(-2);
    return s;
}

// The type (3) reading of the worked string, with its table embedding.
std::optional<LatticeEmbedding> worked_table(int n) {
    for (const auto& ls : recognize_string_type(worked_string(n))) {
        if (ls.type == StringType::T3 && !ls.reversed && ls.t == 1 && ls.s == n - 2) return table_embedding(ls);
    }
    return std::nullopt;
}

}  // namespace

CriterionResult check_keystones(const VerifyConfig& config) {
    return run_criterion(5, "keystones and suggested knots", std::nullopt, [&](CriterionResult& r) {
        const std::vector<int> expected{0, 1, 2, 4};
        for (int n = 3; n <= 8; ++n) {
            const auto s = worked_string(n);
            const std::string repro = config.program + " keystone report " + terms_arg(s);
            const auto table = worked_table(n);
            if (!table) {
                r.failures.push_back({format_terms(s), "not recognized as type (3)", config.program + " string recognize " + terms_arg(s)});
                continue;
            }
            const auto found = cached_embeddings(config.cache, s);
            if (found.size() != 1 || !embeddings_equivalent(found[0], *table)) {
                r.failures.push_back({format_terms(s), "table is not the unique embedding", repro});
            }
            if (keystone_set(*table).keystones != expected) r.failures.push_back({format_terms(s), "keystones differ from {e1,e2,e3,e5}", repro});
            if (is_keystone(*table, n + 2)) r.failures.push_back({format_terms(s), basis_label(n + 2) + " is a keystone", repro});
            ++r.checked;
        }

        const auto strings = all_generated(config.rank_bound);
        auto results = parallel_map(strings, config.jobs, [&](const LiscaString& ls) {
            std::vector<Finding> bad;
            std::size_t knots = 0;
            const auto found = cached_embeddings(config.cache, ls.coefficients);
            if (found.size() != 1) {
                bad.push_back({format_terms(ls.coefficients), "no unique embedding", config.program + " lattice embed " + terms_arg(ls.coefficients)});
                return std::make_pair(bad, knots);
            }
            for (int e : keystone_set(found[0]).keystones) {
                const SuggestedKnot knot = suggested_knot(found[0], ls.coefficients, e);
                const S1S2Result check = verify_s1s2(knot.coefficients, knot.epsilon, knot.framing);
                ++knots;
                if (!check.pass || !snf_is_s1s2(check.snf)) {
                    std::vector<Integer> eps(knot.epsilon.begin(), knot.epsilon.end());
                    bad.push_back({format_terms(ls.coefficients) + " " + basis_label(e), "SNF " + join(check.snf),
                                   config.program + " homology s1s2 " + terms_arg(ls.coefficients) + " --eps=" + format_terms(eps) +
                                       " --framing=-1"});
                }
            }
            return std::make_pair(bad, knots);
        });
        std::size_t knots = 0;
        for (auto& [bad, count] : results) {
            knots += count;
            for (auto& f : bad) r.failures.push_back(std::move(f));
        }
        r.checked += knots;
        r.summary = "worked example n=3..8, " + std::to_string(knots) + " suggested knots over " + std::to_string(strings.size()) +
                    " strings";
    });
}

// ---------------------------------------------------------------------------
// 6. goldens

namespace {

class GoldenList {
public:
    explicit GoldenList(std::string program) : program_(std::move(program)) {}

    void add(std::string name, std::string repro, const std::function<std::string()>& check) {
        Golden g{std::move(name), false, {}, program_ + " " + repro};
        try {
            g.detail = check();
            g.pass = g.detail.empty();
        } catch (const std::exception& e) {
            g.detail = std::string("exception: ") + e.what();
        }
        items_.push_back(std::move(g));
    }

    std::vector<Golden> take() { return std::move(items_); }

private:
    std::string program_;
    std::vector<Golden> items_;
};

std::string expect(bool ok, const std::string& otherwise) { return ok ? std::string() : otherwise; }

IntMatrix rows(std::initializer_list<std::initializer_list<int>> data) {
    IntMatrix out(static_cast<Eigen::Index>(data.size()), static_cast<Eigen::Index>(data.begin()->size()));
    Eigen::Index i = 0;
    for (const auto& row : data) {
        Eigen::Index j = 0;
        for (int x : row) out(i, j++) = x;
        ++i;
    }
    return out;
}

std::optional<LiscaString> find_type(std::span<const Integer> s, StringType type) {
    for (auto& ls : recognize_string_type(s))
        if (ls.type == type && !ls.reversed) return ls;
    return std::nullopt;
}

// Duals of SPOR, BGIII and BGV on the sporadic line s = n - 2, t = 1, as
// simple knot classes in the mu_n basis.
std::vector<SimpleKnotClass> sporadic_duals(int n) {
    std::vector<SimpleKnotClass> out;
    for (auto f : {DualFamily::SPOR, DualFamily::BGIII, DualFamily::BGV}) {
        const auto row = theorem16_instance(f, {{}, n - 2, 1});
        out.push_back({row.lens.p, row.lens.q, row.computed.in_last});
    }
    return out;
}

std::string mutually_distinct(int n) {
    const auto k = sporadic_duals(n);
    const char* names[] = {"SPOR", "BGIII", "BGV"};
    std::string clash;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (simple_knot_equivalent(k[static_cast<std::size_t>(i)], k[static_cast<std::size_t>(j)])) {
                clash += std::string(clash.empty() ? "" : "; ") + names[i] + " " + k[static_cast<std::size_t>(i)].str() + " ~ " +
                         names[j] + " " + k[static_cast<std::size_t>(j)].str();
            }
    return clash;
}

// Keystone suggestions that one framing-preserving handle slide over a -2
// component (and a global sign) relates.
bool slide_related(const SuggestedKnot& a, const SuggestedKnot& b) {
    const auto& f = a.coefficients;
    const std::size_t n = f.size();
    for (std::size_t j = 0; j < n; ++j) {
        if (f[j] != -2 || (a.epsilon[j] != 1 && a.epsilon[j] != -1)) continue;
        const int c = a.epsilon[j];
        std::vector<int> slid = a.epsilon;
        slid[j] += c * -2;
        if (j > 0) slid[j - 1] += c;
        if (j + 1 < n) slid[j + 1] += c;
        std::vector<int> neg = slid;
        for (int& x : neg) x = -x;
        if (slid == b.epsilon || neg == b.epsilon) return true;
    }
    return false;
}

}  // namespace

std::vector<Golden> golden_checks(const std::string& program) {
    GoldenList g(program);
    using V = CFExpansion;

    g.add("cf.palindrome_9_7", "cf eval -- 2,2,1,-2,-2", [] {
        return expect(eval_cf(V{2, 2, 1, -2, -2}) == ExtendedRational(9, 7) && palindrome_value(V{2, 2}, 1) == ExtendedRational(9, 7),
                      "[2,2,1,-2,-2] is not 9/7");
    });
    g.add("cf.zero", "cf eval -- 0", [] { return expect(eval_cf(V{0}) == ExtendedRational(0, 1), "[0] is not 0/1"); });
    g.add("cf.case3_s0_t0", "cf eval -- -1,2,2,2,2,-1", [] {
        const auto v = eval_cf(V{-1, 2, 2, 2, 2, -1});
        return expect(v == ExtendedRational(-16, 9), "got " + v.str());
    });
    g.add("cf.determinant_identity", "cf eval -- 2,2,1,-2,-2", [] {
        const V t{2, 2, 1, -2, -2};
        const auto table = convergents(t);
        for (long i = 1; i <= 5; ++i)
            if (table.P(i - 1) * table.Q(i) - table.P(i) * table.Q(i - 1) != 1) return std::string("fails at i=") + std::to_string(i);
        return std::string();
    });
    g.add("cf.palindrome_b22_c1", "cf eval -- 2,2,1,-2,-2", [] {
        const auto table = convergents(V{2, 2});
        return expect(table.P(2) == 3 && table.Q(2) == 2 && palindrome(V{2, 2}, 1) == V{2, 2, 1, -2, -2}, "P_2, Q_2 or palindrome differ");
    });
    g.add("lens.mirror_16_9", "lens mirror 16/9", [] { return expect(mirror(normalize(16, 9)) == normalize(16, 7), "mirror is not L(16,7)"); });
    g.add("family.cable_16_9", "family classify 16/9", [] {
        const auto ws = classify_family(normalize(16, 9));
        const FamilyWitness want{Family::F2, 4, 2, HomeoTransform::Identity};
        return expect(std::find(ws.begin(), ws.end(), want) != ws.end(), "no (F2, m=4, d=2, oriented) witness");
    });
    g.add("string.seed_t1", "string recognize -- -2,-2,-2", [] {
        auto ls = find_type(V{-2, -2, -2}, StringType::T1);
        return expect(ls && ls->b == V{2} && ls->c == V{2}, "not T1 with b=(2), c=(2)");
    });
    g.add("string.seed_t4", "string recognize -- -3,-2,-2,-3", [] {
        auto ls = find_type(V{-3, -2, -2, -3}, StringType::T4);
        return expect(ls && ls->b == V{2} && ls->c == V{2}, "not T4 with b=(2), c=(2)");
    });
    g.add("string.worked_t3", "string recognize -- -2,-3,-2,-3,-3", [] {
        auto ls = find_type(V{-2, -3, -2, -3, -3}, StringType::T3);
        return expect(ls && ls->t == 1 && ls->s == 0, "not T3 with t=1, s=0");
    });
    g.add("string.expansion_a_seed", "string generate --type T1 --bound 4", [] {
        return expect(expansion_a(V{-2, -2, -2}) == V{-2, -2, -2, -3}, "(a) on the seed is not (-2,-2,-2,-3)");
    });
    g.add("string.generate_t2", "string generate --type T2 --bound 6", [] {
        for (const auto& ls : generate_type_strings(StringType::T2, 6))
            if (ls.coefficients == V{-3, -2, -2, -3} && ls.s == 0 && ls.t == 0) return std::string();
        return std::string("(-3,-2,-2,-3) missing");
    });
    g.add("string.generate_t7", "string generate --type T7 --bound 7", [] {
        for (const auto& ls : generate_type_strings(StringType::T7, 7))
            if (ls.coefficients == V{-3, -2, -3, -3, -3} && ls.s == 0 && ls.t == 0) return std::string();
        return std::string("(-3,-2,-3,-3,-3) missing");
    });
    g.add("lattice.seed_unique", "lattice embed -- -2,-2,-2", [] {
        const auto found = find_embeddings(form_from_string(V{-2, -2, -2}));
        return expect(found.size() == 1 && embeddings_equivalent(found[0], rows({{1, -1, 0}, {0, 1, -1}, {-1, -1, 0}})),
                      "not exactly the seed table class");
    });
    g.add("lattice.worked_n2_unique", "lattice embed -- -2,-3,-2,-3,-3", [] {
        const auto found = find_embeddings(form_from_string(worked_string(2)));
        const auto table = worked_table(2);
        return expect(found.size() == 1 && table && embeddings_equivalent(found[0], *table), "not exactly the worked table class");
    });
    g.add("lattice.t2_table_s0_t0", "lattice table -- -3,-2,-2,-3", [] {
        LiscaString ls{V{-3, -2, -2, -3}, StringType::T2, false, 0, 0, {}, {}, {}};
        return expect(verify_embedding(form_from_string(ls.coefficients), table_embedding(ls)), "type (2) table does not embed");
    });
    g.add("lattice.t4_seed_table", "lattice verify -- -3,-2,-2,-3 --matrix 0,1,1,1;1,-1,0,0;0,1,-1,0;-1,-1,0,1", [] {
        return expect(verify_embedding(form_from_string(V{-3, -2, -2, -3}), rows({{0, 1, 1, 1}, {1, -1, 0, 0}, {0, 1, -1, 0}, {-1, -1, 0, 1}})),
                      "type (4) seed table does not embed");
    });
    g.add("lattice.t1_seed_table", "lattice table -- -2,-2,-2", [] {
        auto ls = find_type(V{-2, -2, -2}, StringType::T1);
        return expect(ls && table_embedding(*ls) == rows({{1, -1, 0}, {0, 1, -1}, {-1, -1, 0}}), "seed table differs");
    });
    g.add("lattice.expansion_a_table", "lattice table -- -2,-2,-2,-3", [] {
        auto ls = find_type(V{-2, -2, -2, -3}, StringType::T1);
        const IntMatrix want = rows({{-1, 0, 0, 1}, {1, -1, 0, 0}, {0, 1, -1, 0}, {-1, -1, 0, -1}});
        return expect(ls && table_embedding(*ls) == want, "table after (a) differs");
    });
    g.add("lattice.t3_worked_table", "lattice table -- -2,-3,-2,-3,-3", [] {
        const IntMatrix want = rows({{0, 0, -1, 0, 1}, {0, 1, 1, 1, 0}, {1, -1, 0, 0, 0}, {0, 1, -1, 0, -1}, {-1, -1, 0, 1, 0}});
        const auto table = worked_table(2);
        return expect(table && *table == want, "type (3) table at t=1, s=0 differs");
    });
    g.add("keystone.e2_is_everything_n4", "keystone report -- " + format_terms(worked_string(4)), [] {
        return expect(two_support_basis(*worked_table(4)) == std::vector<int>{0, 1, 2, 3, 4, 5, 6}, "E_2 is not {e1..e7}");
    });
    g.add("keystone.e7_not_keystone_n4", "keystone report -- " + format_terms(worked_string(4)),
          [] { return expect(!is_keystone(*worked_table(4), 6), "e7 is a keystone"); });
    g.add("keystone.e5_keystone_n4", "keystone report -- " + format_terms(worked_string(4)),
          [] { return expect(is_keystone(*worked_table(4), 4).has_value(), "e5 is not a keystone"); });
    g.add("keystone.set_n4", "keystone report -- " + format_terms(worked_string(4)), [] {
        return expect(keystone_set(*worked_table(4)).keystones == std::vector<int>{0, 1, 2, 4}, "keystones are not {e1,e2,e3,e5}");
    });
    g.add("keystone.set_n2_cli", "lattice embed -- -2,-3,-2,-3,-3 --json", [] {
        return expect(keystone_set(*worked_table(2)).keystones == std::vector<int>{0, 1, 2, 4}, "keystones are not {e1,e2,e3,e5}");
    });
    g.add("keystone.slide_classes", "keystone suggest -- " + format_terms(worked_string(4)), [] {
        // suggestions are distinct and fall into the two slide classes {e1,e2}, {e3,e5}
        for (int n = 3; n <= 8; ++n) {
            const auto table = *worked_table(n);
            const auto s = worked_string(n);
            std::vector<SuggestedKnot> k;
            for (int e : {0, 1, 2, 4}) k.push_back(suggested_knot(table, s, e));
            for (std::size_t i = 0; i < k.size(); ++i)
                for (std::size_t j = i + 1; j < k.size(); ++j)
                    if (k[i].epsilon == k[j].epsilon) return "n=" + std::to_string(n) + ": repeated suggestion";
            if (!slide_related(k[0], k[1]) || !slide_related(k[2], k[3])) return "n=" + std::to_string(n) + ": pairs not slide-related";
            for (int i : {0, 1})
                for (int j : {2, 3})
                    if (slide_related(k[static_cast<std::size_t>(i)], k[static_cast<std::size_t>(j)]))
                        return "n=" + std::to_string(n) + ": classes merge";
        }
        return std::string();
    });
    g.add("homology.spor_s0_t1", "homology theorem16 --family SPOR --s=0 --t=1", [] {
        const auto row = theorem16_instance(DualFamily::SPOR, {{}, 0, 1});
        return expect(row.lens == normalize(49, 31) && row.computed.in_first == 28 && row.computed.in_last == 35 && row.match,
                      "expected L(49,31) with classes 28 and 35");
    });
    g.add("homology.bgiii_s0_t1", "homology theorem16 --family BGIII --s=0 --t=1", [] {
        const auto row = theorem16_instance(DualFamily::BGIII, {{}, 0, 1});
        return expect(row.lens == normalize(49, 31) && row.match, "no match in L(49,31)");
    });
    g.add("homology.bgii_b2", "homology theorem16 --family BGII --b 2", [] {
        const auto row = theorem16_instance(DualFamily::BGII, {V{2}, 0, 0});
        const bool cls = floor_mod(row.computed.in_first - 4, 16) == 0 || floor_mod(row.computed.in_first + 4, 16) == 0;
        return expect(row.lens.p == 16 && row.m == 4 && row.d == 2 && cls && row.match, "expected p=16, m=4, d=2, class +-4");
    });
    g.add("homology.l25_7_classes", "homology theorem16 --family SPOR --s=-3 --t=1", [] {
        const auto k = sporadic_duals(-1);
        auto orbit = [](const SimpleKnotClass& c, int a, int b) { return c.k == a || c.k == b; };
        return expect(is_homeomorphic(normalize(k[0].p, k[0].q), normalize(25, 7), false).homeomorphic && orbit(k[0], 10, 15) &&
                          orbit(k[1], 10, 15) && orbit(k[2], 5, 20),
                      "expected SPOR, BGIII in {10,15} and BGV in {5,20}");
    });
    g.add("simple.l25_7_orbits_distinct", "homology simple-eq 25,7,10 25,7,5", [] {
        const auto k = sporadic_duals(-1);
        return expect(simple_knot_equivalent(k[0], k[1]) && !simple_knot_equivalent(k[0], k[2]),
                      "SPOR/BGIII should agree and differ from BGV");
    });
    g.add("simple.16_9_4_vs_12", "homology simple-eq 16,9,4 16,9,12",
          [] { return expect(simple_knot_equivalent({16, 9, 4}, {16, 9, 12}), "not equivalent"); });
    g.add("simple.sporadic_line_n1", "homology simple-eq " + [] {
        const auto k = sporadic_duals(1);
        return to_string(k[0].p) + "," + to_string(k[0].q) + "," + to_string(k[0].k) + " " + to_string(k[1].p) + "," +
               to_string(k[1].q) + "," + to_string(k[1].k);
    }(), [] { return mutually_distinct(1); });
    g.add("simple.sporadic_line_n2", "homology theorem16 --family SPOR --s=0 --t=1", [] { return mutually_distinct(2); });
    g.add("surgery.torus_2_1_1", "lens homeo 4/3 4/1", [] {
        const auto L = torus_knot_surgery(2, 1, 1);
        return expect(L == normalize(4, 3) && is_homeomorphic(L, normalize(4, 1), false).homeomorphic, "not L(4,3) ~ L(4,1)");
    });
    g.add("surgery.cable_2_1", "homology theorem16 --family BGII --b 2", [] {
        const auto L = cable_surgery(2, 1, 1);
        const auto row = theorem16_instance(DualFamily::BGII, {V{2}, 0, 0});
        return expect(L == normalize(16, 9) && row.lens == L && simple_knot_equivalent({16, 9, row.computed.in_first}, {16, 9, 4}),
                      "cable surgery is not L(16,9) with dual K(16,9,4)");
    });
    return g.take();
}

CriterionResult check_goldens(const VerifyConfig& config) {
    return run_criterion(6, "quoted values", std::nullopt, [&](CriterionResult& r) {
        const auto goldens = golden_checks(config.program);
        for (const auto& g : goldens)
            if (!g.pass) r.failures.push_back({g.name, g.detail, g.repro});
        r.checked = goldens.size();
        r.summary = std::to_string(goldens.size() - r.failures.size()) + "/" + std::to_string(goldens.size()) + " named goldens";
    });
}

// ---------------------------------------------------------------------------
// 7. negative control

CriterionResult check_negative_control(const VerifyConfig& config) {
    return run_criterion(7, "negative control", std::nullopt, [&](CriterionResult& r) {
        const CFExpansion chain{-2, -2, -2};
        const std::vector<int> eps{1, 0, 1};
        const auto result = verify_s1s2(chain, eps, -1);
        Integer order = 1;
        for (const auto& d : result.snf) order *= d;
        r.checked = 1;
        r.summary = "SNF " + join(result.snf);
        if (result.pass || order != 4) {
            r.failures.push_back({"(-2,-2,-2) eps=(1,0,1)", "expected failure with cokernel of order 4, got SNF " + join(result.snf),
                                  config.program + " homology s1s2 -- -2,-2,-2 --eps 1,0,1 --framing=-1"});
        }
    });
}

std::vector<CriterionResult> verify_all(const VerifyConfig& config, const std::vector<int>& only) {
    using Check = CriterionResult (*)(const VerifyConfig&);
    constexpr Check checks[criterion_count] = {check_continued_fractions, check_family_sweep, check_embedding_uniqueness,
                                               check_dual_classes,        check_keystones,    check_goldens,
                                               check_negative_control};
    std::vector<CriterionResult> out;
    for (int id = 1; id <= criterion_count; ++id) {
        if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
        out.push_back(checks[id - 1](config));
    }
    return out;
}

}  // namespace lensurg
