#include "lensurg/lisca.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <set>

#include "lensurg/errors.hpp"

namespace lensurg {

std::string_view family_name(Family f) {
    switch (f) {
        case Family::F1: return "F1";
        case Family::F2: return "F2";
        case Family::F3: return "F3";
        case Family::F4: return "F4";
    }
    return "?";
}

namespace {

// Positive and negative divisors of n != 0.
std::vector<Integer> signed_divisors(const Integer& n) {
    std::vector<Integer> out;
    const Integer a = abs(n);
    for (Integer d = 1; d * d <= a; ++d) {
        if (a % d != 0) continue;
        out.push_back(d);
        if (d * d != a) out.push_back(a / d);
    }
    std::sort(out.begin(), out.end());
    const std::size_t k = out.size();
    for (std::size_t i = 0; i < k; ++i) out.push_back(-out[i]);
    return out;
}

}  // namespace

std::vector<FamilyWitness> classify_family(const OrientedLensSpace& L, bool oriented) {
    std::vector<FamilyWitness> out;
    if (L.p == 0 || !is_square(L.p)) return out;
    if (L.p == 1) {
        out.push_back({Family::F1, 1, 0, HomeoTransform::Identity});
        return out;
    }
    const Integer& p = L.p;
    const Integer r = isqrt(p);

    std::vector<HomeoTransform> modes{HomeoTransform::Identity, HomeoTransform::Inverse};
    if (!oriented) {
        modes.push_back(HomeoTransform::Reversed);
        modes.push_back(HomeoTransform::ReversedInverse);
    }
    std::vector<Integer> targets;
    for (auto t : modes) targets.push_back(*apply_transform(t, L.q, p));

    auto record = [&](Family f, const Integer& m, const Integer& d, const Integer& q) {
        const Integer residue = floor_mod(q, p);
        for (std::size_t i = 0; i < modes.size(); ++i) {
            if (targets[i] != residue) continue;
            FamilyWitness w{f, m, d, modes[i]};
            if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(w);
        }
    };

    for (const Integer& m : {r, Integer(-r)}) {
        // md+1 mod m^2 and gcd(m,d) depend only on d mod |m|
        for (Integer d = 0; d < r; ++d) {
            const Integer g = gcd(m, d);
            if (g == 1) record(Family::F1, m, d, m * d + 1);
            if (g == 2) record(Family::F2, m, d, m * d + 1);
        }
        if (m != 1) {
            for (const Integer& d : signed_divisors(m - 1)) {
                if (d % 2 != 0) record(Family::F3, m, d, d * (m - 1));
            }
        }
        for (const Integer& d : signed_divisors(2 * m + 1)) record(Family::F4, m, d, d * (m - 1));
    }
    return out;
}

std::string_view type_name(StringType t) {
    static constexpr std::array names{"T1", "T2", "T3", "T4", "T5", "T6", "T7"};
    return names[static_cast<int>(t) - 1];
}

CFExpansion LiscaString::pattern() const {
    CFExpansion out = coefficients;
    if (reversed) std::reverse(out.begin(), out.end());
    return out;
}

namespace {

void append_twos(CFExpansion& v, int count) { v.insert(v.end(), static_cast<std::size_t>(count), Integer(-2)); }

}  // namespace

CFExpansion type_pattern(StringType type, int s, int t) {
    if (s < 0 || t < 0) throw DomainError("string type parameters must be non-negative");
    CFExpansion v;
    switch (type) {
        case StringType::T2:
            append_twos(v, t);
            v.insert(v.end(), {-3, -2 - s, -2 - t, -3});
            append_twos(v, s);
            break;
        case StringType::T3:
            append_twos(v, t);
            v.insert(v.end(), {-3 - s, -2, -2 - t, -3});
            append_twos(v, s);
            break;
        case StringType::T5:
            v.insert(v.end(), {-t - 2, -s - 2, -3});
            append_twos(v, t);
            v.push_back(-4);
            append_twos(v, s);
            break;
        case StringType::T6:
            v.insert(v.end(), {-t - 2, -2, -3 - s});
            append_twos(v, t);
            v.push_back(-4);
            append_twos(v, s);
            break;
        case StringType::T7:
            v.insert(v.end(), {-t - 3, -2, -3 - s, -3});
            append_twos(v, t);
            v.push_back(-3);
            append_twos(v, s);
            break;
        default:
            throw DomainError(std::string(type_name(type)) + " has no (s,t) pattern");
    }
    return v;
}

CFExpansion expansion_a(std::span<const Integer> s) {
    if (s.empty()) throw DomainError("expansion of an empty string");
    CFExpansion out;
    out.reserve(s.size() + 1);
    out.push_back(-2);
    out.insert(out.end(), s.begin(), s.end());
    out.back() -= 1;
    return out;
}

CFExpansion expansion_b(std::span<const Integer> s) {
    if (s.empty()) throw DomainError("expansion of an empty string");
    CFExpansion out(s.begin(), s.end());
    out.front() -= 1;
    out.push_back(-2);
    return out;
}

CFExpansion seed(StringType type) {
    if (type == StringType::T1) return {-2, -2, -2};
    if (type == StringType::T4) return {-3, -2, -2, -3};
    throw DomainError(std::string(type_name(type)) + " is not generated from a seed");
}

namespace {

// q/p + s/r = 1 for p/q = [b], r/s = [c].
bool complementary(std::span<const Integer> b, std::span<const Integer> c) {
    if (b.empty() || c.empty() || !is_standard(b) || !is_standard(c)) return false;
    const ExtendedRational x = eval_cf(b);
    const ExtendedRational y = eval_cf(c);
    return x.den() * y.num() + y.den() * x.num() == x.num() * y.num();
}

// Split (-b_k..-b_1, -2, -c_1..-c_l), or (-b_k..-b_1-1, -2, -2, -1-c_1..-c_l)
// when `t4`, at the first position where the pair is complementary.
bool split_pair(const CFExpansion& y, bool t4, CFExpansion& b, CFExpansion& c) {
    const std::size_t n = y.size();
    const std::size_t gap = t4 ? 2 : 1;
    for (std::size_t j = 1; j + gap < n; ++j) {
        bool twos = true;
        for (std::size_t g = 0; g < gap; ++g) twos = twos && y[j + g] == -2;
        if (!twos) continue;
        CFExpansion bb, cc;
        for (std::size_t i = j; i-- > 0;) bb.push_back(-y[i]);
        for (std::size_t i = j + gap; i < n; ++i) cc.push_back(-y[i]);
        if (t4) {
            bb.front() -= 1;
            cc.front() -= 1;
        }
        if (complementary(bb, cc)) {
            b = std::move(bb);
            c = std::move(cc);
            return true;
        }
    }
    return false;
}

// Undo (a)/(b) down to a seed. The inverses need (first, last) = (-2, <=-3)
// and (<=-3, -2) respectively, so at most one applies at each step.
std::optional<std::pair<StringType, std::string>> reduce_to_seed(CFExpansion y) {
    std::string undone;
    while (y.size() > 3) {
        if (y.size() == 4 && y == seed(StringType::T4)) break;
        if (y.front() == -2 && y.back() <= -3) {
            y.erase(y.begin());
            y.back() += 1;
            undone.push_back('a');
        } else if (y.front() <= -3 && y.back() == -2) {
            y.pop_back();
            y.front() += 1;
            undone.push_back('b');
        } else {
            return std::nullopt;
        }
    }
    std::reverse(undone.begin(), undone.end());
    if (y == seed(StringType::T1)) return std::make_pair(StringType::T1, undone);
    if (y == seed(StringType::T4)) return std::make_pair(StringType::T4, undone);
    return std::nullopt;
}

void match_orientation(const CFExpansion& given, bool reversed, std::vector<LiscaString>& out) {
    CFExpansion y = given;
    if (reversed) std::reverse(y.begin(), y.end());
    const int n = static_cast<int>(y.size());

    for (StringType type : {StringType::T2, StringType::T3, StringType::T5, StringType::T6, StringType::T7}) {
        const int base = type == StringType::T7 ? 5 : 4;
        for (int t = 0; t <= n - base; ++t) {
            const int s = n - base - t;
            if (type_pattern(type, s, t) != y) continue;
            LiscaString ls{given, type, reversed, s, t, {}, {}, {}};
            out.push_back(std::move(ls));
        }
    }

    if (auto reduced = reduce_to_seed(y)) {
        LiscaString ls{given, reduced->first, reversed, 0, 0, {}, {}, reduced->second};
        if (!split_pair(y, ls.type == StringType::T4, ls.b, ls.c)) {
            throw std::logic_error("seed reduction and complementary split disagree on " + format_terms(y));
        }
        out.push_back(std::move(ls));
    }
}

}  // namespace

std::vector<LiscaString> recognize_string_type(std::span<const Integer> coefficients) {
    std::vector<LiscaString> out;
    const CFExpansion given(coefficients.begin(), coefficients.end());
    if (given.empty()) return out;
    match_orientation(given, false, out);
    CFExpansion rev(given.rbegin(), given.rend());
    if (rev != given) match_orientation(given, true, out);
    return out;
}

std::vector<LiscaString> generate_type_strings(StringType type, int length_bound) {
    std::vector<LiscaString> out;
    if (type == StringType::T1 || type == StringType::T4) {
        std::deque<std::pair<CFExpansion, std::string>> queue{{seed(type), ""}};
        while (!queue.empty()) {
            auto [y, history] = std::move(queue.front());
            queue.pop_front();
            if (static_cast<int>(y.size()) > length_bound) continue;
            LiscaString ls{y, type, false, 0, 0, {}, {}, history};
            if (!split_pair(y, type == StringType::T4, ls.b, ls.c)) {
                throw std::logic_error("generated string without complementary split: " + format_terms(y));
            }
            out.push_back(std::move(ls));
            queue.emplace_back(expansion_a(y), history + 'a');
            queue.emplace_back(expansion_b(y), history + 'b');
        }
    } else {
        const int base = type == StringType::T7 ? 5 : 4;
        for (int n = base; n <= length_bound; ++n) {
            for (int t = 0; t <= n - base; ++t) {
                const int s = n - base - t;
                out.push_back({type_pattern(type, s, t), type, false, s, t, {}, {}, {}});
            }
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const LiscaString& x, const LiscaString& y) {
        if (x.coefficients.size() != y.coefficients.size()) return x.coefficients.size() < y.coefficients.size();
        return x.coefficients < y.coefficients;
    });
    return out;
}

CFExpansion chain_coefficients(std::span<const Integer> standard) {
    CFExpansion out;
    out.reserve(standard.size());
    for (const auto& a : standard) out.push_back(-a);
    return out;
}

}  // namespace lensurg
