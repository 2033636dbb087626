#include "lensurg/cfrac.hpp"

#include <algorithm>

#include "lensurg/errors.hpp"

namespace lensurg {

ExtendedRational::ExtendedRational(Integer numerator, Integer denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (num_ == 0 && den_ == 0) throw UndefinedValue("indeterminate value 0/0");
    Integer g = gcd(num_, den_);
    num_ /= g;
    den_ /= g;
    if (den_ < 0 || (den_ == 0 && num_ < 0)) {
        num_ = -num_;
        den_ = -den_;
    }
}

ExtendedRational ExtendedRational::subtract_reciprocal_from(const Integer& a) const {
    // a - den/num = (a*num - den)/num; num = 0 gives (-den)/0 -> 1/0.
    return {a * num_ - den_, num_};
}

std::string ExtendedRational::str() const {
    if (den_ == 1) return to_string(num_);
    return to_string(num_) + "/" + to_string(den_);
}

ExtendedRational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return {parse_integer(text), 1};
    Integer n = parse_integer(text.substr(0, slash));
    Integer d = parse_integer(text.substr(slash + 1));
    try {
        return {n, d};
    } catch (const UndefinedValue&) {
        throw ParseError("'" + std::string(text) + "' is not a value");
    }
}

bool is_standard(std::span<const Integer> terms) {
    return std::all_of(terms.begin(), terms.end(), [](const Integer& a) { return a >= 2; });
}

ExtendedRational eval_cf(std::span<const Integer> terms) {
    ExtendedRational value = ExtendedRational::infinity();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        value = value.subtract_reciprocal_from(*it);
    }
    return value;
}

ConvergentTable convergents(std::span<const Integer> terms) {
    const std::size_t n = terms.size();
    ConvergentTable table;
    table.forward.reserve(n + 2);
    table.backward.reserve(n + 2);
    table.forward.emplace_back(0, -1);
    table.forward.emplace_back(1, 0);
    table.backward.emplace_back(0, -1);
    table.backward.emplace_back(1, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        const Integer& a = terms[i - 1];
        const auto& [P1, Q1] = table.forward[i];
        const auto& [P2, Q2] = table.forward[i - 1];
        table.forward.emplace_back(a * P1 - P2, a * Q1 - Q2);

        // [a_i..a_1] = a_i - q_{i-1}/p_{i-1}, so q_i = p_{i-1}
        const Integer& p1 = table.backward[i].first;
        const Integer& p2 = table.backward[i - 1].first;
        table.backward.emplace_back(a * p1 - p2, p1);
    }
    return table;
}

CFExpansion expand_cf(const ExtendedRational& value) {
    if (value.is_infinite() || value.num() <= value.den()) {
        throw DomainError("expand_cf needs p/q with p > q >= 1, got " + value.str());
    }
    CFExpansion terms;
    Integer p = value.num();
    Integer q = value.den();
    while (q != 0) {
        Integer a = (p + q - 1) / q;
        terms.push_back(a);
        Integer next = a * q - p;
        p = q;
        q = next;
    }
    return terms;
}

CFExpansion palindrome(std::span<const Integer> b, const Integer& c) {
    CFExpansion terms(b.begin(), b.end());
    terms.push_back(c);
    for (auto it = b.rbegin(); it != b.rend(); ++it) terms.push_back(-*it);
    return terms;
}

ExtendedRational palindrome_value(std::span<const Integer> b, const Integer& c) {
    const ConvergentTable table = convergents(b);
    const long k = static_cast<long>(b.size());
    const Integer& P = table.P(k);
    const Integer& Q = table.Q(k);
    Integer numerator = c * P * P;
    Integer denominator = c * P * Q + 1;
    if (numerator == 0 && denominator == 0) {
        throw UndefinedValue("palindrome closed form reached 0/0");
    }
    return {numerator, denominator};
}

CFExpansion complementary_string(std::span<const Integer> b) {
    if (b.empty() || !is_standard(b)) {
        throw DomainError("complementary_string needs a non-empty standard expansion, got [" +
                          format_terms(b) + "]");
    }
    const ExtendedRational v = eval_cf(b);
    // s/r = 1 - q/p = (p - q)/p
    return expand_cf({v.num(), v.num() - v.den()});
}

std::string format_terms(std::span<const Integer> terms) {
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i) out += ',';
        out += to_string(terms[i]);
    }
    return out;
}

CFExpansion parse_terms(std::string_view text) {
    CFExpansion terms;
    if (text.empty()) return terms;
    std::size_t start = 0;
    while (true) {
        auto comma = text.find(',', start);
        terms.push_back(parse_integer(text.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return terms;
}

}  // namespace lensurg
