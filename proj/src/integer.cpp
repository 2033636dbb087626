#include "lensurg/integer.hpp"

#include <limits>

#include "lensurg/errors.hpp"

namespace lensurg {

Integer floor_mod(const Integer& a, const Integer& m) {
    Integer r = a % m;
    if (r < 0) r += m;
    return r;
}

Integer gcd(const Integer& a, const Integer& b) {
    Integer x = abs(a);
    Integer y = abs(b);
    while (y != 0) {
        Integer r = x % y;
        x = y;
        y = r;
    }
    return x;
}

std::optional<Integer> mod_inverse(const Integer& a, const Integer& m) {
    if (m == 1) return Integer(0);
    // extended Euclid on (a mod m, m)
    Integer old_r = floor_mod(a, m), r = m;
    Integer old_s = 1, s = 0;
    while (r != 0) {
        Integer quot = old_r / r;
        Integer tmp = old_r - quot * r;
        old_r = r;
        r = tmp;
        tmp = old_s - quot * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1) return std::nullopt;
    return floor_mod(old_s, m);
}

Integer isqrt(const Integer& n) {
    if (n < 0) throw DomainError("isqrt of negative integer " + to_string(n));
    return boost::multiprecision::sqrt(n);
}

bool is_square(const Integer& n) {
    if (n < 0) return false;
    Integer r = isqrt(n);
    return r * r == n;
}

std::string to_string(const Integer& n) { return n.str(); }

Integer parse_integer(std::string_view token) {
    std::string_view digits = token;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (digits.empty()) throw ParseError("expected an integer, got '" + std::string(token) + "'");
    for (char c : digits) {
        if (c < '0' || c > '9') throw ParseError("expected an integer, got '" + std::string(token) + "'");
    }
    std::string text(token);
    if (text.front() == '+') text.erase(0, 1);
    return Integer(text);
}

int to_int(const Integer& n) {
    if (n > std::numeric_limits<int>::max() || n < std::numeric_limits<int>::min()) {
        throw DomainError("integer " + to_string(n) + " does not fit the lattice search range");
    }
    return n.convert_to<int>();
}

std::vector<Integer> to_integers(const std::vector<int>& xs) {
    return {xs.begin(), xs.end()};
}

}  // namespace lensurg
