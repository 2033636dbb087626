#include "lensurg/lens.hpp"

#include <array>

#include "lensurg/errors.hpp"

namespace lensurg {

std::string OrientedLensSpace::str() const { return "L(" + to_string(p) + "," + to_string(q) + ")"; }

OrientedLensSpace normalize(const Integer& p_in, const Integer& q_in) {
    Integer p = p_in;
    Integer q = q_in;
    if (p < 0) {
        p = -p;
        q = -q;
    }
    if (p == 0) {
        if (abs(q) != 1) throw InvalidPair("L(0," + to_string(q_in) + ") is not a lens space");
        return {0, 1};
    }
    if (p == 1) return {1, 0};
    if (gcd(p, q) != 1) {
        throw InvalidPair("gcd(" + to_string(p_in) + "," + to_string(q_in) + ") != 1");
    }
    return {p, floor_mod(q, p)};
}

OrientedLensSpace mirror(const OrientedLensSpace& L) {
    if (L.p <= 1) return L;
    return normalize(L.p, L.p - L.q);
}

std::string_view transform_name(HomeoTransform t) {
    switch (t) {
        case HomeoTransform::Identity: return "oriented";
        case HomeoTransform::Inverse: return "inverse";
        case HomeoTransform::Reversed: return "reversed";
        case HomeoTransform::ReversedInverse: return "reversed-inverse";
    }
    return "?";
}

std::optional<Integer> apply_transform(HomeoTransform t, const Integer& q, const Integer& p) {
    switch (t) {
        case HomeoTransform::Identity: return floor_mod(q, p);
        case HomeoTransform::Reversed: return floor_mod(-q, p);
        case HomeoTransform::Inverse: return mod_inverse(q, p);
        case HomeoTransform::ReversedInverse: {
            auto inv = mod_inverse(q, p);
            if (!inv) return std::nullopt;
            return floor_mod(-*inv, p);
        }
    }
    return std::nullopt;
}

HomeoDecision is_homeomorphic(const OrientedLensSpace& a, const OrientedLensSpace& b, bool oriented) {
    if (a.p != b.p) return {};
    if (a.p <= 1) return {true, HomeoTransform::Identity};
    constexpr std::array all{HomeoTransform::Identity, HomeoTransform::Inverse, HomeoTransform::Reversed,
                             HomeoTransform::ReversedInverse};
    for (auto t : all) {
        if (oriented && (t == HomeoTransform::Reversed || t == HomeoTransform::ReversedInverse)) continue;
        auto q = apply_transform(t, a.q, a.p);
        if (q && *q == b.q) return {true, t};
    }
    return {};
}

CFExpansion to_standard_string(const OrientedLensSpace& L) {
    if (L.p <= 1) throw DomainError("no standard string for " + L.str());
    return expand_cf({L.p, L.q});
}

OrientedLensSpace parse_lens(std::string_view text) {
    std::string_view body = text;
    if (body.starts_with("L(") && body.ends_with(")")) {
        body = body.substr(2, body.size() - 3);
        auto comma = body.find(',');
        if (comma == std::string_view::npos) throw ParseError("expected L(p,q), got '" + std::string(text) + "'");
        return normalize(parse_integer(body.substr(0, comma)), parse_integer(body.substr(comma + 1)));
    }
    auto slash = body.find('/');
    if (slash == std::string_view::npos) throw ParseError("expected L(p,q) or p/q, got '" + std::string(text) + "'");
    return normalize(parse_integer(body.substr(0, slash)), parse_integer(body.substr(slash + 1)));
}

}  // namespace lensurg
