#include "lensurg/surgery.hpp"

#include <array>

#include "lensurg/errors.hpp"
#include "lensurg/snf.hpp"

namespace lensurg {

namespace {

CFExpansion negated(std::span<const Integer> xs) {
    CFExpansion out;
    out.reserve(xs.size());
    for (const auto& x : xs) out.push_back(-x);
    return out;
}

}  // namespace

MeridianClasses meridian_classes(std::span<const Integer> framings) {
    const CFExpansion a = negated(framings);
    const ConvergentTable table = convergents(a);
    const long n = static_cast<long>(a.size());
    MeridianClasses out;
    out.det = table.P(n);
    out.order = abs(out.det);
    out.degenerate = out.det == 0;
    for (long i = 1; i <= n; ++i) {
        const Integer& P = table.P(i - 1);
        out.classes.push_back(out.degenerate ? P : floor_mod(P, out.order));
    }
    if (out.degenerate) {
        out.q_inverse = table.P(n - 1 < 0 ? -1 : n - 1);
        out.q = 0;
        out.lens = {0, 1};
        return out;
    }
    out.q_inverse = floor_mod(n >= 1 ? table.P(n - 1) : Integer(0), out.order);
    out.q = floor_mod(table.Q(n), out.order);
    out.lens = normalize(out.det, table.Q(n));
    return out;
}

KnotClass knot_class(std::span<const Integer> framings, std::span<const Integer> multipliers) {
    if (framings.size() != multipliers.size()) {
        throw DimensionMismatch("knot has " + std::to_string(multipliers.size()) + " multipliers for " +
                                std::to_string(framings.size()) + " chain components");
    }
    const MeridianClasses mc = meridian_classes(framings);
    if (mc.degenerate) throw DegenerateCokernel("chain [" + format_terms(framings) + "] has infinite homology");
    Integer k = 0;
    for (std::size_t i = 0; i < multipliers.size(); ++i) k += multipliers[i] * mc.classes[i];
    k = floor_mod(k, mc.order);
    return {k, floor_mod(k * mc.q, mc.order)};
}

std::string_view dual_family_name(DualFamily f) {
    static constexpr std::array names{"BGI", "GOFK", "BGII", "BGIII", "BGV", "SPOR", "BGIV", "BGIV'"};
    return names[static_cast<std::size_t>(f)];
}

std::optional<DualFamily> parse_dual_family(std::string_view name) {
    for (int i = 0; i < 8; ++i) {
        auto f = static_cast<DualFamily>(i);
        if (dual_family_name(f) == name) return f;
    }
    if (name == "BGIVp") return DualFamily::BGIVp;
    return std::nullopt;
}

std::string FamilyParams::str(DualFamily f) const {
    switch (f) {
        case DualFamily::BGI:
        case DualFamily::GOFK:
        case DualFamily::BGII: return "b=" + format_terms(b);
        default: return "s=" + std::to_string(s) + ",t=" + std::to_string(t);
    }
}

Theorem16Instance theorem16_instance(DualFamily family, const FamilyParams& params) {
    Theorem16Instance row{family, params, {}, {}, {0, 1}, 0, 0, {}, {}, false, false};
    const auto& b = params.b;
    const std::size_t L = b.size();
    const Integer s = params.s;
    const Integer t = params.t;

    // claimed classes in the mu_1 and mu_n bases, as multiples of m
    Integer first;
    Integer last;

    switch (family) {
        case DualFamily::BGI:
        case DualFamily::GOFK:
        case DualFamily::BGII: {
            if (L == 0) throw DomainError("family needs a non-empty b-sequence");
            const bool palindrome_one = family != DualFamily::BGII;
            row.framings = negated(b);
            row.framings.push_back(palindrome_one ? -1 : -4);
            for (auto it = b.rbegin(); it != b.rend(); ++it) row.framings.push_back(*it);
            row.multipliers.assign(2 * L + 1, 0);
            const ConvergentTable table = convergents(b);
            const Integer P = table.P(static_cast<long>(L));
            const Integer Q = table.Q(static_cast<long>(L));
            row.m = palindrome_one ? P : 2 * P;
            row.d = palindrome_one ? Q : 2 * Q;
            if (family == DualFamily::BGI) {
                row.multipliers[L] = -1;
                first = last = -1;
            } else if (family == DualFamily::GOFK) {
                row.multipliers[0] = 1;
                row.multipliers[2 * L] = -1;
                first = last = -row.d;
            } else {
                row.multipliers[L - 1] = 1;
                row.multipliers[L] = -2;
                row.multipliers[L + 1] = 1;
                first = last = 1;
            }
            break;
        }
        case DualFamily::BGIII:
        case DualFamily::BGV:
        case DualFamily::SPOR: {
            if (family == DualFamily::SPOR && t != 1) throw DomainError("SPOR needs t = 1");
            row.framings = {t + 1, -s - 2, -2, -t - 2, -2, s + 1};
            row.m = 4 + 3 * t + 2 * s + 2 * s * t;
            row.d = -(3 + 2 * s);
            if (family == DualFamily::BGIII) {
                row.multipliers = {1, 0, 0, 1, 0, 0};
                first = -1;
                last = row.d;
            } else if (family == DualFamily::BGV) {
                row.multipliers = {0, 0, 1, 0, -1, 0};
                first = 1 + t;
                last = -1;
            } else {
                row.multipliers = {0, 1, 0, 0, 0, -1};
                first = 4;
                last = -2;
            }
            break;
        }
        case DualFamily::BGIV:
        case DualFamily::BGIVp: {
            row.framings = {t + 1, -2, -s - 2, -t - 2, -2, s + 1};
            row.m = 4 + 3 * s + 3 * t + 2 * s * t;
            row.d = -(3 + 2 * s);
            if (family == DualFamily::BGIV) {
                row.multipliers = {1, 0, 0, 1, 0, 0};
                first = -1;
                last = row.d;
            } else {
                row.multipliers = {0, 0, 1, 0, 0, 1};
                first = -(3 + 2 * t);
                last = -1;
            }
            break;
        }
    }
    if (row.m == 0) {
        throw DomainError(std::string(dual_family_name(family)) + " at " + params.str(family) + " has m = 0");
    }

    const MeridianClasses mc = meridian_classes(row.framings);
    row.order_matches = !mc.degenerate && mc.order == row.m * row.m;
    if (mc.degenerate) return row;
    row.lens = mc.lens;
    row.computed = knot_class(row.framings, row.multipliers);
    const Integer& p = mc.order;
    row.claimed = {floor_mod(first * row.m, p), floor_mod(last * row.m, p)};
    auto up_to_sign = [&](const Integer& x, const Integer& y) { return floor_mod(x - y, p) == 0 || floor_mod(x + y, p) == 0; };
    row.match = row.order_matches && up_to_sign(row.computed.in_first, row.claimed.in_first) &&
                up_to_sign(row.computed.in_last, row.claimed.in_last);
    return row;
}

Matrix<Integer> extended_linking_matrix(std::span<const Integer> framings, std::span<const int> epsilon,
                                        const Integer& framing) {
    if (framings.size() != epsilon.size()) {
        throw DimensionMismatch("epsilon has " + std::to_string(epsilon.size()) + " entries for " +
                                std::to_string(framings.size()) + " chain components");
    }
    const Eigen::Index n = static_cast<Eigen::Index>(framings.size());
    Matrix<Integer> m = Matrix<Integer>::Zero(n + 1, n + 1);
    for (Eigen::Index i = 0; i < n; ++i) {
        m(i, i) = framings[static_cast<std::size_t>(i)];
        if (i + 1 < n) m(i, i + 1) = m(i + 1, i) = 1;
        m(i, n) = m(n, i) = epsilon[static_cast<std::size_t>(i)];
    }
    m(n, n) = framing;
    return m;
}

S1S2Result verify_s1s2(std::span<const Integer> framings, std::span<const int> epsilon, const Integer& framing) {
    S1S2Result result;
    result.snf = smith_diagonal<Integer>(extended_linking_matrix(framings, epsilon, framing));
    result.pass = !result.snf.empty() && result.snf.back() == 0;
    for (std::size_t i = 0; i + 1 < result.snf.size(); ++i) result.pass = result.pass && result.snf[i] == 1;
    return result;
}

std::string SimpleKnotClass::str() const { return "K(" + to_string(p) + "," + to_string(q) + "," + to_string(k) + ")"; }

bool simple_knot_equivalent(const SimpleKnotClass& a, const SimpleKnotClass& b, const SymmetryOptions& options) {
    if (a.p != b.p) return false;
    const Integer& p = a.p;
    if (p <= 1) return true;
    if (gcd(a.q, p) != 1 || gcd(b.q, p) != 1) throw InvalidPair("simple knot needs gcd(p,q) = 1");
    const Integer q2 = floor_mod(b.q, p);
    constexpr std::array all{HomeoTransform::Identity, HomeoTransform::Inverse, HomeoTransform::Reversed,
                             HomeoTransform::ReversedInverse};
    for (auto t : all) {
        const bool reversing = t == HomeoTransform::Reversed || t == HomeoTransform::ReversedInverse;
        if (reversing && !options.orientation_reversing) continue;
        auto image = apply_transform(t, a.q, p);
        if (!image || *image != q2) continue;
        // swapping the solid tori sends mu to mu' = q mu
        const bool swapped = t == HomeoTransform::Inverse || t == HomeoTransform::ReversedInverse;
        const Integer k = swapped ? Integer(q2 * a.k) : a.k;
        if (floor_mod(k - b.k, p) == 0 || floor_mod(k + b.k, p) == 0) return true;
    }
    return false;
}

OrientedLensSpace torus_knot_surgery(const Integer& p, const Integer& q, const Integer& n) {
    if (p < 0 || n == 0 || gcd(p, q) != 1) {
        throw InvalidPair("torus knot T(" + to_string(p) + "," + to_string(q) + ") with n = " + to_string(n));
    }
    return normalize(n * p * p, n * p * q + 1);
}

OrientedLensSpace cable_surgery(const Integer& p, const Integer& q, int sign) {
    if (p < 0 || gcd(p, q) != 1 || (sign != 1 && sign != -1)) {
        throw InvalidPair("cable of T(" + to_string(p) + "," + to_string(q) + ") with sign " + std::to_string(sign));
    }
    return normalize(4 * p * p, 4 * p * q + sign);
}

}  // namespace lensurg
