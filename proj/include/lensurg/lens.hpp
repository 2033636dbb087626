#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "lensurg/cfrac.hpp"
#include "lensurg/integer.hpp"

namespace lensurg {

/// L(p,q) as -p/q surgery on the unknot. Construct through normalize().
struct OrientedLensSpace {
    Integer p;
    Integer q;

    std::string str() const;
    friend bool operator==(const OrientedLensSpace&, const OrientedLensSpace&) = default;
};

/// Canonical representative. A negative p is absorbed as L(-p,q) = L(p,-q).
/// Throws InvalidPair for (0,0), p = 0 with |q| != 1, or gcd(p,q) != 1.
OrientedLensSpace normalize(const Integer& p, const Integer& q);

/// -L(p,q) = L(p,p-q)
OrientedLensSpace mirror(const OrientedLensSpace& L);

/// The residue relation that identifies two lens spaces: q2 = q1, q1^-1,
/// -q1, or -q1^-1. The last two reverse orientation.
enum class HomeoTransform { Identity, Inverse, Reversed, ReversedInverse };

std::string_view transform_name(HomeoTransform t);

/// q transformed mod p (p >= 2), or nullopt when an inverse is undefined.
std::optional<Integer> apply_transform(HomeoTransform t, const Integer& q, const Integer& p);

struct HomeoDecision {
    bool homeomorphic = false;
    std::optional<HomeoTransform> witness;
};

HomeoDecision is_homeomorphic(const OrientedLensSpace& a, const OrientedLensSpace& b, bool oriented);

/// Standard expansion of p/q for the canonical q; its negatives are the chain framings.
CFExpansion to_standard_string(const OrientedLensSpace& L);

/// Accepts "L(p,q)" or "p/q".
OrientedLensSpace parse_lens(std::string_view text);

}  // namespace lensurg
