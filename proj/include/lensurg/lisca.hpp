#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lensurg/cfrac.hpp"
#include "lensurg/lens.hpp"

namespace lensurg {

// ---------------------------------------------------------------------------
// The four families L(m^2, md+1) (gcd 1 or 2) and L(m^2, d(m-1)).

enum class Family { F1, F2, F3, F4 };

std::string_view family_name(Family f);

struct FamilyWitness {
    Family family;
    Integer m;
    Integer d;
    HomeoTransform mode;  // how q was transformed before matching

    friend bool operator==(const FamilyWitness&, const FamilyWitness&) = default;
};

/// Every witness with m^2 = p. In oriented mode only the Identity and Inverse
/// transforms of q are tried. Empty for non-square p and for p = 0.
std::vector<FamilyWitness> classify_family(const OrientedLensSpace& L, bool oriented = false);

// ---------------------------------------------------------------------------
// The seven string types that bound rational homology balls.

enum class StringType { T1 = 1, T2, T3, T4, T5, T6, T7 };

std::string_view type_name(StringType t);

/// One match of a coefficient string against a type.
///
/// `coefficients` is the string as given. When `reversed` is set, the type's
/// pattern matches the reversal. For T2/T3/T5/T6/T7 the pattern parameters are
/// (s, t); for T1/T4 they are the complementary pair (b, c) together with the
/// sequence of expansion operations, 'a' or 'b', that builds the pattern from
/// its seed.
struct LiscaString {
    CFExpansion coefficients;
    StringType type;
    bool reversed = false;
    int s = 0;
    int t = 0;
    CFExpansion b;
    CFExpansion c;
    std::string history;

    /// The coefficients in the orientation the pattern matches.
    CFExpansion pattern() const;
};

/// Pattern for T2, T3, T5, T6 or T7 at (s, t), both >= 0.
CFExpansion type_pattern(StringType type, int s, int t);

/// (a): prepend -2 and decrement the last entry.
CFExpansion expansion_a(std::span<const Integer> s);
/// (b): decrement the first entry and append -2.
CFExpansion expansion_b(std::span<const Integer> s);

/// (-2,-2,-2) for T1 and (-3,-2,-2,-3) for T4.
CFExpansion seed(StringType type);

std::vector<LiscaString> recognize_string_type(std::span<const Integer> coefficients);

/// All strings of the type with length <= length_bound, in canonical order
/// (by length, then lexicographically).
std::vector<LiscaString> generate_type_strings(StringType type, int length_bound);

/// Negated standard expansion, i.e. the chain-link framings of L.
CFExpansion chain_coefficients(std::span<const Integer> standard);

}  // namespace lensurg
