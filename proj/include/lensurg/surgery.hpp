#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lensurg/cfrac.hpp"
#include "lensurg/lens.hpp"

namespace lensurg {

/// H_1 of surgery on a chain link with framings (-a_1, ..., -a_n), any signs.
/// The meridians satisfy mu_i = P_{i-1} mu_1 with P the forward convergents
/// of (a_1, ..., a_n).
struct MeridianClasses {
    Integer order;                // |P_n|
    Integer det;                  // P_n
    std::vector<Integer> classes; // mu_i in the mu_1 basis; reduced mod order unless degenerate
    Integer q_inverse;            // P_{n-1} mod order
    Integer q;                    // mu_1 = q mu_n
    bool degenerate = false;      // P_n = 0: infinite cokernel, classes are over Z
    OrientedLensSpace lens;       // normalize(P_n, Q_n); L(0,1) when degenerate
};

MeridianClasses meridian_classes(std::span<const Integer> framings);

struct KnotClass {
    Integer in_first;  // in the mu_1 basis
    Integer in_last;   // in the mu_n basis
};

/// Class of sum c_i mu_i. Throws DegenerateCokernel when P_n = 0.
KnotClass knot_class(std::span<const Integer> framings, std::span<const Integer> multipliers);

enum class DualFamily { BGI, GOFK, BGII, BGIII, BGV, SPOR, BGIV, BGIVp };

std::string_view dual_family_name(DualFamily f);
std::optional<DualFamily> parse_dual_family(std::string_view name);

/// b for the palindromic families (1) and (2); s, t for (3) and (4).
struct FamilyParams {
    CFExpansion b;
    int s = 0;
    int t = 0;

    std::string str(DualFamily f) const;
};

struct Theorem16Instance {
    DualFamily family;
    FamilyParams params;
    CFExpansion framings;
    CFExpansion multipliers;
    OrientedLensSpace lens;
    Integer m;
    Integer d;
    KnotClass claimed;
    KnotClass computed;
    bool order_matches = false;  // |P_n| = m^2
    bool match = false;          // order matches and computed = +-claimed in both bases
};

/// Builds the chain string and meridian combination of the family and
/// compares the computed class with the closed form. Throws DomainError on
/// invalid parameters (including m = 0).
Theorem16Instance theorem16_instance(DualFamily family, const FamilyParams& params);

/// Extended linking matrix: the chain with the knot attached by its linking
/// numbers epsilon and the given framing.
Matrix<Integer> extended_linking_matrix(std::span<const Integer> framings, std::span<const int> epsilon,
                                        const Integer& framing);

struct S1S2Result {
    bool pass = false;
    std::vector<Integer> snf;
};

/// Homological check that surgery yields S^1 x S^2: the cokernel of the
/// extended linking matrix is Z, i.e. the Smith diagonal is (1, ..., 1, 0).
/// Necessary, not sufficient.
S1S2Result verify_s1s2(std::span<const Integer> framings, std::span<const int> epsilon, const Integer& framing);

struct SimpleKnotClass {
    Integer p;
    Integer q;
    Integer k;

    std::string str() const;
};

struct SymmetryOptions {
    /// Also use orientation-reversing homeomorphisms. Within one lens space
    /// the only such map (p > 2) is multiplication by q when q^2 = -1 mod p.
    bool orientation_reversing = false;
};

/// Equivalence under negation and the homeomorphisms relating the two lens
/// spaces: classes carry over unchanged, or multiplied by q_2 when the solid
/// tori are swapped. Within one space this gives multiplication by q when
/// q^2 = 1, and when q^2 = -1 only with the option.
bool simple_knot_equivalent(const SimpleKnotClass& a, const SimpleKnotClass& b, const SymmetryOptions& options = {});

/// L(np^2, npq+1). Throws InvalidPair on gcd(p,q) != 1, p < 0 or n = 0.
OrientedLensSpace torus_knot_surgery(const Integer& p, const Integer& q, const Integer& n);
/// L(4p^2, 4pq +- 1).
OrientedLensSpace cable_surgery(const Integer& p, const Integer& q, int sign);

}  // namespace lensurg
