#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "lensurg/lattice.hpp"

namespace lensurg {

// Column indices are 0-based throughout; e_1 is column 0.

/// A filtration certifying a keystone: columns removed in order (order[0] is
/// the keystone) and, for each later removal, the row whose restriction to the
/// remaining columns was +-e at that step.
struct KeystoneWitness {
    std::vector<int> order;
    std::vector<int> rows;
};

struct KeystoneReport {
    std::vector<int> e2;
    std::vector<int> keystones;
    std::map<int, KeystoneWitness> witnesses;
};

/// Columns with a nonzero entry in some row of norm 2.
std::vector<int> two_support_basis(const LatticeEmbedding& emb);

/// Removing e, then repeatedly any column that some row restricts to. A column
/// that becomes removable stays removable as the remaining set shrinks, so
/// taking the first available column at each step decides existence.
std::optional<KeystoneWitness> is_keystone(const LatticeEmbedding& emb, int e);

KeystoneReport keystone_set(const LatticeEmbedding& emb);

struct SuggestedKnot {
    CFExpansion coefficients;
    int keystone = 0;
    std::vector<int> epsilon;  // e.v_j under e_i.e_j = -delta_ij, first nonzero negative
    int framing = -1;
};

/// Throws DomainError when e is not a keystone.
SuggestedKnot suggested_knot(const LatticeEmbedding& emb, std::span<const Integer> coefficients, int e);

}  // namespace lensurg
