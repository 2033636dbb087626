#pragma once

#include <span>
#include <string>
#include <vector>

#include "lensurg/cfrac.hpp"
#include "lensurg/integer.hpp"
#include "lensurg/lisca.hpp"

namespace lensurg {

/// Tridiagonal pairing of the plumbing: diagonal -a_i, off-diagonal 1.
struct IntersectionForm {
    CFExpansion coefficients;  // (-a_1, ..., -a_n)
    IntMatrix matrix;

    int rank() const { return static_cast<int>(matrix.rows()); }
    /// a_i as machine integers.
    std::vector<int> weights() const;
};

/// Throws DomainError unless every coefficient is <= -1.
IntersectionForm form_from_string(std::span<const Integer> coefficients);

/// Rows are the images of v_1..v_n, columns the basis e_1..e_n with e_i.e_j = -delta_ij.
using LatticeEmbedding = IntMatrix;

/// Gram matrix of the rows under the negative-diagonal pairing: -(L L^T).
inline IntMatrix gram(const LatticeEmbedding& emb) { return -(emb * emb.transpose()); }

/// Throws DimensionMismatch when emb is not rank x rank.
bool verify_embedding(const IntersectionForm& form, const LatticeEmbedding& emb);

struct SearchOptions {
    /// Skip the search when P_n is not a perfect square (det(L)^2 = P_n is
    /// forced). Switching it off must not change any result.
    bool determinant_prefilter = true;
};

/// Canonical representatives of all embeddings up to column permutation and
/// column signs (which include the global sign), sorted.
std::vector<LatticeEmbedding> find_embeddings(const IntersectionForm& form, const SearchOptions& options = {});

/// Each column flipped so its first nonzero entry is negative, then columns
/// sorted lexicographically top-down. This is the row-major lexicographic
/// minimum of the orbit.
LatticeEmbedding canonical_form(const LatticeEmbedding& emb);

bool embeddings_equivalent(const LatticeEmbedding& a, const LatticeEmbedding& b);

/// The explicit embedding for a recognized string, in the string's own row order.
LatticeEmbedding table_embedding(const LiscaString& ls);

bool entries_unit_bounded(const LatticeEmbedding& emb);

/// Rows "v1 | + - 0 ..." with one column per basis vector. Entries outside
/// {-1,0,1} are written as integers.
std::string sign_table(const LatticeEmbedding& emb);

/// Lexicographic order on (rows, cols, row-major entries).
bool matrix_less(const IntMatrix& a, const IntMatrix& b);

}  // namespace lensurg
