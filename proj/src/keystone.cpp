#include "lensurg/keystone.hpp"

#include <algorithm>

#include "lensurg/errors.hpp"

namespace lensurg {

std::vector<int> two_support_basis(const LatticeEmbedding& emb) {
    std::vector<int> out;
    for (Eigen::Index j = 0; j < emb.cols(); ++j) {
        for (Eigen::Index i = 0; i < emb.rows(); ++i) {
            if (emb(i, j) != 0 && emb.row(i).squaredNorm() == 2) {
                out.push_back(static_cast<int>(j));
                break;
            }
        }
    }
    return out;
}

std::optional<KeystoneWitness> is_keystone(const LatticeEmbedding& emb, int e) {
    const int n = static_cast<int>(emb.cols());
    if (e < 0 || e >= n) return std::nullopt;
    std::vector<bool> remaining(static_cast<std::size_t>(n), true);
    remaining[static_cast<std::size_t>(e)] = false;
    KeystoneWitness w{{e}, {}};

    for (int step = 1; step < n; ++step) {
        bool removed = false;
        for (Eigen::Index i = 0; i < emb.rows() && !removed; ++i) {
            int support = -1;
            int count = 0;
            bool unit = true;
            for (int j = 0; j < n; ++j) {
                if (!remaining[static_cast<std::size_t>(j)] || emb(i, j) == 0) continue;
                ++count;
                support = j;
                unit = unit && (emb(i, j) == 1 || emb(i, j) == -1);
            }
            if (count == 1 && unit) {
                remaining[static_cast<std::size_t>(support)] = false;
                w.order.push_back(support);
                w.rows.push_back(static_cast<int>(i));
                removed = true;
            }
        }
        if (!removed) return std::nullopt;
    }
    return w;
}

KeystoneReport keystone_set(const LatticeEmbedding& emb) {
    KeystoneReport report;
    report.e2 = two_support_basis(emb);
    for (int e : report.e2) {
        if (auto w = is_keystone(emb, e)) {
            report.keystones.push_back(e);
            report.witnesses.emplace(e, std::move(*w));
        }
    }
    return report;
}

SuggestedKnot suggested_knot(const LatticeEmbedding& emb, std::span<const Integer> coefficients, int e) {
    if (!is_keystone(emb, e)) throw DomainError("e" + std::to_string(e + 1) + " is not a keystone");
    SuggestedKnot knot{{coefficients.begin(), coefficients.end()}, e, {}, -1};
    for (Eigen::Index i = 0; i < emb.rows(); ++i) knot.epsilon.push_back(-emb(i, e));
    auto first = std::find_if(knot.epsilon.begin(), knot.epsilon.end(), [](int x) { return x != 0; });
    if (first != knot.epsilon.end() && *first > 0) {
        for (int& x : knot.epsilon) x = -x;
    }
    return knot;
}

}  // namespace lensurg
