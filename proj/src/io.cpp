#include "lensurg/io.hpp"

#include "lensurg/errors.hpp"

namespace lensurg {

Json integer_json(const Integer& n) {
    if (n >= std::numeric_limits<long long>::min() && n <= std::numeric_limits<long long>::max()) {
        return n.convert_to<long long>();
    }
    return to_string(n);
}

Json to_json(std::span<const Integer> terms) {
    Json out = Json::array();
    for (const auto& x : terms) out.push_back(to_json(x));
    return out;
}

Json to_json(const IntMatrix& m) {
    Json out = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        out.push_back(std::move(row));
    }
    return out;
}

Json to_json(const OrientedLensSpace& L) { return L.str(); }

Json to_json(const FamilyWitness& w) {
    return {{"family", family_name(w.family)},
            {"m", to_json(w.m)},
            {"d", to_json(w.d)},
            {"mode", transform_name(w.mode)}};
}

Json to_json(const LiscaString& ls) {
    Json out{{"type", type_name(ls.type)}, {"reversed", ls.reversed}};
    if (ls.type == StringType::T1 || ls.type == StringType::T4) {
        out["b"] = to_json(ls.b);
        out["c"] = to_json(ls.c);
        out["history"] = ls.history;
    } else {
        out["s"] = ls.s;
        out["t"] = ls.t;
    }
    out["coefficients"] = to_json(ls.coefficients);
    return out;
}

std::string basis_label(int column) { return "e" + std::to_string(column + 1); }

namespace {

Json labels(const std::vector<int>& columns) {
    Json out = Json::array();
    for (int c : columns) out.push_back(basis_label(c));
    return out;
}

}  // namespace

Json to_json(const KeystoneReport& r) {
    Json witnesses = Json::object();
    for (const auto& [e, w] : r.witnesses) {
        witnesses[basis_label(e)] = {{"order", labels(w.order)}, {"rows", w.rows}};
    }
    return {{"e2", labels(r.e2)}, {"keystones", labels(r.keystones)}, {"witnesses", std::move(witnesses)}};
}

Json to_json(const SuggestedKnot& k) {
    return {{"coefficients", to_json(k.coefficients)}, {"keystone", basis_label(k.keystone)}, {"epsilon", k.epsilon},
            {"framing", k.framing}};
}

Json to_json(const KnotClass& k) { return {{"mu_first", to_json(k.in_first)}, {"mu_last", to_json(k.in_last)}}; }

Json to_json(const Theorem16Instance& row) {
    return {{"family", dual_family_name(row.family)},
            {"params", row.params.str(row.family)},
            {"p", to_json(row.lens.p)},
            {"q", to_json(row.lens.q)},
            {"claimed", to_json(row.claimed)},
            {"computed", to_json(row.computed)},
            {"match", row.match}};
}

IntMatrix matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty() || !j.front().is_array()) throw ParseError("matrix must be a non-empty list of rows");
    const auto rows = static_cast<Eigen::Index>(j.size());
    const auto cols = static_cast<Eigen::Index>(j.front().size());
    IntMatrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        const auto& row = j[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) throw ParseError("ragged matrix row");
        for (Eigen::Index c = 0; c < cols; ++c) {
            const auto& x = row[static_cast<std::size_t>(c)];
            if (!x.is_number_integer()) throw ParseError("matrix entry is not an integer: " + x.dump());
            m(i, c) = x.get<int>();
        }
    }
    return m;
}

}  // namespace lensurg
