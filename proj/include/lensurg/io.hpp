#pragma once

#include <concepts>

#include <json.hpp>

#include "lensurg/keystone.hpp"
#include "lensurg/lattice.hpp"
#include "lensurg/lisca.hpp"
#include "lensurg/surgery.hpp"

namespace lensurg {

// Insertion-ordered, so serialized records are stable and readable.
using Json = nlohmann::ordered_json;

// Integers that fit in 64 bits are JSON numbers, larger ones decimal strings.
Json integer_json(const Integer& n);
template <std::same_as<Integer> T>
Json to_json(const T& n) { return integer_json(n); }
Json to_json(std::span<const Integer> terms);
Json to_json(const IntMatrix& m);  // list of rows
Json to_json(const OrientedLensSpace& L);
Json to_json(const FamilyWitness& w);
Json to_json(const LiscaString& ls);
Json to_json(const KeystoneReport& r);  // basis vectors as "e1", "e2", ...
Json to_json(const SuggestedKnot& k);
Json to_json(const KnotClass& k);
Json to_json(const Theorem16Instance& row);

/// Throws ParseError unless `j` is a rectangular list of integer rows.
IntMatrix matrix_from_json(const Json& j);

std::string basis_label(int column);

}  // namespace lensurg
