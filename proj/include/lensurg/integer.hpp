#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

namespace lensurg {

using Integer = boost::multiprecision::cpp_int;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntegerMatrix = Matrix<Integer>;
using IntMatrix = Matrix<int>;

/// Least non-negative residue of `a` modulo `m` (m > 0).
Integer floor_mod(const Integer& a, const Integer& m);

/// Non-negative gcd; gcd(0, 0) = 0.
Integer gcd(const Integer& a, const Integer& b);

/// Inverse of `a` modulo `m` (m >= 1), or nullopt when gcd(a, m) != 1.
std::optional<Integer> mod_inverse(const Integer& a, const Integer& m);

Integer isqrt(const Integer& n);
bool is_square(const Integer& n);

std::string to_string(const Integer& n);

// Throws ParseError naming the token.
Integer parse_integer(std::string_view token);

// Narrowing conversion for lattice code; throws DomainError when out of range.
int to_int(const Integer& n);

std::vector<Integer> to_integers(const std::vector<int>& xs);

}  // namespace lensurg

namespace Eigen {

template <>
struct NumTraits<lensurg::Integer> : GenericNumTraits<lensurg::Integer> {
    enum {
        IsInteger = 1,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 3,
        MulCost = 3
    };
};

}  // namespace Eigen
