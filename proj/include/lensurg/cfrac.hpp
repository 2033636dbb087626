#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lensurg/integer.hpp"

namespace lensurg {

/// A value in Q ∪ {1/0}, kept in lowest terms with a non-negative denominator.
class ExtendedRational {
public:
    /// Throws UndefinedValue for 0/0.
    ExtendedRational(Integer numerator, Integer denominator = 1);

    static ExtendedRational infinity() { return {1, 0}; }

    const Integer& num() const { return num_; }
    const Integer& den() const { return den_; }
    bool is_infinite() const { return den_ == 0; }

    /// a - 1/this, for an integer a. 1/(1/0) = 0 and a - 1/0 = 1/0.
    ExtendedRational subtract_reciprocal_from(const Integer& a) const;

    /// "p/q", or "p" when q = 1.
    std::string str() const;

    friend bool operator==(const ExtendedRational&, const ExtendedRational&) = default;

private:
    Integer num_;
    Integer den_;
};

ExtendedRational parse_rational(std::string_view text);

/// Terms (a_1, ..., a_n) of the negative continued fraction [a_1, ..., a_n]^-.
using CFExpansion = std::vector<Integer>;

/// All terms >= 2.
bool is_standard(std::span<const Integer> terms);

/// Value of a_1 - 1/(a_2 - 1/(...)); the empty expansion is 1/0.
ExtendedRational eval_cf(std::span<const Integer> terms);

/// Forward convergents P_i/Q_i = [a_1..a_i]^- and backward convergents
/// p_i/q_i = [a_i..a_1]^-, both indexed i = -1..n.
struct ConvergentTable {
    std::vector<std::pair<Integer, Integer>> forward;
    std::vector<std::pair<Integer, Integer>> backward;

    std::size_t length() const { return forward.size() - 2; }
    const Integer& P(long i) const { return forward.at(static_cast<std::size_t>(i + 1)).first; }
    const Integer& Q(long i) const { return forward.at(static_cast<std::size_t>(i + 1)).second; }
    const Integer& p(long i) const { return backward.at(static_cast<std::size_t>(i + 1)).first; }
    const Integer& q(long i) const { return backward.at(static_cast<std::size_t>(i + 1)).second; }
};

ConvergentTable convergents(std::span<const Integer> terms);

/// The unique all->=2 expansion of p/q, p > q >= 1, by greedy ceilings.
CFExpansion expand_cf(const ExtendedRational& value);

/// c*P_k^2 / (c*P_k*Q_k + 1) for the forward convergents of b; equals
/// eval_cf of (b_1..b_k, c, -b_k..-b_1).
ExtendedRational palindrome_value(std::span<const Integer> b, const Integer& c);

/// (b_1..b_k, c, -b_k..-b_1)
CFExpansion palindrome(std::span<const Integer> b, const Integer& c);

/// Standard expansion of r/s with q/p + s/r = 1 where p/q = [b]^-.
/// Riemenschneider dual of b; an involution.
CFExpansion complementary_string(std::span<const Integer> b);

std::string format_terms(std::span<const Integer> terms);
CFExpansion parse_terms(std::string_view text);

}  // namespace lensurg
