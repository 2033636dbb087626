#pragma once

#include <random>
#include <vector>

#include "lensurg/integer.hpp"

namespace testing_support {

using lensurg::Integer;

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(20240917);
    return gen;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline std::vector<Integer> random_terms(int max_len, int lo, int hi, int min_len = 0) {
    std::vector<Integer> v(static_cast<std::size_t>(uniform(min_len, max_len)));
    for (auto& x : v) x = uniform(lo, hi);
    return v;
}

inline std::vector<Integer> ints(std::initializer_list<int> xs) { return {xs.begin(), xs.end()}; }

}  // namespace testing_support
