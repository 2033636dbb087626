#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lensurg/cache.hpp"
#include "lensurg/surgery.hpp"

namespace lensurg {

/// One failed item, with a command line that reproduces it.
struct Finding {
    std::string subject;
    std::string detail;
    std::string repro;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::size_t checked = 0;
    std::string summary;
    std::vector<Finding> failures;
    double seconds = 0;
    std::optional<double> budget_seconds;  // exceeding it is a failure
};

/// A named check of a quoted value.
struct Golden {
    std::string name;
    bool pass = false;
    std::string detail;
    std::string repro;
};

struct VerifyConfig {
    int max_order = 300;   // lens spaces L(p,q) with 2 <= p <= max_order
    int rank_bound = 9;    // generated strings up to this length
    int cf_cases = 10000;  // random cases per continued-fraction identity
    int jobs = 1;
    EmbeddingCache* cache = nullptr;
    std::string program = "lensurg";
};

CriterionResult check_continued_fractions(const VerifyConfig& config);
CriterionResult check_family_sweep(const VerifyConfig& config);
CriterionResult check_embedding_uniqueness(const VerifyConfig& config);
CriterionResult check_dual_classes(const VerifyConfig& config);
CriterionResult check_keystones(const VerifyConfig& config);
CriterionResult check_goldens(const VerifyConfig& config);
CriterionResult check_negative_control(const VerifyConfig& config);

/// Families (1)/(2) over b-sequences with entries in [2,5] and k <= 2,
/// families (3)/(4) over 0 <= s,t <= 6, SPOR at t = 1.
std::vector<std::pair<DualFamily, FamilyParams>> theorem16_grid();

std::vector<Golden> golden_checks(const std::string& program = "lensurg");

inline constexpr int criterion_count = 7;

/// Criteria in order; `only` restricts to the listed ids.
std::vector<CriterionResult> verify_all(const VerifyConfig& config, const std::vector<int>& only = {});

}  // namespace lensurg
