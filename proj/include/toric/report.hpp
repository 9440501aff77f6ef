#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "toric/toric_model.hpp"

namespace toric {

/// Raised when an affine computation meets an infinite weight family and no
/// degree bound was supplied; truncation is never silent.
struct MissingDegreeBound : std::runtime_error {
    explicit MissingDegreeBound(const std::string& what) : std::runtime_error(what) {}
};

/// One basis element chi^I * V_I ^ (v_{c_1} ^ ... ), identified by the weight,
/// the frame indices T and the complement tuple; |T| + |complement| = k.
struct BasisDescriptor {
    Weight weight;
    std::vector<std::int64_t> chi_exponents;
    std::vector<int> frame_indices;
    std::vector<int> complement;
};

struct WeightEntry {
    Weight weight;
    std::vector<std::int64_t> full;
    unsigned long long mult = 0;
};

struct DegreeEntry {
    int k = 0;
    unsigned long long dim = 0;  // finite total; within-bound total when infinite
    bool infinite = false;
    std::vector<std::vector<int>> witness;  // patterns T witnessing infiniteness
    bool truncated = false;
    bool has_weights = true;  // false for the projective oracle (dims only)
    std::vector<WeightEntry> weights;
    std::vector<BasisDescriptor> basis;
};

struct CohomologyReport {
    Space space{SpaceKind::projective, 1};
    PoissonStructure pi{1};
    std::string source;  // "closed" | "oracle"
    std::optional<std::int64_t> degree_bound;
    bool with_basis = false;
    std::vector<DegreeEntry> H;  // k = 0..k_max
};

struct Diff {
    std::vector<std::string> items;
    bool empty() const { return items.empty(); }
};

/// Empty iff all finite dimensions agree and the infinite/truncation flags
/// are consistent. Weight lists are compared when both sides carry them,
/// restricted to the explored degree bound; a nonempty diff is data.
Diff compare(const CohomologyReport& engine, const CohomologyReport& oracle);

nlohmann::json poisson_to_json(const PoissonStructure& pi);
PoissonStructure poisson_from_json(const nlohmann::json& j, std::optional<int> expect_n);

nlohmann::json report_to_json(const CohomologyReport& report);
CohomologyReport report_from_json(const nlohmann::json& j);
std::string report_to_table(const CohomologyReport& report);

/// Human-readable monomial form, e.g. "z0^-1 z1^-1 z2^2 · v1^v2"
/// (projective, homogeneous) or "z1^-1 z2^-1 · v1^v2" (affine).
std::string basis_element_str(const Space& space, int k, const BasisDescriptor& b);

}  // namespace toric
