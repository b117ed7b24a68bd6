#pragma once

#include "osculant/geometry.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace osc {

class UnknownCatalogEntry : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A classical test variety with its regression profile. Expected profiles
/// were computed with the exact rank oracle and are a regression ledger,
/// not external ground truth.
struct CatalogEntry {
    std::string name;
    Parametrization parametrization;
    std::vector<long> expected_profile;  ///< h_0..h_{size-1}, plan seed 42, S = 5, B = 1000
    std::string provenance;
    std::optional<FiberMap> fiber;
    std::optional<unsigned> fiber_order;  ///< order m at which T(m, ., X) is constant along the fiber
    std::string notes;
};

/// Optional size arguments for the families rnc, rnc_in_hyperplane, cone_rnc.
struct CatalogArgs {
    std::optional<unsigned> degree;
    std::optional<unsigned> ambient;
};

/// Family names, sorted.
std::vector<std::string> catalog_names();

CatalogEntry catalog_get(std::string_view name, const CatalogArgs& args = {});

/// The concrete instances exercised by the verification suites.
std::vector<CatalogEntry> catalog_corpus();

} // namespace osc
