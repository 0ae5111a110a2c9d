#ifndef MZLAB_REGISTRY_HPP
#define MZLAB_REGISTRY_HPP

#include <string>
#include <vector>

#include "mzlab/report.hpp"

namespace mzlab {

struct ExampleInfo {
    std::string id;
    std::string description;
};

// Fixed verification registry; every entry is deterministic.
const std::vector<ExampleInfo>& example_registry();

Report run_example(const std::string& id);  // throws unknown_example_error

}  // namespace mzlab

#endif
