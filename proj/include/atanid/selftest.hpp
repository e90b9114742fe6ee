#pragma once

// Runtime property suite behind `atanid selftest`.

#include <string>
#include <vector>

namespace atanid {

struct PropertyCheck {
    std::string module;
    std::string name;
    bool passed = false;
    std::string detail;  // first counterexample when failed
};

/// Runs every module's invariant checks on fixed grids.
std::vector<PropertyCheck> run_selftest();

}  // namespace atanid
