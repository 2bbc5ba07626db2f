#pragma once

#include <string>
#include <vector>

namespace freeid {

enum class CheckLevel { Desk, Full };
CheckLevel parse_check_level(std::string_view name);
std::string to_string(CheckLevel level);

struct CheckItem {
    std::string module;
    std::string name;
    bool ok = false;
    std::string detail;
    double seconds = 0.0;
};

inline const std::vector<std::string> kCheckModules = {"partitions", "cumulants", "trees_dyck", "chains", "hopf", "transforms"};

// Invariants of one module, or of every module for "all". Errors thrown by
// a check are caught and reported as a failed item.
std::vector<CheckItem> run_checks(const std::string& module, CheckLevel level);

}  // namespace freeid
