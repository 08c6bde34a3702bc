#pragma once

#include <functional>
#include <string>
#include <vector>

namespace qspin {

struct criterion_result {
    int number = 0;
    std::string title;
    bool pass = false;
    std::string detail;
    double elapsed_ms = 0;
};

// Runs every acceptance criterion in order. The callback, when given, sees
// each result as soon as it is available.
std::vector<criterion_result>
run_acceptance(const std::function<void(const criterion_result&)>& on_result = {});

std::string format_criterion(const criterion_result& r);

} // namespace qspin
