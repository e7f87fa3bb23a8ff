#pragma once

#include <functional>
#include <string>
#include <vector>

namespace morava {

struct TheoremInstance {
    std::string instance;  // parameters, e.g. "p=3 n=2 d=3"
    std::string verdict;
    bool pass = false;
};

struct TheoremReport {
    std::string selector;
    std::string claim;
    std::string scope;  // what was actually checked
    std::vector<TheoremInstance> instances;
    bool pass() const;
};

// Recognised: 1.1a 1.1b 1.1c 1.1d 1.1e 1.2b 1.2c 1.3 1.4 hom.
std::vector<std::string> theorem_selectors();

// Runs the machine check behind one statement; `progress` sees each instance
// as it completes.
TheoremReport check_theorem(const std::string& selector,
                            const std::function<void(const TheoremInstance&)>& progress = {});

}  // namespace morava
