#ifndef ABEL3_VERIFY_HPP
#define ABEL3_VERIFY_HPP

#include <string>
#include <vector>

namespace abel3 {

struct VerifyCheck {
    std::string name;
    bool pass;
    std::string detail;  // expected/actual on failure, summary on success
    double seconds;
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// The full end-to-end suite; deterministic order and content.
VerifyReport run_verification();

}  // namespace abel3

#endif
