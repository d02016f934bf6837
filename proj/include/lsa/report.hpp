#ifndef LSA_REPORT_HPP
#define LSA_REPORT_HPP

#include <string>
#include <vector>

namespace lsa {

struct Claim {
    int number;
    std::string label;
    bool pass;
    std::string detail;
};

/// Runs the built-in verification table: every closed-form dimension,
/// identity, and bound claim the library is expected to reproduce, checked
/// by exact computation.  One entry per claim.
std::vector<Claim> verification_claims();

bool all_pass(const std::vector<Claim>& claims);

} // namespace lsa

#endif
