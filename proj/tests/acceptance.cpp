// Acceptance suite: runs every verification claim exactly (tolerance zero)
// and prints one pass/fail line per criterion.
#include "lsa/report.hpp"

#include <iostream>

int main() {
    std::vector<lsa::Claim> claims = lsa::verification_claims();
    for (const lsa::Claim& c : claims) {
        std::cout << (c.pass ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.label
                  << "\n";
        if (!c.pass) std::cout << "     " << c.detail << "\n";
    }
    bool ok = lsa::all_pass(claims);
    std::cout << (ok ? "all criteria passed" : "FAILURES present") << "\n";
    return ok ? 0 : 1;
}
