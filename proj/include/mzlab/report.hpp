#ifndef MZLAB_REPORT_HPP
#define MZLAB_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

namespace mzlab {

enum class ClaimStatus { Verified, Falsified, BoundedEvidence, TheoremAsserted };

const char* to_string(ClaimStatus s);

struct Claim {
    std::string statement;
    ClaimStatus status = ClaimStatus::Verified;
    bool exact = true;
    int degree_bound = 0;
    int power_bound = 0;
    std::optional<std::string> witness;
};

// Machine-readable outcome of one command; serialization is deterministic
// (fixed key order, canonical coefficient printing).
struct Report {
    std::string command;
    std::vector<Claim> claims;

    bool any_falsified() const;
    std::string to_json() const;
    std::string to_text() const;
};

}  // namespace mzlab

#endif
