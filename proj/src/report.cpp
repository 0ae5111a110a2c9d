#include "mzlab/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace mzlab {

const char* to_string(ClaimStatus s) {
    switch (s) {
        case ClaimStatus::Verified: return "verified";
        case ClaimStatus::Falsified: return "falsified";
        case ClaimStatus::BoundedEvidence: return "bounded-evidence";
        case ClaimStatus::TheoremAsserted: return "theorem-asserted";
    }
    return "?";
}

bool Report::any_falsified() const {
    return std::any_of(claims.begin(), claims.end(),
                       [](const Claim& c) { return c.status == ClaimStatus::Falsified; });
}

std::string Report::to_json() const {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["claims"] = nlohmann::ordered_json::array();
    for (const Claim& c : claims) {
        nlohmann::ordered_json jc;
        jc["statement"] = c.statement;
        jc["status"] = to_string(c.status);
        jc["exact"] = c.exact;
        jc["bounds"] = {{"degree", c.degree_bound}, {"power", c.power_bound}};
        if (c.witness)
            jc["witness"] = *c.witness;
        else
            jc["witness"] = nullptr;
        j["claims"].push_back(std::move(jc));
    }
    return j.dump(2) + "\n";
}

std::string Report::to_text() const {
    std::ostringstream os;
    os << "# " << command << "\n";
    for (const Claim& c : claims) {
        os << "  [" << to_string(c.status) << "] " << c.statement;
        os << "  {" << (c.exact ? "exact" : "bounded") << ", degree<=" << c.degree_bound
           << ", power<=" << c.power_bound << "}";
        if (c.witness) os << "  witness: " << *c.witness;
        os << "\n";
    }
    return os.str();
}

}  // namespace mzlab
