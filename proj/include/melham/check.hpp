#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace melham {

// Outcome of one exact identity check. pass is true iff lhs and rhs agreed
// exactly; the strings carry the exact rendered values for reports.
struct IdentityCheck {
    std::string name;
    std::vector<std::pair<std::string, long long>> params;
    bool pass = false;
    std::string lhs, rhs;
    std::string detail;

    std::string params_str() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < params.size(); ++i) {
            if (i) os << ",";
            os << params[i].first << "=" << params[i].second;
        }
        return os.str();
    }
};

// A failed check whose statement is known to hold unconditionally: this always
// means a bug in the implementation, never a mathematical finding, and must
// surface loudly with its counterexample attached.
class FalsificationError : public std::runtime_error {
public:
    FalsificationError(const std::string& what, std::string payload)
        : std::runtime_error(what + " | counterexample: " + payload), payload_(std::move(payload)) {}

    const std::string& payload() const { return payload_; }

private:
    std::string payload_;
};

}  // namespace melham
