#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace cliffga {

using Json = nlohmann::ordered_json;

// One verified relation or theorem item.
struct CheckItem {
    std::string name;
    bool pass = false;
    Json detail;  // witnesses, dimensions, counterexamples
};

struct Report {
    std::string verifier;
    Json context;  // signature and parameters
    std::vector<CheckItem> checks;

    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    Json to_json() const {
        Json j;
        j["verifier"] = verifier;
        j["context"] = context;
        j["pass"] = pass();
        j["checks"] = Json::array();
        for (const auto& c : checks) {
            Json item;
            item["name"] = c.name;
            item["pass"] = c.pass;
            if (!c.detail.is_null()) item["detail"] = c.detail;
            j["checks"].push_back(std::move(item));
        }
        return j;
    }
};

}  // namespace cliffga
