#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace satforge
{
    /// The versioned claim registry compiled into the library.
    auto claims_registry() -> const nlohmann::json &;

    auto claim_ids() -> std::vector<std::string>;

    struct ClaimResult
    {
        std::string id;
        bool passed = false;
        nlohmann::json expected;
        nlohmann::json actual;
        std::string detail;
        double seconds = 0;
    };

    /// Runs the check registered under id and compares it with the registered
    /// expectation. Throws PreconditionError for an unknown id.
    auto reproduce(const std::string & id) -> ClaimResult;

    auto to_json(const ClaimResult & result) -> nlohmann::json;
}
