#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace satforge
{
    struct BoundParams
    {
        std::optional<long> n, r, s, t;
    };

    /// A closed-form count from the saturation literature, together with the
    /// hypotheses under which it is stated.
    struct BoundSpec
    {
        std::string name;
        std::string formula;
        std::string hypotheses;
        /// Parameters the formula reads, from "nrst".
        std::string uses;
    };

    auto bound_specs() -> const std::vector<BoundSpec> &;

    /// Exact value of the named closed form. Throws PreconditionError for an unknown
    /// name, a missing parameter, or parameters outside the stated hypotheses. Additive
    /// constants that are only known per construction are left out.
    auto evaluate_bound(const std::string & name, const BoundParams & params) -> std::int64_t;

    auto binomial(std::int64_t m, std::int64_t k) -> std::int64_t;
}
