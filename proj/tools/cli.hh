#pragma once

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace satforge
{
    struct SearchReport;

    namespace cli
    {
        inline constexpr int exit_success = 0;
        inline constexpr int exit_claim_failed = 1;
        inline constexpr int exit_usage = 2;

        /// Runs one command line (without the program name). Results go to out,
        /// diagnostics to err; the return value is the process exit code.
        auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;

        /// 64-bit FNV-1a, as hex, used for the digests in run manifests.
        auto fnv1a_hex(std::string_view bytes) -> std::string;

        auto report_to_json(const SearchReport & report) -> nlohmann::json;
        auto report_from_json(const nlohmann::json & j) -> SearchReport;
    }
}
