#include <satforge/bounds.hh>
#include <satforge/errors.hh>

#include <algorithm>
#include <functional>
#include <map>

using std::int64_t;
using std::string;
using std::vector;

namespace satforge
{
    namespace
    {
        struct Values
        {
            int64_t n = 0, r = 0, s = 0, t = 0;
        };

        struct Entry
        {
            BoundSpec spec;
            std::function<bool (const Values &)> hypotheses;
            std::function<int64_t (const Values &)> value;
        };

        auto entries() -> const vector<Entry> &
        {
            static const vector<Entry> table = {
                { { "ehm-edges", "(s-2)(n-s+2) + C(s-2,2)", "s >= 3, n >= s", "ns" },
                    [] (const Values & v) { return v.s >= 3 && v.n >= v.s; },
                    [] (const Values & v) { return (v.s - 2) * (v.n - v.s + 2) + binomial(v.s - 2, 2); } },
                { { "ehm-cliques", "C(s-2,r) + (n-s+2) C(s-2,r-1)", "s > r >= 2, n >= s", "nrs" },
                    [] (const Values & v) { return v.s > v.r && v.r >= 2 && v.n >= v.s; },
                    [] (const Values & v) { return binomial(v.s - 2, v.r) + (v.n - v.s + 2) * binomial(v.s - 2, v.r - 1); } },
                { { "k4sat-triangles", "n - 2", "n >= 4", "n" },
                    [] (const Values & v) { return v.n >= 4; },
                    [] (const Values & v) { return v.n - 2; } },
                { { "k4sat-degree3-triangles", "2n - 7", "n >= 5", "n" },
                    [] (const Values & v) { return v.n >= 5; },
                    [] (const Values & v) { return 2 * v.n - 7; } },
                { { "k3sat-degree2-edges", "2n - 5", "n >= 5", "n" },
                    [] (const Values & v) { return v.n >= 5; },
                    [] (const Values & v) { return 2 * v.n - 5; } },
                { { "k3sat-degree3-edges", "3n - 15", "n >= 10", "n" },
                    [] (const Values & v) { return v.n >= 10; },
                    [] (const Values & v) { return 3 * v.n - 15; } },
                { { "degree4-triangles", "2n - 4", "n >= 14", "n" },
                    [] (const Values & v) { return v.n >= 14; },
                    [] (const Values & v) { return 2 * v.n - 4; } },
                { { "h-family-triangles", "2n + 2t - 12", "t >= 4, n >= 2t", "nt" },
                    [] (const Values & v) { return v.t >= 4 && v.n >= 2 * v.t; },
                    [] (const Values & v) { return 2 * v.n + 2 * v.t - 12; } },
                { { "f-family-linear", "C(s-2,r-1) 2^(r-1) n", "s > r >= 3, t >= 2(s-2)+1, n >= 2(s-2)+2t", "nrst" },
                    [] (const Values & v) { return v.s > v.r && v.r >= 3 && v.t >= 2 * (v.s - 2) + 1 && v.n >= 2 * (v.s - 2) + 2 * v.t; },
                    [] (const Values & v) { return binomial(v.s - 2, v.r - 1) * (int64_t{ 1 } << (v.r - 1)) * v.n; } },
                { { "r-family-linear", "9n", "t >= 8, n >= t + 30", "nt" },
                    [] (const Values & v) { return v.t >= 8 && v.n >= v.t + 30; },
                    [] (const Values & v) { return 9 * v.n; } },
                { { "triangle-lower-bound", "C(s-2,2)(n-2)", "s > 3, t >= 6 C(s-2,2), n >= 2s-2", "nst" },
                    [] (const Values & v) { return v.s > 3 && v.t >= 6 * binomial(v.s - 2, 2) && v.n >= 2 * v.s - 2; },
                    [] (const Values & v) { return binomial(v.s - 2, 2) * (v.n - 2); } },
                { { "two-edge-neighborhood-triangles", "2n - 4", "n >= 14", "n" },
                    [] (const Values & v) { return v.n >= 14; },
                    [] (const Values & v) { return 2 * v.n - 4; } },
                { { "three-edge-neighborhood-triangles", "3n - 18", "n >= 12", "n" },
                    [] (const Values & v) { return v.n >= 12; },
                    [] (const Values & v) { return 3 * v.n - 18; } },
                { { "four-edge-neighborhood-triangles", "2n - 3", "n >= 15", "n" },
                    [] (const Values & v) { return v.n >= 15; },
                    [] (const Values & v) { return 2 * v.n - 3; } },
            };
            return table;
        }
    }

    auto binomial(int64_t m, int64_t k) -> int64_t
    {
        if (k < 0 || m < 0 || k > m)
            return 0;
        k = std::min(k, m - k);
        int64_t result = 1;
        for (int64_t i = 1; i <= k; ++i)
            result = result * (m - k + i) / i;
        return result;
    }

    auto bound_specs() -> const vector<BoundSpec> &
    {
        static const vector<BoundSpec> specs = [] {
            vector<BoundSpec> result;
            for (auto & e : entries())
                result.push_back(e.spec);
            return result;
        }();
        return specs;
    }

    auto evaluate_bound(const string & name, const BoundParams & params) -> int64_t
    {
        auto & table = entries();
        auto found = std::find_if(table.begin(), table.end(), [&] (const Entry & e) { return e.spec.name == name; });
        if (found == table.end())
            throw PreconditionError{ "unknown bound '" + name + "'" };

        Values values;
        const std::map<char, std::pair<const std::optional<long> *, int64_t *>> slots = {
            { 'n', { &params.n, &values.n } }, { 'r', { &params.r, &values.r } },
            { 's', { &params.s, &values.s } }, { 't', { &params.t, &values.t } } };
        for (auto c : found->spec.uses) {
            auto [given, target] = slots.at(c);
            if (! *given)
                throw PreconditionError{ "bound '" + name + "' needs parameter " + string(1, c) };
            *target = **given;
        }

        if (! found->hypotheses(values))
            throw PreconditionError{ "bound '" + name + "' is stated only for " + found->spec.hypotheses };
        return found->value(values);
    }
}
