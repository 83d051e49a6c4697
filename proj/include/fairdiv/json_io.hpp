#ifndef FAIRDIV_JSON_IO_HPP
#define FAIRDIV_JSON_IO_HPP

#include <nlohmann/json.hpp>
#include <optional>

#include "fairdiv/eefx.hpp"
#include "fairdiv/fairness.hpp"

namespace fairdiv {

using Json = nlohmann::ordered_json;

// Values serialize as bare integers when integral, "p/q" strings otherwise.
Json value_to_json(const Value& v);
// Accepts JSON integers and "p", "p/q" strings. Throws ValidationError.
Value value_from_json(const Json& j);

// Instance documents: {"agents": n, "items": m, "kind": "goods"|"chores",
// "valuations": {"additive": n x m matrix} or {"tables": n arrays of 2^m
// values indexed by subset bitmask, bit j-1 = item j}}.
Instance instance_from_json(const Json& j);
Json instance_to_json(const Instance& inst);

// Allocations: {"bundles": [[1,3],[2],[]]} with 1-indexed items; a bare array
// of bundles and solve-report documents carrying an "allocation" key are also
// accepted.
Allocation allocation_from_json(const Json& j, int agents, int items);
Json allocation_to_json(const Allocation& x);

Json certificate_to_json(const Certificate& c);
Json fairness_report_to_json(const FairnessReport& rep);
Json solve_result_to_json(const SolveResult& res, const FairnessReport* report);

// Stage-1 allocation embedded in a solve-report document, if present.
std::optional<Allocation> stage1_from_json(const Json& j, int agents, int items);

Json read_json_file(const std::string& path); // "-" reads standard input

} // namespace fairdiv

#endif
