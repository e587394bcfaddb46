#ifndef BURNSIDE_CLI_HPP
#define BURNSIDE_CLI_HPP

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "burnside/classifier.hpp"
#include "burnside/group_engine.hpp"
#include "burnside/proof_trace.hpp"
#include "burnside/proposition_oracle.hpp"

namespace burnside::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { kOk = 0, kInvalidInput = 1, kInternalError = 2 };

// Group file: first non-comment line "p=<prime>", then one comma-separated
// image list per generator. '#' starts a comment; blank lines are skipped.
// Throws InputError carrying the offending line number.
GroupSpec parse_group_file(std::istream& in, std::uint32_t prime_cap = kDefaultPrimeCap);

// Canonical text of a group spec in group-file syntax.
std::string render_group_file(const GroupSpec& G);

// "1,2,4" -> DiffSet. Throws InvalidInput.
DiffSet parse_diff_set(const PrimeField& field, const std::string& text);

// 64-bit FNV-1a, rendered "fnv1a64:<16 hex digits>".
std::string digest(const std::string& canonical_input);

Json classification_to_json(const GroupSpec& G, const Classification& c);
// Reads back the output of classification_to_json (the "result" payload).
std::pair<GroupSpec, Classification> classification_from_json(const Json& j);

Json aut_to_json(const AutResult& aut);
Json trace_to_json(const DiffSet& U, const Perm& pi, const TraceReport& report);
Json scan_to_json(const ScanSummary& summary);
Json interp_to_json(const Perm& pi);

// Entry point behind the executable; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace burnside::cli

#endif  // BURNSIDE_CLI_HPP
