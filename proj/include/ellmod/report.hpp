#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ellmod/bounds.hpp"
#include "ellmod/certify.hpp"
#include "ellmod/chebotarev.hpp"
#include "ellmod/genus_x0.hpp"
#include "ellmod/scan.hpp"

namespace ellmod {

// All reports use insertion-ordered JSON and embed the schema version and
// the generating configuration, so a fixed config reproduces a
// byte-identical file on any thread count.
using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolName = "ellmod";
inline constexpr const char* kToolVersion = "0.1.0";

Json json_header(const std::string& kind);

Json to_json(const Place& place);
Json to_json(const TraceSample& sample);
Json to_json(const SingleCertificate& cert);
Json to_json(const PairCertificate& cert);
Json to_json(const SurjectivityCertificate& cert);
Json to_json(const ScanReport& report);
Json to_json(const TraceCountTable& table, const FamilySpec& family);

// Round-trip parse used by the schema tests (and by anything downstream
// that wants to consume a report without recomputing it).
SurjectivityCertificate certificate_from_json(const Json& j);

// Tabular outputs.
std::string scan_summary_csv(const ScanReport& report);
std::string chebotarev_csv(const TraceCountTable& table);
std::string constants_csv(long g_min, long g_max);
Json constants_json(long g_min, long g_max);
std::string genus_table_csv(std::uint64_t n_min, std::uint64_t n_max);
Json genus_table_json(std::uint64_t n_min, std::uint64_t n_max);

std::size_t certificate_witness_count(const SurjectivityCertificate& cert);

} // namespace ellmod
