#pragma once

#include <json.hpp>

#include "dualbent/partitions.hpp"

namespace dualbent {

using json = nlohmann::json;

// Certificates as JSON. Integers are decimal strings, keys are sorted, so equal inputs
// give byte-identical dumps.
constexpr int kSchemaVersion = 1;

json num(std::int64_t v);
json num(const BigInt& v);
json index_list(std::span<const Index> xs);

json to_json(const CycInt& z);
json to_json(const WalshSpectrum& w);
json to_json(const VdbCertificate& c);
json to_json(const std::optional<PdsCertificate>& c);
json to_json(const SchemeCertificate& c);
json to_json(const AmorphyEvidence& e);
json to_json(const FiberReport& r);
json to_json(const CodeSpec& c);
json to_json(const GHReport& r);
json to_json(const UnitConditionReport& r);
json to_json(const ProductReport& r);
json to_json(const CardinalityGate& g);
json to_json(const BentPartitionCertificate& c);
json to_json(const DirectReport& r);
json to_json(const ConditionCReport& r);
json to_json(const HarnessReport& r);

// Current limit of every size guard and the override in effect.
json guard_levels();

// Classes of a scheme certificate; the caller rebuilds and compares the tensor.
std::vector<std::vector<Index>> scheme_classes_from_json(const json& j);
std::vector<std::int64_t> scheme_tensor_from_json(const json& j);

}  // namespace dualbent
