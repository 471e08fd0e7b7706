#pragma once

#include "atomlab/algebra.hpp"
#include "atomlab/chains.hpp"

#include <json.hpp>

namespace atomlab {

using json = nlohmann::ordered_json;

json to_json(const Presentation& pres);
Presentation presentation_from_json(const json& j);

json to_json(const MonoidValue& v);
json to_json(const Factorization& f);
json to_json(const ChainCertificate& cert);
ChainCertificate chain_from_json(const json& j);
json to_json(const AccpVerdict& v);
json to_json(const WeakAccpWitness& w);
json to_json(const TaxonomyReport& r);
json to_json(const GramsDecomposition& d);
json to_json(const PDecomposition& d);
json to_json(const ShiftedDecomposition& d);

/// Markdown digest of a JSON report: one section per top-level key.
std::string markdown_digest(const json& report);

} // namespace atomlab
