#pragma once

// JSON and text renderings of classifier, witness and certificate results.
// Braids, words and kernel vectors are embedded in their text syntax so every
// document round-trips through the parsers.

#include <string>

#include "json.hpp"
#include "kleinbu/certificate.hpp"
#include "kleinbu/classifier.hpp"
#include "kleinbu/witness.hpp"

namespace kleinbu {

using Json = nlohmann::ordered_json;

Json to_json(HomClass const& c);
HomClass hom_class_from_json(Json const& j);

Json to_json(Verdict const& v);
Verdict verdict_from_json(Json const& j);

Json to_json(WitnessReport const& w);
WitnessReport witness_from_json(Json const& j);

Json to_json(SearchResult const& r);
Json to_json(CertificateReport const& r);

std::string format(Verdict const& v);
std::string format(WitnessReport const& w);
std::string format(CertificateReport const& r);

}  // namespace kleinbu
