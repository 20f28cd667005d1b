#pragma once

// JSON views of the engine results, schema "specdom-run/1".
//
// Conventions shared by every document:
//   - rationals and big integers serialize as exact decimal strings
//     ("3/2", "16"); floating point never appears,
//   - 64-bit digests and seeds serialize as strings ("0x00ab...", "7"),
//   - the certificate embeds its full level history, so a document plus
//     the domain file is everything a replay needs.

#include <json.hpp>

#include <string>
#include <vector>

#include "specdom/bounds.hpp"
#include "specdom/domain_file.hpp"
#include "specdom/finite_type.hpp"
#include "specdom/kohn.hpp"

namespace specdom {

using Json = nlohmann::json;

// ---- component serializers ------------------------------------------------

/// {"variables": [...], "h": ["z1^2", ...]} rendered with the file's names.
Json domain_json(const DomainFile& f);

Json run_config_json(const RunConfig& c);
RunConfig run_config_from_json(const Json& j);

/// Polynomials render through the given variable names; parsing them back
/// goes through the domain-file expression grammar, so the round trip is
/// exact.
Json certificate_json(const Certificate& c, const std::vector<std::string>& names);
Certificate certificate_from_json(const Json& j, const std::vector<std::string>& names);

Json type_config_json(const TypeConfig& c);
Json type_report_json(const TypeReport& r);

Json matsusaka_json(const MatsusakaInput& inp, const MatsusakaBound& b);
Json enclosure_json(const Enclosure& e, const Rational& max_width);
Json skoda_json(const SkodaExponents& s);
Json generation_json(const GradedMonomialRing& ring, const GenerationResult& g,
                     const std::vector<std::string>& names);

/// Top-level document wrapper: schema marker, command name, payload fields.
Json run_document(const std::string& command, Json payload);

/// Canonical rendering used for every document this tool prints.
std::string dump_json(const Json& j);

}  // namespace specdom
