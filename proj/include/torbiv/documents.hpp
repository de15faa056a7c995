#pragma once

// JSON documents read and written by the command-line tool.
//
// FanDocument:       {"dim": n, "max_cones": [[i,...],...], "name": s?,
//                     "rays": [[x,...],...]}
// BivectorDocument:  {"alpha": [a,...], "base_chart": k?,
//                     "entries": [{"i": i, "j": j, "value": "p/q"},...]}
//
// Ray, cone and coordinate indices in documents are 0-based. Serialization is
// canonical: sorted keys, rationals in lowest terms, entries sorted by (i, j).

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "torbiv/bivector.hpp"
#include "torbiv/degeneracy.hpp"
#include "torbiv/toric_fans.hpp"

namespace torbiv {

using Json = nlohmann::json;

/// Throws ParseError naming the offending JSON path.
FanDescription parse_fan_document(const std::string &text);
std::string serialize_fan_document(const FanDescription &desc);

struct BivectorEntry {
  std::size_t i = 0, j = 0;
  Rational value;
};

struct BivectorDocument {
  Covector alpha;
  std::vector<BivectorEntry> entries;
  std::optional<std::size_t> base_chart;
};

/// Throws ParseError for malformed JSON, bad index pairs, duplicates or
/// malformed rationals.
BivectorDocument parse_bivector_document(const std::string &text);
std::string serialize_bivector_document(const BivectorDocument &doc);

EquivariantBivector to_bivector(const BivectorDocument &doc);
BivectorDocument to_document(const EquivariantBivector &bv);

/// Strict "p/q" or "p" parser; throws ParseError.
Rational parse_rational(const std::string &text);

// Machine-readable reports. Coordinates are 1-based, ray indices 0-based.
Json validation_json(const FanDescription &desc, const ValidationReport &report,
                     std::optional<bool> complete);
Json orbit_json(const OrbitRef &t);
Json stratification_json(const Stratification &s);
Json certificate_json(const TheoremCertificate &cert);
Json poisson_json(const PoissonResult &p);
Json presentation_json(const ChartPresentation &cp, const IntMatrix &r);

} // namespace torbiv
