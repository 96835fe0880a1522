#pragma once

#include <string>

#include <json.hpp>

#include "ghzcert/certificate.hpp"
#include "ghzcert/hypergraph.hpp"
#include "ghzcert/linalg.hpp"

namespace ghzcert {

using Json = nlohmann::json;

// Integers are written as JSON numbers when they fit in 64 bits and as
// decimal strings otherwise; both forms are accepted on input.
Json integer_to_json(const Integer& x);
Integer integer_from_json(const Json& j);

// Rationals are strings "p/q", or "p" when q = 1.
Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

/// {"k": 3, "edges": [{"vertices": [1, 2], "level": 2}, ...]}
Json hypergraph_to_json(const Hypergraph& h);
/// Level defaults to 2. Throws ParseError on schema violations; the result
/// still has to pass validate().
Hypergraph hypergraph_from_json(const Json& j);

Json certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const Json& j);

Json report_to_json(const VerificationReport& report);

Json read_json_file(const std::string& path);
Hypergraph read_hypergraph_file(const std::string& path);
/// Writes `text` exactly, creating or truncating the file.
void write_text_file(const std::string& path, const std::string& text);

/// Canonical serialization used for certificate files: two-space indent,
/// sorted keys, trailing newline.
std::string dump_canonical(const Json& j);

}  // namespace ghzcert
