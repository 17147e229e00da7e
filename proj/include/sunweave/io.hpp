#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"
#include "sunweave/design.hpp"
#include "sunweave/embedder.hpp"
#include "sunweave/triple_system.hpp"

namespace sunweave {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// JSON design schema:
//   {"points": m, "host": "complete" | [[a,b],...],
//    "blocks": [{"kind": "sun", "v": [a,b,c,d,e,f]}, ...]}
// plus "partial": true for partial designs.
nlohmann::json design_to_json(const Design& d);
Design design_from_json(const nlohmann::json& j);

// Text form: optional "points m" / "partial" headers, then one block per
// line as (a,b,c), (a,b,c; d), (a,b,c; d,e) or (a,b,c; d,e,f).
// '#' starts a comment; stray markup (braces, bold markers) is ignored.
std::string design_to_text(const Design& d);
Design design_from_text(std::string_view text);

nlohmann::json triples_to_json(const TripleSystem& s);
TripleSystem triples_from_json(const nlohmann::json& j);
std::string triples_to_text(const TripleSystem& s);
// Accepts triangle-only design text.
TripleSystem triples_from_text(std::string_view text);

nlohmann::json certificate_to_json(const EmbeddingCertificate& c);
EmbeddingCertificate certificate_from_json(const nlohmann::json& j);

std::string read_file(const std::filesystem::path& p);
void write_file_atomic(const std::filesystem::path& p, std::string_view data);

}  // namespace sunweave
