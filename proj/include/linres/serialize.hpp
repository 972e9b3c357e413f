#pragma once
// JSON forms of complexes, inverse systems and verification reports, plus a
// plain-text export of a complex for an external computer-algebra system.
// Exact scalars are written as "num/den" strings and polynomials in the
// canonical text grammar of Poly::to_string.

#include <string>

#include "json.hpp"
#include "linres/inversesys.hpp"
#include "linres/rescomplex.hpp"
#include "linres/verify.hpp"

namespace linres {

using Json = nlohmann::json;

Json complex_to_json(const FreeComplex& c);
/// Throws std::invalid_argument on schema or shape violations.
FreeComplex complex_from_json(const Json& j);

Json invsys_to_json(const InverseSystem& phi);
InverseSystem invsys_from_json(const Json& j);

Json report_to_json(const Report& r);
Json summary_to_json(const VerifySummary& s);

/// Two-space indented dump with a trailing newline.
std::string dump_json(const Json& j);
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// Macaulay2 script defining the ring and the differentials d1..dk and
/// checking d_i * d_{i+1} == 0.
std::string export_cas(const FreeComplex& c);

}  // namespace linres
