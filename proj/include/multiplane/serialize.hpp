#pragma once

// JSON forms of the library types. Rationals are always "p/q" strings in
// lowest terms with q > 0, integers included ("5/1").

#include <json.hpp>

#include <stdexcept>
#include <string>

#include "multiplane/branch.hpp"
#include "multiplane/construct.hpp"
#include "multiplane/cremona.hpp"
#include "multiplane/invariants.hpp"

namespace multiplane::serialize {

using json = nlohmann::ordered_json;

inline constexpr const char* kCoverSchema = "multiplane/cover/v1";
inline constexpr const char* kReportSchema = "multiplane/report/v1";
inline constexpr const char* kInvariantsSchema = "multiplane/invariants/v1";
inline constexpr const char* kParamsSchema = "multiplane/params/v1";
inline constexpr const char* kNetSchema = "multiplane/net/v1";
inline constexpr const char* kCremonaSchema = "multiplane/cremona/v1";

/// Malformed input documents.
class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string rational_to_string(const Rational& q);
Rational rational_from_string(const std::string& s);

json class_to_json(const picard::DivisorClass& d);

json bipoly_to_json(const coxring::BiPoly& p);
/// Throws coxring::HomogeneityError on terms outside `klass`, FormatError on
/// malformed records.
coxring::BiPoly bipoly_from_json(const json& j, const picard::HirzebruchSurface& s, picard::DivisorClass klass);

json cover_to_json(const branch::TripleCoverSections& t);
branch::TripleCoverSections cover_from_json(const json& j);

json report_to_json(const branch::BranchReport& r);
json invariants_to_json(const invariants::CoverInvariants& inv, Int x, Int y);
json params_to_json(Int e, const std::vector<construct::ParamSolution>& sols);
json net_to_json(const construct::NetDescription& n, std::uint64_t seed);
json cremona_to_json(const cremona::CremonaResult& r);

}  // namespace multiplane::serialize
