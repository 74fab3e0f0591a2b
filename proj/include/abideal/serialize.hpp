#pragma once

#include <string>

#include "json.hpp"

#include "abideal/abposets.hpp"

namespace abideal {

using json = nlohmann::json;

json to_json(const RootSystem& sys, const Root& r);
json to_json(const RootSystem& sys, const Coroot& t);
json to_json(const RootSystem& sys, const AffineRoot& a);
json to_json(const RootSystem& sys, const WeylElement& v);

// {"phi": [[...]], "dim": n, "abelian": b, "nilpotence": k,
//  "w": {"tau": [...], "v_images": [[...]]}, "F": [...]}
json ideal_record(const RootSystem& sys, const Ideal& i);

// Inverse of ideal_record's phi field; validates against the root table.
Ideal ideal_from_json(const RootSystem& sys, const json& j);
Root root_from_json(const RootSystem& sys, const json& j);
Coroot coroot_from_json(const RootSystem& sys, const json& j);

json xpoint_record(const RootSystem& sys, const XPoint& xp);

// RFC-style CSV quoting.
std::string csv_escape(const std::string& field);

}  // namespace abideal
