#pragma once

#include <string>

#include "json.hpp"

#include "snakeforge/census.hpp"
#include "snakeforge/contact_tree.hpp"
#include "snakeforge/realization.hpp"
#include "snakeforge/separating_tree.hpp"
#include "snakeforge/snake_extract.hpp"
#include "snakeforge/valuation_calculus.hpp"

namespace snakeforge {

using Json = nlohmann::json;

// {"sign": "+"|"-", "left": ..., "right": ...} or {"leaf": <int>}
Json to_json(const SignedTree& t);
SignedTree signed_tree_from_json(const Json& j);  // throws MalformedTree

// {"valuation": v, "children": [...]}, leaves {"leaf": i, "poly": "..."}.
// The top-level object is the root.
Json to_json(const ContactTree& t);
ContactTree contact_tree_from_json(const Json& j);  // throws MalformedTree

Json to_json(const RealizationResult& r);
RealizationResult realization_from_json(const Json& j);

Json to_json(const IsolatedRoot& r);
Json to_json(const MorseCertificate& c);
MorseCertificate certificate_from_json(const Json& j);

// One valuation report row: formula and oracle side by side.
struct AreaReportRow {
  AreaProfile profile;
  std::size_t oracle_valuation = 0;
};
Json to_json(const AreaReportRow& row);

Json to_json(const CensusRow& row);
CensusRow census_row_from_json(const Json& j);

// "((4 + 5) - (1 + (3 - 2)))"
std::string to_text(const SignedTree& t);

std::string to_dot(const SignedTree& t);
// Drawn left to right: root leftmost, the first leaf at the bottom.
std::string to_dot(const ContactTree& t);

}  // namespace snakeforge
