#pragma once

#include "quillen/collection.hpp"
#include "quillen/complex.hpp"
#include "quillen/constructions.hpp"
#include "quillen/cycles.hpp"
#include "quillen/search.hpp"

#include "json.hpp"

namespace quillen {

using Json = nlohmann::ordered_json;

inline constexpr const char *schema_version = "quillen-lab/1";

/// {"perm":[1-based images]}, {"mat":{"q":..,"rows":[[..]]}} or
/// {"coset":{"q":..,"rows":..,"center_order":..}}.
Json element_to_json(const GroupElement &g);
/// Also accepts cycle notation strings for permutations and bare matrices
/// for quotient groups when a context group is given. Throws ParseError.
GroupElement element_from_json(const Json &j, const GroupSpec *context = nullptr);

Json group_to_json(const GroupSpec &G);
/// A built-in name ("Alt(8)") or a spec object; an object whose "name" is
/// built-in and which has no "generators" is the built-in group.
GroupSpec group_from_json(const Json &j);

Json collection_to_json(const Collection &C);
Collection collection_from_json(const Json &j);

Json recipe_to_json(const ConstructionRecipe &r);
Json construction_to_json(const Construction &c);

Json faithful_report_to_json(const FaithfulReport &r);
Json admissible_report_to_json(const AdmissibleReport &r, const Collection &C);
Json certificate_to_json(const NonzeroClassCertificate &c);
Json coefficient_report_to_json(const CoefficientReport &r);
Json homology_to_json(const std::string &group, unsigned p,
                      const QdpResult &q);
Json obstruction_to_json(const ObstructionCertificate &c);
Json search_result_to_json(const SearchResult &r);

} // namespace quillen
