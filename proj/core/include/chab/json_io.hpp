#pragma once

#include <nlohmann/json.hpp>

#include "chab/hausdorff.hpp"
#include "chab/sequence.hpp"
#include "chab/subgroup.hpp"

namespace chab {

/// Subgroup values:
///   cylinder families  {"family":"A"|"B"|"C"|"D"|"Cinf"|"Full", "m":?, "z":[re,im]?, "x":?, "t":?}
///   line families      {"family":"Trivial"|"Cyclic"|"Line", "r":?}
/// Reals round-trip exactly (shortest-round-trip serialization).
nlohmann::json subgroup_to_json(const SubgroupValue& g);
SubgroupValue subgroup_from_json(const nlohmann::json& j);

nlohmann::json point_to_json(SpaceKind space, const CompactPoint& p);

/// Sequence specs:
///   {"family":"R","r_limit":num|"inf"}
///   {"family":"A","m_limit":int|"inf"}
///   {"family":"B","m":int|"inf","re_limit":num|"inf",
///    "theta":{"p":int,"q":int}|"irrational","t_limit":num|"inf"|"-inf"?}
///   {"family":"C","x_limit":num|"inf"}
///   {"family":"D","m_limit":int|"inf","t_limit":num|"inf"|"-inf"}
nlohmann::json sequence_spec_to_json(const SequenceSpec& s);
SequenceSpec sequence_spec_from_json(const nlohmann::json& j);

nlohmann::json hausdorff_to_json(SpaceKind space, const HausdorffResult& r);
nlohmann::json bounded_hausdorff_to_json(SpaceKind space, const BoundedHausdorff& r);

nlohmann::json decay_table_to_json(const DecayTable& t);

}  // namespace chab
