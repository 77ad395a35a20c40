#pragma once

#include <json.hpp>

#include "deligne/gfan.hpp"
#include "deligne/skeleton.hpp"

namespace deligne {

nlohmann::json arrangement_to_json(const Arrangement& arr);
Arrangement arrangement_from_json(const nlohmann::json& j);

// Rays in lex-descending order when the arrangement is simplicial and
// essential; the key is omitted otherwise.
nlohmann::json chamber_to_json(const Arrangement& arr, const Chamber& c);
// Rays in label order.
nlohmann::json chamber_to_json(const SkeletonGraph& sk, const Chamber& c);

nlohmann::json skeleton_to_json(const SkeletonGraph& sk);
nlohmann::json gmatrix_to_json(const GMatrix& g);

// Accepts {"dim": n, "matrices": [rows, ...]}.
std::pair<int, std::vector<IMat>> matrices_from_json(const nlohmann::json& j);

}  // namespace deligne
