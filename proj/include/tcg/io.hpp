#pragma once

// JSON documents for groups, endomorphisms and generating sets, plus the
// element literal syntax "x1,x2,...;label".

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "tcg/group.hpp"

namespace tcg::io {

using json = nlohmann::json;

/// Structural parse only; run validate_group on the result. Throws ParseError
/// naming the offending field as a JSON pointer.
VAGroupData parse_group(const json& doc);
json group_to_json(const VAGroupData& group);

Endomorphism parse_endo(const VAGroupData& group, const json& doc);
json endo_to_json(const Endomorphism& endo);

/// {"generators": [ "1,0;e", {"vector": [0,1], "coset": 0}, ... ]}
std::vector<GroupElement> parse_generators(const VAGroupData& group, const json& doc);
json generators_to_json(const VAGroupData& group, const std::vector<GroupElement>& elements);

GroupElement parse_element(const VAGroupData& group, std::string_view literal);
std::string format_element(const VAGroupData& group, const GroupElement& g);

json parse_text(std::string_view text);

}  // namespace tcg::io
