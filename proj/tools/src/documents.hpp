#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"

namespace grassqh::cli {

using Json = nlohmann::ordered_json;

Json betti_doc(const std::string& type, int node);
Json screen_type_doc(const std::string& type, int node);
Json screen_section_doc(int k, int n);
Json screen_sg_doc(int n);
Json exceptional_doc();
Json core_search_doc(int k, int n);
Json snow_doc(int k, int n, int p, int twist);
Json hodge_doc(int k, int n, bool section, std::uint64_t seed);
Json charpoly_doc(int k, int n, bool section, int power, bool with_e2);
Json presentation_doc(int k, int n);
Json lefschetz_doc(int n);
Json semisimple_doc(int k, int n, bool section);

std::string render(const Json& doc);

}  // namespace grassqh::cli
