#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "siegel/expansion.hpp"
#include "siegel/jacobi.hpp"
#include "siegel/lattice.hpp"
#include "siegel/order_result.hpp"
#include "siegel/sturm.hpp"

namespace siegel {

using Json = nlohmann::ordered_json;
using AnyExpansion = std::variant<RationalSiegel, CyclotomicSiegel>;

Json expansion_to_json(const RationalSiegel& f);
Json expansion_to_json(const CyclotomicSiegel& f);
Json jacobi_to_json(const JacobiExpansion& f);
Json certificate_to_json(const Certificate& c);
Json order_to_json(const OrderResult& r);

AnyExpansion expansion_from_json(const Json& j);
JacobiExpansion jacobi_from_json(const Json& j);
EvenLattice lattice_from_json(const Json& j);

// canonical byte form used for files and digests
std::string canonical_text(const Json& j);
std::string sha256_hex(const std::string& data);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& data);
Json parse_json_text(const std::string& text);

} // namespace siegel
