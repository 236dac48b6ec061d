#pragma once

/// JSON encodings of the main result types (nlohmann::json ADL hooks).
///
/// Roots of unity are written as "NUM/DEN" strings. Object keys come out
/// sorted, so equal values always serialize to identical text.

#include "ggt/cyclotomic.hpp"
#include "ggt/monomial.hpp"
#include "ggt/prime_search.hpp"
#include "ggt/root_system.hpp"
#include "ggt/roots.hpp"
#include "ggt/weil_params.hpp"
#include "ggt/wild_two.hpp"

#include <json.hpp>

namespace ggt {

void to_json(nlohmann::json& j, const RootOfUnity& r);
void from_json(const nlohmann::json& j, RootOfUnity& r);
void to_json(nlohmann::json& j, const FrobeniusOrbit& o);
void from_json(const nlohmann::json& j, FrobeniusOrbit& o);
void to_json(nlohmann::json& j, const MonomialMatrix& m);
void from_json(const nlohmann::json& j, MonomialMatrix& m);
/// {modulus, coeffs} with coeffs reduced modulo Phi_N.
void to_json(nlohmann::json& j, const CyclotomicInt& z);

namespace prime_search {
void to_json(nlohmann::json& j, const ConditionCheck& c);
void from_json(const nlohmann::json& j, ConditionCheck& c);
void to_json(nlohmann::json& j, const SearchCertificate& c);
void from_json(const nlohmann::json& j, SearchCertificate& c);
} // namespace prime_search

namespace weil {
void to_json(nlohmann::json& j, const TameParameter& p);
void from_json(const nlohmann::json& j, TameParameter& p);
void to_json(nlohmann::json& j, const TameChecks& c);
void to_json(nlohmann::json& j, const RealParameter& p);
void from_json(const nlohmann::json& j, RealParameter& p);
void to_json(nlohmann::json& j, const CharPolyShape& s);
} // namespace weil

namespace wild {
void to_json(nlohmann::json& j, const PropTwoReport& r);
void from_json(const nlohmann::json& j, PropTwoReport& r);
void to_json(nlohmann::json& j, const JordanReport& r);
} // namespace wild

namespace roots {
void to_json(nlohmann::json& j, Mode m);
void from_json(const nlohmann::json& j, Mode& m);
void to_json(nlohmann::json& j, const OrderSet& o);
void from_json(const nlohmann::json& j, OrderSet& o);
void to_json(nlohmann::json& j, const TableRow& r);
void from_json(const nlohmann::json& j, TableRow& r);
void to_json(nlohmann::json& j, const MinusculeData& m);
void from_json(const nlohmann::json& j, MinusculeData& m);
void to_json(nlohmann::json& j, const AuditEntry& e);
void to_json(nlohmann::json& j, const NegativeControl& c);
} // namespace roots

} // namespace ggt
