#pragma once

#include <json.hpp>

#include "bezlin/polysyzygy.hpp"
#include "bezlin/qf.hpp"

namespace bezlin {

using Json = nlohmann::ordered_json;

// All numbers are serialized as decimal strings so that output is
// byte-deterministic and never subject to double rounding.

Json elem_to_json(const DomainElem& e);
Json matrix_to_json(const DomainMatrix& A);
Json vector_to_json(const DomainVector& v);

Json poly_to_json(const MultiPoly& f, const std::vector<std::string>& vars);
Json poly_vector_to_json(const PolyVector& v,
                         const std::vector<std::string>& vars);

Json syzygies_to_json(const SyzygyBasis& basis,
                      const std::vector<std::string>& vars);
Json verdict_to_json(const MembershipVerdict& v,
                     const std::vector<std::string>& vars);

Json term_to_json(const GcdTerm::Ptr& t);
GcdTerm::Ptr term_from_json(const Json& j);

Json formula_to_json(const QfFormula::Ptr& f);
QfFormula::Ptr formula_from_json(const Json& j);

Json family_to_json(const ParamFamily& fam);
ParamFamily family_from_json(const Json& j);

} // namespace bezlin
