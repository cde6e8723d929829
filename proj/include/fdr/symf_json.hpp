#pragma once

#include <string>

#include <json.hpp>

#include "fdr/exterior_coinvariants.hpp"
#include "fdr/macdonald.hpp"
#include "fdr/symfunc.hpp"

namespace fdr {

/// Parsers for the canonical coefficient strings emitted by PolyQT::to_string
/// and RatFuncQT::to_string (inverse of those printers; also accepts plain
/// integers and extra whitespace).  Throw std::invalid_argument on junk.
PolyQT parse_polyqt(const std::string& s);
RatFuncQT parse_ratfunc(const std::string& s);
mpq_class parse_mpq(const std::string& s);

/// SymF JSON schema: {"basis":"s","degree":4,"terms":[{"lambda":[3,1],
/// "coeff":"1"},...]}; coefficients as canonical strings, terms in the fixed
/// partition order.
nlohmann::json symf_to_json(const SymF<mpq_class>& f);
nlohmann::json symf_to_json(const SymF<RatFuncQT>& f);

/// Inverse of symf_to_json.  The degree field, when present, must match the
/// computed degree; inhomogeneous term lists are rejected.  Basis "H" is
/// rejected here — route it through macdonald_expansion_from_json.
SymF<mpq_class> symf_q_from_json(const nlohmann::json& j);
SymF<RatFuncQT> symf_qt_from_json(const nlohmann::json& j);

/// Basis-"H" SymF JSON read as an expansion into modified Macdonald
/// polynomials.
MacdonaldExpansion macdonald_expansion_from_json(const nlohmann::json& j);

/// BigradedTable JSON: {"n":N,"entries":[{"i":..,"j":..,"frobenius":<SymF>}]}.
nlohmann::json bigraded_table_to_json(const BigradedTable& t);
BigradedTable bigraded_table_from_json(const nlohmann::json& j);
std::string bigraded_table_to_text(const BigradedTable& t);

/// Character table JSON: rows = partitions (labelling irreducibles), columns =
/// cycle types, both in the fixed partition order; integer entries.
nlohmann::json char_table_to_json(const CharTable& t);
std::string char_table_to_text(const CharTable& t);

}  // namespace fdr
