#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cpsmeta/model.hpp"

namespace cpsmeta {

// Executes a single read-only operation against a store. The query text uses
// the same grammar as the metamodel and supports nested selection sets down
// to relation edge attributes: unselected fields are absent from the result,
// selected-but-unset fields come back as null. The result is wrapped in the
// usual {"data": ...} envelope. Syntax and selection errors throw QueryError
// with a position; unsupported language (variables, fragments, multiple
// operations) is reported as such rather than misparsed.
Json execute_query(const ModelStore& store, const std::string& queryText);

// ------------------------------------------------------- predicate selection

enum class Comparator { Eq, Lt, Gt, Contains };

std::string to_string(Comparator c);

// attribute/comparator/value scan over one entity collection. Eq compares the
// JSON value exactly (numbers numerically), Lt/Gt are numeric-only, Contains
// matches substrings of strings and membership in list attributes. "name" and
// "number" resolve to the identity fields. Results are in canonical
// (number, name) order.
std::vector<const EntityRecord*> select_by_predicate(const ModelStore& store,
                                                     const std::string& typeName,
                                                     const std::string& attribute,
                                                     Comparator cmp,
                                                     const Json& value);

}  // namespace cpsmeta
