// JSON encodings of scalars, groups, data, tables, reports and witnesses.
// Objects serialize with sorted keys, so equal values give equal text.
#pragma once

#include <string>

#include <json.hpp>

#include "ty/category_data.hpp"
#include "ty/gauge_equiv.hpp"
#include "ty/pentagon.hpp"
#include "ty/realization.hpp"

namespace ty {

using Json = nlohmann::json;

struct JsonError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// {"M": M, "c": [[num, den], ...]} with phi(M) entries.  Parsing also takes
// integers and text such as "z(8)^3" or "-1/4*sqrt(2)".
Json to_json(const Cyclo& s);
Cyclo cyclo_from_json(const Json& j);

// {"cyclic": [n1, ...], "dihedral": bool}; raw tables as {"table": [[...]], "deg": [...]}.
Json to_json(const Group& G);
Group group_from_json(const Json& j);

Json to_json(const Fn1& f);
Json to_json(const Fn2& f);
Json to_json(const Fn3& f);
Fn1 fn1_from_json(const Json& j, int n);
Fn2 fn2_from_json(const Json& j, int n);
Fn3 fn3_from_json(const Json& j, int n);

// {"case", "group", "g", "chi", "tau"}; tau may be absent for Galois data.
Json to_json(const TYData& d);
TYData data_from_json(const Json& j);

// {"case", "group", "g", "tables": {"alpha", "alpha1", ..., "gamma", "gamma_i"}}.
Json to_json(const CoeffTable& t);
CoeffTable table_from_json(const Json& j);

// {"pass", "case", "violations": [{"eq", "args", "lhs", "rhs"}]}.
Json to_json(const PentagonReport& r);
Json to_json(const CheckReport& r);

Json to_json(const GaugeTuple& g);
GaugeTuple gauge_from_json(const Json& j, Case c, int n);
// {"f": permutation, "h": "id"|"conj", "lambda": scalar, "tensorator": ...}.
Json to_json(const EquivWitness& w);

Json to_json(const Bicharacter& b);
Json to_json(const Classification& c);

// Every tetrahedral matrix, with the summand lists of source and target.
Json tetrahedral_dump(const RealizedCategory& rc);

Json read_json_file(const std::string& path);  // "-" reads stdin
void write_json_file(const std::string& path, const Json& j);  // "-" writes stdout

}  // namespace ty
