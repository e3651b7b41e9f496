#pragma once

// JSON encodings of every domain value, used by the C API and the CLI.
//
// Schemas:
//   tableau        {"I":[...],"J":[...]}
//   double tableau {"columns":[tableau,...]}
//   shape          [r1,r2,...]
//   ssyt           {"rows":[[...],...],"max_entry":M}
//   lattice        {"kind":"D"|"L"|"Pl"|"DN", "n":..,"m":..} / {"kind":"DN","k":..,"n":..}
//   poset          {"kind":"gamma_m","m":..} | {"kind":"gamma_nm","n":..,"m":..}
//                  | {"kind":"digamma","k":..,"n":..} | {"kind":"sp_half","n":..}
//   pattern        {"poset":POSET,"rows":[[...],...]}   (top row first)
//   polynomial     [{"exp":[[i,j,e],...],"coef":"<decimal>"},...]
//   exterior       [{"indices":[...],"coef":"<decimal>"},...]
//   omega-sum      {"p":..,"terms":[{"J":[...],"coef":"..."}],"certificate":EXTERIOR}
//   combination    {"terms":[{"coef":"...","tableau":DOUBLE}],"weight_base":"N"}
//   matrix         [["a/b",...],...]   (row-major rational strings)
//   h-rep          {"dim":N,"inequalities":[[c1,...,cN,0],...]}

#include "basics.hpp"
#include "nullcone_ring.hpp"
#include "patterns.hpp"
#include "polynomial.hpp"
#include "straighten.hpp"
#include "tableaux.hpp"

#include <json.hpp>

#include <vector>

namespace nullcone {

using Json = nlohmann::ordered_json;

Json to_json(const OneLineTableau& t);
Json to_json(const DoubleTableau& t);
Json to_json(const Shape& s);
Json to_json(const SemistandardTableau& t);
Json to_json(const Lattice& lat);
Json to_json(const GTPoset& poset);
Json to_json(const GTPattern& p);
Json to_json(const SparsePolynomial& p);
Json to_json(const ExteriorElement& e);
Json to_json(const OmegaSum& s);
Json to_json(const StandardCombination& c, const Int& weight_base);
Json to_json(const RatMatrix& m);
Json to_json(const HRep& h);

OneLineTableau tableau_from_json(const Json& j);
DoubleTableau double_tableau_from_json(const Json& j);
Shape shape_from_json(const Json& j);
SemistandardTableau ssyt_from_json(const Json& j);
Lattice lattice_from_json(const Json& j);
GTPoset poset_from_json(const Json& j);
GTPattern pattern_from_json(const Json& j);
RatMatrix matrix_from_json(const Json& j);

// Parse a JSON document; malformed text raises a parameter error.
Json parse_json(const std::string& text);

// Shape text form "2,1" used by the CLI (empty string = empty shape).
Shape parse_shape_arg(const std::string& text);
std::vector<int> parse_int_csv(const std::string& text);

}  // namespace nullcone
