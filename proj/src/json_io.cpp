#include "json_io.hpp"

#include <sstream>

namespace nullcone {

Rat rat_from_str(const std::string& s) {
  if (s.empty()) throw ParamError("empty rational literal");
  Rat q;
  if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0) throw ParamError("bad rational literal: " + s);
  if (q.get_den() == 0) throw ParamError("zero denominator in rational literal: " + s);
  q.canonicalize();
  return q;
}

static std::vector<int> int_vector_from_json(const Json& j, const char* what) {
  if (!j.is_array()) throw ParamError(std::string("expected an array for ") + what);
  std::vector<int> out;
  out.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw ParamError(std::string("expected integer entries in ") + what);
    out.push_back(e.get<int>());
  }
  return out;
}

static int int_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw ParamError(std::string("missing integer field \"") + key + "\"");
  return j[key].get<int>();
}

Json to_json(const OneLineTableau& t) { return Json{{"I", t.I}, {"J", t.J}}; }

Json to_json(const DoubleTableau& t) {
  Json cols = Json::array();
  for (const auto& c : t.columns) cols.push_back(to_json(c));
  return Json{{"columns", std::move(cols)}};
}

Json to_json(const Shape& s) { return Json(s); }

Json to_json(const SemistandardTableau& t) { return Json{{"rows", t.rows}, {"max_entry", t.max_entry}}; }

Json to_json(const Lattice& lat) {
  switch (lat.kind) {
    case Lattice::Kind::D: return Json{{"kind", "D"}, {"n", lat.n}, {"m", lat.m}};
    case Lattice::Kind::L: return Json{{"kind", "L"}, {"n", lat.n}, {"m", lat.m}};
    case Lattice::Kind::Pl: return Json{{"kind", "Pl"}, {"n", lat.n}, {"m", lat.m}};
    case Lattice::Kind::DN: return Json{{"kind", "DN"}, {"k", lat.k}, {"n", lat.n}};
  }
  throw InternalError("bad lattice kind");
}

Json to_json(const GTPoset& poset) {
  switch (poset.kind()) {
    case GTPoset::Kind::Triangle: return Json{{"kind", "gamma_m"}, {"m", poset.param_m()}};
    case GTPoset::Kind::Reduced: return Json{{"kind", "gamma_nm"}, {"n", poset.param_n()}, {"m", poset.param_m()}};
    case GTPoset::Kind::Nullcone: return Json{{"kind", "digamma"}, {"k", poset.param_k()}, {"n", poset.param_n()}};
    case GTPoset::Kind::SpHalf: return Json{{"kind", "sp_half"}, {"n", poset.param_n()}};
  }
  throw InternalError("bad poset kind");
}

Json to_json(const GTPattern& p) {
  Json rows = Json::array();
  for (const auto& [a, cells] : p.poset.rows()) {
    Json row = Json::array();
    for (const Cell c : cells) row.push_back(p.at(c));
    rows.push_back(std::move(row));
  }
  return Json{{"poset", to_json(p.poset)}, {"rows", std::move(rows)}};
}

Json to_json(const SparsePolynomial& p) {
  Json out = Json::array();
  // Leading term first: walk the graded-lex map in reverse.
  for (auto it = p.terms.rbegin(); it != p.terms.rend(); ++it) {
    Json exps = Json::array();
    for (const auto& [i, j, e] : it->first) exps.push_back(Json::array({i, j, e}));
    out.push_back(Json{{"exp", std::move(exps)}, {"coef", it->second.get_str()}});
  }
  return out;
}

Json to_json(const ExteriorElement& e) {
  Json out = Json::array();
  for (const auto& [key, c] : e.terms) out.push_back(Json{{"indices", key}, {"coef", c.get_str()}});
  return out;
}

Json to_json(const OmegaSum& s) {
  Json terms = Json::array();
  for (const auto& [key, c] : s.terms) terms.push_back(Json{{"J", key}, {"coef", rat_str(c)}});
  Json cert = Json::array();
  for (const auto& [c, key] : s.certificate) cert.push_back(Json{{"indices", key}, {"coef", rat_str(c)}});
  return Json{{"p", s.p}, {"terms", std::move(terms)}, {"certificate", std::move(cert)}};
}

Json to_json(const StandardCombination& c, const Int& weight_base) {
  Json terms = Json::array();
  for (const auto& [coef, t] : c.terms) terms.push_back(Json{{"coef", coef.get_str()}, {"tableau", to_json(t)}});
  return Json{{"terms", std::move(terms)}, {"weight_base", weight_base.get_str()}};
}

Json to_json(const RatMatrix& m) {
  Json out = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const Rat& q : row) r.push_back(rat_str(q));
    out.push_back(std::move(r));
  }
  return out;
}

Json to_json(const HRep& h) {
  Json rows = Json::array();
  for (const auto& row : h.inequalities) rows.push_back(row);
  return Json{{"dim", h.dim}, {"inequalities", std::move(rows)}};
}

OneLineTableau tableau_from_json(const Json& j) {
  if (!j.is_object()) throw ParamError("tableau must be an object with \"I\" and \"J\"");
  if (!j.contains("I") || !j.contains("J")) throw ParamError("tableau needs fields \"I\" and \"J\"");
  return OneLineTableau{int_vector_from_json(j["I"], "\"I\""), int_vector_from_json(j["J"], "\"J\"")};
}

DoubleTableau double_tableau_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("columns") || !j["columns"].is_array())
    throw ParamError("double tableau needs an array field \"columns\"");
  DoubleTableau t;
  for (const auto& c : j["columns"]) t.columns.push_back(tableau_from_json(c));
  return t;
}

Shape shape_from_json(const Json& j) {
  const std::vector<int> s = int_vector_from_json(j, "shape");
  validate_shape(s);
  return s;
}

SemistandardTableau ssyt_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rows") || !j["rows"].is_array())
    throw ParamError("tableau needs an array field \"rows\"");
  SemistandardTableau t;
  for (const auto& row : j["rows"]) t.rows.push_back(int_vector_from_json(row, "\"rows\""));
  t.max_entry = int_field(j, "max_entry");
  return t;
}

Lattice lattice_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw ParamError("lattice needs a string field \"kind\"");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "D") return Lattice::D(int_field(j, "n"), int_field(j, "m"));
  if (kind == "L") return Lattice::L(int_field(j, "n"), int_field(j, "m"));
  if (kind == "Pl") return Lattice::Pl(int_field(j, "n"), int_field(j, "m"));
  if (kind == "DN") return Lattice::DN(int_field(j, "k"), int_field(j, "n"));
  throw ParamError("unknown lattice kind: " + kind);
}

GTPoset poset_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw ParamError("poset needs a string field \"kind\"");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "gamma_m") return GTPoset::triangle(int_field(j, "m"));
  if (kind == "gamma_nm") return GTPoset::reduced(int_field(j, "n"), int_field(j, "m"));
  if (kind == "digamma") return GTPoset::nullcone(int_field(j, "k"), int_field(j, "n"));
  if (kind == "sp_half") return GTPoset::sp_half(int_field(j, "n"));
  throw ParamError("unknown poset kind: " + kind);
}

GTPattern pattern_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("poset") || !j.contains("rows"))
    throw ParamError("pattern needs fields \"poset\" and \"rows\"");
  GTPattern p = zero_pattern(poset_from_json(j["poset"]));
  const auto rows = p.poset.rows();
  if (!j["rows"].is_array() || j["rows"].size() != rows.size())
    throw ParamError("pattern rows must match the poset rows");
  const auto& cells = p.poset.cells();
  std::size_t flat = 0;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const Json& row = j["rows"][r];
    if (!row.is_array() || row.size() != rows[r].second.size())
      throw ParamError("pattern row length must match the poset row");
    for (const auto& e : row) {
      if (!e.is_number_integer()) throw ParamError("pattern entries must be integers");
      p.values[flat++] = e.get<std::int64_t>();
    }
  }
  if (flat != cells.size()) throw InternalError("pattern fill mismatch");
  return p;
}

RatMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw ParamError("matrix must be an array of rows");
  RatMatrix m;
  for (const auto& row : j) {
    if (!row.is_array()) throw ParamError("matrix rows must be arrays");
    std::vector<Rat> r;
    for (const auto& e : row) {
      if (e.is_number_integer())
        r.push_back(Rat(e.get<long>()));
      else if (e.is_string())
        r.push_back(rat_from_str(e.get<std::string>()));
      else
        throw ParamError("matrix entries must be integers or rational strings");
    }
    m.push_back(std::move(r));
  }
  if (!m.empty())
    for (const auto& row : m)
      if (row.size() != m[0].size()) throw ParamError("matrix rows must have equal length");
  return m;
}

Json parse_json(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParamError("malformed JSON input");
  return j;
}

std::vector<int> parse_int_csv(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(item, &pos);
    } catch (const std::exception&) {
      throw ParamError("bad integer list entry: " + item);
    }
    while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
    if (pos != item.size()) throw ParamError("bad integer list entry: " + item);
    out.push_back(v);
  }
  if (!text.empty() && text.back() == ',') throw ParamError("trailing comma in integer list");
  return out;
}

Shape parse_shape_arg(const std::string& text) {
  const Shape s = parse_int_csv(text);
  validate_shape(s);
  return s;
}

}  // namespace nullcone
