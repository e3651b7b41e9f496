#include <nullcone/nullcone.h>

#include "json_io.hpp"
#include "verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>

using namespace nullcone;

struct nc_session {
  std::string last_error;
  std::uint64_t guard_limit = 10'000'000;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

Guard make_guard(const nc_session* s) {
  Guard g;
  g.limit = s->guard_limit;
  return g;
}

std::string require_text(const char* p, const char* what) {
  if (!p) throw ParamError(std::string("null ") + what);
  return p;
}

std::vector<int> int_list(const char* text, const char* what) {
  const Json j = parse_json(require_text(text, what));
  if (!j.is_array()) throw ParamError(std::string(what) + " must be a JSON array of integers");
  std::vector<int> out;
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw ParamError(std::string(what) + " must hold integers only");
    out.push_back(e.get<int>());
  }
  return out;
}

Int base_or_default(const char* text, int n, int m) {
  if (!text) return Int(2 * (n + m) + 1);
  Int v;
  const std::string s = text;
  if (s.empty() || mpz_set_str(v.get_mpz_t(), s.c_str(), 10) != 0)
    throw ParamError("weight base must be a decimal integer");
  return v;
}

template <typename Fn>
nc_status wrap(nc_session* s, char** out, Fn&& fn) {
  if (!s) return NC_ERR_PARAM;
  if (out) *out = nullptr;
  try {
    const std::string text = fn();
    if (out) {
      *out = dup_string(text);
      if (!*out) {
        s->last_error = "allocation failure";
        return NC_ERR_INTERNAL;
      }
    }
    s->last_error.clear();
    return NC_OK;
  } catch (const DomainError& e) {
    s->last_error = e.what();
    return NC_ERR_DOMAIN;
  } catch (const ParamError& e) {
    s->last_error = e.what();
    return NC_ERR_PARAM;
  } catch (const ResourceError& e) {
    s->last_error = e.what();
    return NC_ERR_RESOURCE;
  } catch (const nlohmann::json::exception& e) {
    s->last_error = e.what();
    return NC_ERR_PARAM;
  } catch (const std::exception& e) {
    s->last_error = e.what();
    return NC_ERR_INTERNAL;
  }
}

nc_status bound_impl(nc_session* s, const char* lattice_json, const char* tableau_a, const char* tableau_b,
                     char** out_json, bool want_meet) {
  return wrap(s, out_json, [&] {
    const Lattice lat = lattice_from_json(parse_json(require_text(lattice_json, "lattice")));
    const OneLineTableau a = tableau_from_json(parse_json(require_text(tableau_a, "tableau")));
    const OneLineTableau b = tableau_from_json(parse_json(require_text(tableau_b, "tableau")));
    return to_json(want_meet ? meet(lat, a, b) : join(lat, a, b)).dump();
  });
}

}  // namespace

extern "C" {

nc_session* nc_session_create(void) { return new (std::nothrow) nc_session; }

void nc_session_destroy(nc_session* s) { delete s; }

const char* nc_last_error(const nc_session* s) { return s ? s->last_error.c_str() : ""; }

void nc_set_guard_limit(nc_session* s, uint64_t limit) {
  if (s) s->guard_limit = limit;
}

void nc_string_free(char* text) { std::free(text); }

void nc_version(int* major, int* minor, int* patch) {
  if (major) *major = 0;
  if (minor) *minor = 1;
  if (patch) *patch = 0;
}

nc_status nc_enumerate_lattice(nc_session* s, const char* lattice_json, char** out_json) {
  return wrap(s, out_json, [&] {
    const Lattice lat = lattice_from_json(parse_json(require_text(lattice_json, "lattice")));
    Guard guard = make_guard(s);
    Json out = Json::array();
    for (const auto& t : enumerate_lattice(lat, guard)) out.push_back(to_json(t));
    return out.dump();
  });
}

nc_status nc_enumerate_standard(nc_session* s, const char* lattice_json, const char* shape_json,
                                const char* filter_json, char** out_json) {
  return wrap(s, out_json, [&] {
    const Lattice lat = lattice_from_json(parse_json(require_text(lattice_json, "lattice")));
    const Shape shape = shape_from_json(parse_json(require_text(shape_json, "shape")));
    std::optional<ContentFilter> filter;
    if (filter_json) {
      const Json f = parse_json(filter_json);
      ContentFilter cf;
      cf.row_content = f.at("row_content").get<std::vector<int>>();
      cf.col_content = f.at("col_content").get<std::vector<int>>();
      std::sort(cf.row_content.begin(), cf.row_content.end());
      std::sort(cf.col_content.begin(), cf.col_content.end());
      filter = std::move(cf);
    }
    Guard guard = make_guard(s);
    Json out = Json::array();
    for (const auto& t : enumerate_standard(lat, shape, guard, filter)) out.push_back(to_json(t));
    return out.dump();
  });
}

nc_status nc_enumerate_ssyt(nc_session* s, const char* request_json, char** out_json) {
  return wrap(s, out_json, [&] {
    const Json req = parse_json(require_text(request_json, "request"));
    const Shape shape = shape_from_json(req.at("shape"));
    const int max_entry = req.at("max_entry").get<int>();
    std::optional<std::vector<int>> floor;
    if (req.contains("floor")) floor = req.at("floor").get<std::vector<int>>();
    Guard guard = make_guard(s);
    Json out = Json::array();
    for (const auto& t : enumerate_ssyt(shape, max_entry, guard, floor)) out.push_back(to_json(t));
    return out.dump();
  });
}

nc_status nc_compare(nc_session* s, const char* tableau_a, const char* tableau_b, char** out_json) {
  return wrap(s, out_json, [&] {
    const OneLineTableau a = tableau_from_json(parse_json(require_text(tableau_a, "tableau")));
    const OneLineTableau b = tableau_from_json(parse_json(require_text(tableau_b, "tableau")));
    const char* text = "";
    switch (compare(a, b)) {
      case Cmp::Less: text = "leq"; break;
      case Cmp::Greater: text = "geq"; break;
      case Cmp::Equal: text = "eq"; break;
      case Cmp::Incomparable: text = "incomparable"; break;
    }
    return Json(text).dump();
  });
}

nc_status nc_meet(nc_session* s, const char* lattice_json, const char* tableau_a, const char* tableau_b,
                  char** out_json) {
  return bound_impl(s, lattice_json, tableau_a, tableau_b, out_json, true);
}

nc_status nc_join(nc_session* s, const char* lattice_json, const char* tableau_a, const char* tableau_b,
                  char** out_json) {
  return bound_impl(s, lattice_json, tableau_a, tableau_b, out_json, false);
}

nc_status nc_xi(nc_session* s, int n, int m, const char* tableau_json, char** out_json) {
  return wrap(s, out_json, [&] {
    const OneLineTableau t = tableau_from_json(parse_json(require_text(tableau_json, "tableau")));
    return Json(xi(t, n, m)).dump();
  });
}

nc_status nc_xi_inverse(nc_session* s, int n, int m, const char* indices_json, char** out_json) {
  return wrap(s, out_json, [&] { return to_json(xi_inverse(int_list(indices_json, "indices"), n, m)).dump(); });
}

nc_status nc_split(nc_session* s, int rows, int cols, const char* double_tableau_json, char** out_json) {
  return wrap(s, out_json, [&] {
    const DoubleTableau t = double_tableau_from_json(parse_json(require_text(double_tableau_json, "tableau")));
    const auto [minus, plus] = split(t, rows, cols);
    return Json{{"minus", to_json(minus)}, {"plus", to_json(plus)}}.dump();
  });
}

nc_status nc_maximal_chains(nc_session* s, const char* lattice_json, char** out_json) {
  return wrap(s, out_json, [&] {
    const Lattice lat = lattice_from_json(parse_json(require_text(lattice_json, "lattice")));
    Guard guard = make_guard(s);
    Json out = Json::array();
    for (const auto& chain : maximal_chains(lat, guard)) {
      Json c = Json::array();
      for (const auto& t : chain) c.push_back(to_json(t));
      out.push_back(std::move(c));
    }
    return out.dump();
  });
}

nc_status nc_pattern_from_tableau(nc_session* s, int m, const char* ssyt_json, char** out_json) {
  return wrap(s, out_json, [&] {
    const SemistandardTableau t = ssyt_from_json(parse_json(require_text(ssyt_json, "tableau")));
    return to_json(pattern_from_tableau(t, m)).dump();
  });
}

nc_status nc_tableau_from_pattern(nc_session* s, const char* pattern_json, char** out_json) {
  return wrap(s, out_json, [&] {
    const GTPattern p = pattern_from_json(parse_json(require_text(pattern_json, "pattern")));
    return to_json(tableau_from_pattern(p)).dump();
  });
}

nc_status nc_reduce_mod_top(nc_session* s, int n, int m, const char* pattern_json, char** out_json) {
  return wrap(s, out_json, [&] {
    const GTPattern p = pattern_from_json(parse_json(require_text(pattern_json, "pattern")));
    return to_json(reduce_mod_top(p, n, m)).dump();
  });
}

nc_status nc_glue(nc_session* s, const char* pattern_minus, const char* pattern_plus, char** out_json) {
  return wrap(s, out_json, [&] {
    const GTPattern a = pattern_from_json(parse_json(require_text(pattern_minus, "pattern")));
    const GTPattern b = pattern_from_json(parse_json(require_text(pattern_plus, "pattern")));
    return to_json(glue(a, b)).dump();
  });
}

nc_status nc_split_glued(nc_session* s, const char* pattern_json, char** out_json) {
  return wrap(s, out_json, [&] {
    const GTPattern p = pattern_from_json(parse_json(require_text(pattern_json, "pattern")));
    const auto [minus, plus] = split_glued(p);
    return Json{{"minus", to_json(minus)}, {"plus", to_json(plus)}}.dump();
  });
}

nc_status nc_sp_restrict(nc_session* s, const char* pattern_json, char** out_json) {
  return wrap(s, out_json, [&] {
    const GTPattern p = pattern_from_json(parse_json(require_text(pattern_json, "pattern")));
    return to_json(sp_restrict(p)).dump();
  });
}

nc_status nc_sp_embed(nc_session* s, const char* pattern_json, char** out_json) {
  return wrap(s, out_json, [&] {
    const GTPattern p = pattern_from_json(parse_json(require_text(pattern_json, "pattern")));
    return to_json(sp_embed(p)).dump();
  });
}

nc_status nc_pattern_of_product(nc_session* s, int n, int m, const char* product_text, char** out_json) {
  return wrap(s, out_json, [&] {
    const DoubleTableau t{parse_product(require_text(product_text, "product"))};
    return to_json(pattern_of_tableau(t, n, m)).dump();
  });
}

nc_status nc_pattern_add(nc_session* s, const char* pattern_a, const char* pattern_b, char** out_json) {
  return wrap(s, out_json, [&] {
    const GTPattern a = pattern_from_json(parse_json(require_text(pattern_a, "pattern")));
    const GTPattern b = pattern_from_json(parse_json(require_text(pattern_b, "pattern")));
    return to_json(pattern_add(a, b)).dump();
  });
}

nc_status nc_enumerate_cone_points(nc_session* s, const char* poset_json, const char* top_shape_json,
                                   char** out_json) {
  return wrap(s, out_json, [&] {
    const GTPoset poset = poset_from_json(parse_json(require_text(poset_json, "poset")));
    const Shape top = shape_from_json(parse_json(require_text(top_shape_json, "shape")));
    Guard guard = make_guard(s);
    Json out = Json::array();
    for (const auto& p : enumerate_cone_points(poset, top, guard)) out.push_back(to_json(p));
    return out.dump();
  });
}

nc_status nc_cone_inequalities(nc_session* s, const char* poset_json, char** out_json) {
  return wrap(s, out_json, [&] {
    const GTPoset poset = poset_from_json(parse_json(require_text(poset_json, "poset")));
    return to_json(cone_inequalities(poset)).dump();
  });
}

nc_status nc_count_linear_extensions(nc_session* s, const char* poset_json, char** out_json) {
  return wrap(s, out_json, [&] {
    const GTPoset poset = poset_from_json(parse_json(require_text(poset_json, "poset")));
    Guard guard = make_guard(s);
    return Json{{"count", count_linear_extensions(poset, guard).get_str()}}.dump();
  });
}

nc_status nc_straighten(nc_session* s, int n, int m, const char* product_text, const char* weight_base,
                        char** out_json) {
  return wrap(s, out_json, [&] {
    const std::vector<OneLineTableau> product = parse_product(require_text(product_text, "product"));
    const Int base = base_or_default(weight_base, n, m);
    const WeightConfig cfg = WeightConfig::make(n, m, base);
    const Lattice lat = Lattice::D(n, m);
    Guard guard = make_guard(s);
    return to_json(straighten(product, lat, cfg, guard), base).dump();
  });
}

nc_status nc_weight(nc_session* s, int n, int m, const char* product_text, const char* weight_base,
                    char** out_json) {
  return wrap(s, out_json, [&] {
    const std::vector<OneLineTableau> product = parse_product(require_text(product_text, "product"));
    const Int base = base_or_default(weight_base, n, m);
    const WeightConfig cfg = WeightConfig::make(n, m, base);
    return Json{{"weight", weight(DoubleTableau{product}, cfg).get_str()}, {"weight_base", base.get_str()}}.dump();
  });
}

nc_status nc_nullcone_straighten(nc_session* s, int k, int n, const char* product_text, const char* weight_base,
                                 int verify_points, uint64_t seed, char** out_json) {
  return wrap(s, out_json, [&] {
    if (verify_points < 0) throw ParamError("verification point count must be non-negative");
    const std::vector<OneLineTableau> product = parse_product(require_text(product_text, "product"));
    const Int base = base_or_default(weight_base, k, 2 * n);
    const NullconeContext ctx = NullconeContext::make(k, n, base);
    NStraightenOptions opt;
    opt.verify_points = verify_points;
    opt.seed = seed;
    Guard guard = make_guard(s);
    return to_json(n_straighten(product, ctx, guard, opt), base).dump();
  });
}

nc_status nc_nullcone_count(nc_session* s, int k, int n, const char* shape_json, int include_tableaux,
                            char** out_json) {
  return wrap(s, out_json, [&] {
    const Shape shape = shape_from_json(parse_json(require_text(shape_json, "shape")));
    const NullconeContext ctx = NullconeContext::make(k, n);
    Guard guard = make_guard(s);
    const auto tableaux = enumerate_n_standard(shape, ctx, guard);
    Json out{{"shape", to_json(shape)},
             {"count", Int(static_cast<long>(tableaux.size())).get_str()},
             {"dim_gl", dim_gl(shape, k).get_str()},
             {"dim_sp", dim_sp(shape, n).get_str()}};
    if (include_tableaux) {
      Json arr = Json::array();
      for (const auto& t : tableaux) arr.push_back(to_json(t));
      out["tableaux"] = std::move(arr);
    }
    return out.dump();
  });
}

nc_status nc_omega_sum(nc_session* s, int n, const char* indices_json, char** out_json) {
  return wrap(s, out_json, [&] {
    const NullconeContext ctx = NullconeContext::make(1, n);
    Guard guard = make_guard(s);
    return to_json(omega_sum_for(int_list(indices_json, "indices"), ctx, guard)).dump();
  });
}

nc_status nc_theta(nc_session* s, int k, int n, const char* rows_json, const char* cols_json, char** out_json) {
  return wrap(s, out_json, [&] {
    const NullconeContext ctx = NullconeContext::make(k, n);
    Guard guard = make_guard(s);
    const OmegaSum sum = omega_sum_for(int_list(cols_json, "columns"), ctx, guard);
    return to_json(theta_element(int_list(rows_json, "rows"), sum, ctx)).dump();
  });
}

nc_status nc_basic_invariant(nc_session* s, int k, int n, int i, int j, char** out_json) {
  return wrap(s, out_json, [&] { return to_json(basic_invariant(i, j, NullconeContext::make(k, n))).dump(); });
}

nc_status nc_sample_point(nc_session* s, int k, int n, uint64_t seed, char** out_json) {
  return wrap(s, out_json, [&] { return to_json(sample_nullcone_point(NullconeContext::make(k, n), seed)).dump(); });
}

nc_status nc_independence(nc_session* s, int k, int n, int max_degree, int num_points, uint64_t seed,
                          char** out_json) {
  return wrap(s, out_json, [&] {
    const NullconeContext ctx = NullconeContext::make(k, n);
    Guard guard = make_guard(s);
    const auto candidates = n_standard_up_to_degree(max_degree, ctx, guard);
    const IndependenceReport rep = independence_check(candidates, ctx, num_points, seed, guard);
    return Json{{"candidates", rep.candidates},
                {"rank", rep.rank},
                {"points_used", rep.points_used},
                {"full_rank", rep.full_rank}}
        .dump();
  });
}

nc_status nc_verify_all(nc_session* s, int max_size, uint64_t seed, int* failures, char** out_report) {
  if (failures) *failures = -1;
  return wrap(s, out_report, [&] {
    const auto results = run_all_checks(max_size, seed);
    std::string report;
    const int count = render_checks(results, report);
    if (failures) *failures = count;
    return report;
  });
}

}  // extern "C"
