// Command-line front end over the C API.  Every subcommand builds JSON
// inputs, runs one library call, and prints the JSON result (or a plain
// indented rendering with --format table; that rendering is not stable).
// Exit codes: 0 success, 1 domain error, 2 parameter error, 3 resource
// guard, 4 internal error.

#include <nullcone/nullcone.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string format = "json";
  std::uint64_t guard = 0;
  bool guard_set = false;
};

bool scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

void print_table(const Json& j, std::ostream& os, int indent) {
  const std::string pad(indent, ' ');
  if (scalar(j)) {
    os << pad << scalar_text(j) << "\n";
    return;
  }
  if (j.is_array()) {
    bool flat = true;
    for (const auto& e : j)
      if (!scalar(e)) flat = false;
    if (flat) {
      os << pad;
      for (std::size_t i = 0; i < j.size(); ++i) os << (i ? " " : "") << scalar_text(j[i]);
      os << "\n";
      return;
    }
    for (const auto& e : j) {
      if (e.is_array()) {
        bool rows = true;
        for (const auto& r : e)
          if (!scalar(r)) rows = false;
        if (rows) {
          os << pad << "- ";
          for (std::size_t i = 0; i < e.size(); ++i) os << (i ? " " : "") << scalar_text(e[i]);
          os << "\n";
          continue;
        }
      }
      os << pad << "-\n";
      print_table(e, os, indent + 2);
    }
    return;
  }
  for (const auto& [key, value] : j.items()) {
    if (scalar(value)) {
      os << pad << key << ": " << scalar_text(value) << "\n";
    } else if (value.is_array() && value.empty()) {
      os << pad << key << ":\n";
    } else {
      os << pad << key << ":\n";
      print_table(value, os, indent + 2);
    }
  }
}

int emit(nc_session* s, nc_status status, char* out, const Options& opt) {
  if (status != NC_OK) {
    std::cerr << "error: " << nc_last_error(s) << "\n";
    nc_string_free(out);
    return static_cast<int>(status);
  }
  if (out) {
    if (opt.format == "table") {
      const Json j = Json::parse(out, nullptr, false);
      if (j.is_discarded())
        std::cout << out << "\n";
      else
        print_table(j, std::cout, 0);
    } else {
      std::cout << out << "\n";
    }
    nc_string_free(out);
  }
  return 0;
}

bool read_input(const std::string& path, std::string& out) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    out = buf.str();
    return true;
  }
  std::ifstream in(path);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  out = buf.str();
  return true;
}

std::string csv_array(const std::string& csv) {
  std::string body;
  for (char c : csv)
    if (!std::isspace(static_cast<unsigned char>(c))) body.push_back(c);
  return "[" + body + "]";
}

std::string lattice_json(const std::string& kind, int n, int m, int k) {
  Json j{{"kind", kind}};
  if (kind == "DN") {
    j["k"] = k;
    j["n"] = n;
  } else {
    j["n"] = n;
    j["m"] = m;
  }
  return j.dump();
}

// CLI poset names map onto the JSON kinds: gamma -> gamma_m, gamma-nm ->
// gamma_nm, sp -> sp_half, nullcone -> digamma.
std::string poset_json(const std::string& name, int m, int n, int k) {
  Json j;
  if (name == "gamma") {
    j = {{"kind", "gamma_m"}, {"m", m}};
  } else if (name == "gamma-nm") {
    j = {{"kind", "gamma_nm"}, {"n", n}, {"m", m}};
  } else if (name == "sp") {
    j = {{"kind", "sp_half"}, {"n", n}};
  } else {
    j = {{"kind", "digamma"}, {"k", k}, {"n", n}};
  }
  return j.dump();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact double-tableau, pattern-cone, and nullcone toolkit"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  auto* guard_opt = app.add_option("--guard", opt.guard, "Enumeration guard limit (work units)");

  nc_session* session = nc_session_create();
  if (!session) {
    std::cerr << "error: session allocation failed\n";
    return 4;
  }
  int exit_code = 0;
  // Takes the result slot by address: the second argument must not be read
  // before the API call in the first argument has filled it, and argument
  // evaluation order is unspecified.
  const auto run = [&](nc_status status, char** out) { exit_code = emit(session, status, *out, opt); };

  // Leaf callbacks only record the action; it runs after parsing so that
  // trailing global flags (--guard, --format) are already in effect.
  std::function<void()> action;
  const auto set_action = [&action](CLI::App* c, std::function<void()> fn) {
    c->callback([&action, fn] { action = std::move(fn); });
  };

  const auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& desc) {
    CLI::App* sub = parent->add_subcommand(name, desc);
    sub->fallthrough();
    return sub;
  };

  // Shared option storage; each leaf binds the subset it uses.
  std::string kind = "D", poset_name, shape, top, product, indices, rows_csv, cols_csv, rows_b_csv, cols_b_csv;
  std::string input = "-", input_b, weight_base, row_content, col_content, floor_csv;
  int n = 0, m = 0, k = 0, i = 0, j = 0, max_entry = 0, max_degree = 0;
  int verify_points = 25, points = 32, max_size = 3, split_rows = 0, split_cols = 0;
  std::uint64_t seed = 12345;
  bool with_tableaux = false;

  auto* enumerate = app.add_subcommand("enumerate", "List lattice members, tableaux, or cone points");
  enumerate->fallthrough();
  enumerate->require_subcommand(1);
  {
    auto* c = leaf(enumerate, "lattice", "All members of a tableau lattice");
    c->add_option("--kind", kind, "Lattice kind")->check(CLI::IsMember({"D", "L", "Pl", "DN"}));
    c->add_option("--n", n)->required();
    c->add_option("--m", m);
    c->add_option("--k", k);
    set_action(c, [&] {
      char* out = nullptr;
      run(nc_enumerate_lattice(session, lattice_json(kind, n, m, k).c_str(), &out), &out);
    });
  }
  {
    auto* c = leaf(enumerate, "standard", "Standard tableaux of a shape over a lattice");
    c->add_option("--kind", kind)->check(CLI::IsMember({"D", "L", "Pl", "DN"}));
    c->add_option("--n", n)->required();
    c->add_option("--m", m);
    c->add_option("--k", k);
    c->add_option("--shape", shape)->required();
    c->add_option("--row-content", row_content, "Exact row index multiset (csv)");
    c->add_option("--col-content", col_content, "Exact column index multiset (csv)");
    set_action(c, [&] {
      std::string filter;
      if (!row_content.empty() || !col_content.empty())
        filter = "{\"row_content\":" + csv_array(row_content) + ",\"col_content\":" + csv_array(col_content) + "}";
      char* out = nullptr;
      run(nc_enumerate_standard(session, lattice_json(kind, n, m, k).c_str(), csv_array(shape).c_str(),
                                filter.empty() ? nullptr : filter.c_str(), &out),
          &out);
    });
  }
  {
    auto* c = leaf(enumerate, "nstandard", "Standard tableaux over the admissible-column lattice");
    c->add_option("--k", k)->required();
    c->add_option("--n", n)->required();
    c->add_option("--shape", shape)->required();
    set_action(c, [&] {
      char* out = nullptr;
      run(nc_enumerate_standard(session, lattice_json("DN", n, 0, k).c_str(), csv_array(shape).c_str(), nullptr,
                                &out),
          &out);
    });
  }
  {
    auto* c = leaf(enumerate, "ssyt", "Semistandard fillings of a shape");
    c->add_option("--shape", shape)->required();
    c->add_option("--max-entry", max_entry)->required();
    c->add_option("--floor", floor_csv, "Column floor (csv)");
    set_action(c, [&] {
      Json req{{"shape", Json::parse(csv_array(shape))}, {"max_entry", max_entry}};
      if (!floor_csv.empty()) req["floor"] = Json::parse(csv_array(floor_csv));
      char* out = nullptr;
      run(nc_enumerate_ssyt(session, req.dump().c_str(), &out), &out);
    });
  }
  {
    auto* c = leaf(enumerate, "cone-points", "Integer cone points with a prescribed top row");
    c->add_option("--poset", poset_name)->check(CLI::IsMember({"gamma", "gamma-nm", "sp", "nullcone"}))->required();
    c->add_option("--m", m);
    c->add_option("--n", n);
    c->add_option("--k", k);
    c->add_option("--top", top, "Top data row (csv shape)")->required();
    set_action(c, [&] {
      char* out = nullptr;
      run(nc_enumerate_cone_points(session, poset_json(poset_name, m, n, k).c_str(), csv_array(top).c_str(), &out),
          &out);
    });
  }
  {
    auto* c = leaf(enumerate, "chains", "Maximal chains of a tableau lattice");
    c->add_option("--kind", kind)->check(CLI::IsMember({"D", "L", "Pl", "DN"}));
    c->add_option("--n", n)->required();
    c->add_option("--m", m);
    c->add_option("--k", k);
    set_action(c, [&] {
      char* out = nullptr;
      run(nc_maximal_chains(session, lattice_json(kind, n, m, k).c_str(), &out), &out);
    });
  }

  {
    auto* c = leaf(&app, "straighten", "Standard expansion of a minor product");
    c->add_option("--n", n)->required();
    c->add_option("--m", m)->required();
    c->add_option("--product", product)->required();
    c->add_option("--weight-base", weight_base, "Digit base (decimal, default 2(n+m)+1)");
    set_action(c, [&] {
      char* out = nullptr;
      run(nc_straighten(session, n, m, product.c_str(), weight_base.empty() ? nullptr : weight_base.c_str(), &out),
          &out);
    });
  }
  {
    auto* c = leaf(&app, "weight", "Digit weight of a minor product");
    c->add_option("--n", n)->required();
    c->add_option("--m", m)->required();
    c->add_option("--product", product)->required();
    c->add_option("--weight-base", weight_base);
    set_action(c, [&] {
      char* out = nullptr;
      run(nc_weight(session, n, m, product.c_str(), weight_base.empty() ? nullptr : weight_base.c_str(), &out), &out);
    });
  }

  auto* latgrp = app.add_subcommand("lattice", "Order relations between lattice members");
  latgrp->fallthrough();
  latgrp->require_subcommand(1);
  const auto tableau_json = [](const std::string& rows, const std::string& cols) {
    return "{\"I\":" + csv_array(rows) + ",\"J\":" + csv_array(cols) + "}";
  };
  {
    auto* c = leaf(latgrp, "compare", "Order relation between two one-line tableaux");
    c->add_option("--a-rows", rows_csv, "Row indices of the first tableau (csv)")->required();
    c->add_option("--a-cols", cols_csv, "Column indices of the first tableau (csv)")->required();
    c->add_option("--b-rows", rows_b_csv, "Row indices of the second tableau (csv)")->required();
    c->add_option("--b-cols", cols_b_csv, "Column indices of the second tableau (csv)")->required();
    set_action(c, [&] {
      char* out = nullptr;
      run(nc_compare(session, tableau_json(rows_csv, cols_csv).c_str(),
                     tableau_json(rows_b_csv, cols_b_csv).c_str(), &out),
          &out);
    });
  }
  {
    auto* c = leaf(latgrp, "meet", "Greatest lower bound of two members");
    c->add_option("--kind", kind)->check(CLI::IsMember({"D", "L", "Pl", "DN"}));
    c->add_option("--n", n)->required();
    c->add_option("--m", m);
    c->add_option("--k", k);
    c->add_option("--a-rows", rows_csv)->required();
    c->add_option("--a-cols", cols_csv)->required();
    c->add_option("--b-rows", rows_b_csv)->required();
    c->add_option("--b-cols", cols_b_csv)->required();
    set_action(c, [&] {
      char* out = nullptr;
      run(nc_meet(session, lattice_json(kind, n, m, k).c_str(), tableau_json(rows_csv, cols_csv).c_str(),
                  tableau_json(rows_b_csv, cols_b_csv).c_str(), &out),
          &out);
    });
  }
  {
    auto* c = leaf(latgrp, "join", "Least upper bound of two members");
    c->add_option("--kind", kind)->check(CLI::IsMember({"D", "L", "Pl", "DN"}));
    c->add_option("--n", n)->required();
    c->add_option("--m", m);
    c->add_option("--k", k);
    c->add_option("--a-rows", rows_csv)->required();
    c->add_option("--a-cols", cols_csv)->required();
    c->add_option("--b-rows", rows_b_csv)->required();
    c->add_option("--b-cols", cols_b_csv)->required();
    set_action(c, [&] {
      char* out = nullptr;
      run(nc_join(session, lattice_json(kind, n, m, k).c_str(), tableau_json(rows_csv, cols_csv).c_str(),
                  tableau_json(rows_b_csv, cols_b_csv).c_str(), &out),
          &out);
    });
  }

  auto* nullsub = app.add_subcommand("nullcone", "Isotropic-locus ring operations");
  nullsub->fallthrough();
  nullsub->require_subcommand(1);
  {
    auto* c = leaf(nullsub, "straighten", "Rewrite a product onto the admissible standard basis");
    c->add_option("--k", k)->required();
    c->add_option("--n", n)->required();
    c->add_option("--product", product)->required();
    c->add_option("--weight-base", weight_base);
    c->add_option("--verify-points", verify_points, "Sampled points for the identity check");
    c->add_option("--seed", seed);
    set_action(c, [&] {
      char* out = nullptr;
      run(nc_nullcone_straighten(session, k, n, product.c_str(), weight_base.empty() ? nullptr : weight_base.c_str(),
                                 verify_points, seed, &out),
          &out);
    });
  }
  {
    auto* c = leaf(nullsub, "count", "Standard count and dimension oracles for a shape");
    c->add_option("--k", k)->required();
    c->add_option("--n", n)->required();
    c->add_option("--shape", shape)->required();
    c->add_flag("--tableaux", with_tableaux, "Include the tableaux themselves");
    set_action(c, [&] {
      char* out = nullptr;
      run(nc_nullcone_count(session, k, n, csv_array(shape).c_str(), with_tableaux ? 1 : 0, &out), &out);
    });
  }
  {
    auto* c = leaf(nullsub, "omega-sum", "Rewriting combination for an inadmissible column");
    c->add_option("--n", n)->required();
    c->add_option("--indices", indices, "Column index set (csv)")->required();
    set_action(c, [&] {
      char* out = nullptr;
      run(nc_omega_sum(session, n, csv_array(indices).c_str(), &out), &out);
    });
  }
  {
    auto* c = leaf(nullsub, "theta", "Invariant-ideal element from an omega-sum");
    c->add_option("--k", k)->required();
    c->add_option("--n", n)->required();
    c->add_option("--rows", rows_csv, "Row index set (csv)")->required();
    c->add_option("--cols", cols_csv, "Column index set (csv)")->required();
    set_action(c, [&] {
      char* out = nullptr;
      run(nc_theta(session, k, n, csv_array(rows_csv).c_str(), csv_array(cols_csv).c_str(), &out), &out);
    });
  }
  {
    auto* c = leaf(nullsub, "invariant", "Basic invariant r_ij");
    c->add_option("--k", k)->required();
    c->add_option("--n", n)->required();
    c->add_option("--i", i)->required();
    c->add_option("--j", j)->required();
    set_action(c, [&] {
      char* out = nullptr;
      run(nc_basic_invariant(session, k, n, i, j, &out), &out);
    });
  }
  {
    auto* c = leaf(nullsub, "sample", "Deterministic exact point with isotropic row span");
    c->add_option("--k", k)->required();
    c->add_option("--n", n)->required();
    c->add_option("--seed", seed);
    set_action(c, [&] {
      char* out = nullptr;
      run(nc_sample_point(session, k, n, seed, &out), &out);
    });
  }
  {
    auto* c = leaf(nullsub, "independence", "Evaluation rank of the standard monomials up to a degree");
    c->add_option("--k", k)->required();
    c->add_option("--n", n)->required();
    c->add_option("--max-degree", max_degree)->required();
    c->add_option("--points", points, "Initial sample count (grown on deficiency)");
    c->add_option("--seed", seed);
    set_action(c, [&] {
      char* out = nullptr;
      run(nc_independence(session, k, n, max_degree, points, seed, &out), &out);
    });
  }

  auto* convert = app.add_subcommand("convert", "Tableau and pattern conversions (JSON via --input file or -)");
  convert->fallthrough();
  convert->require_subcommand(1);
  const auto with_input = [&](CLI::App* c) { c->add_option("--input", input, "Input file or - for stdin"); };
  {
    auto* c = leaf(convert, "tableau-to-pattern", "Triangle pattern of a semistandard tableau");
    c->add_option("--m", m, "Triangle size (entry alphabet)")->required();
    with_input(c);
    set_action(c, [&] {
      std::string text;
      if (!read_input(input, text)) {
        std::cerr << "error: cannot read input " << input << "\n";
        exit_code = 2;
        return;
      }
      char* out = nullptr;
      run(nc_pattern_from_tableau(session, m, text.c_str(), &out), &out);
    });
  }
  {
    auto* c = leaf(convert, "pattern-to-tableau", "Semistandard tableau of a triangle pattern");
    with_input(c);
    set_action(c, [&] {
      std::string text;
      if (!read_input(input, text)) {
        std::cerr << "error: cannot read input " << input << "\n";
        exit_code = 2;
        return;
      }
      char* out = nullptr;
      run(nc_tableau_from_pattern(session, text.c_str(), &out), &out);
    });
  }
  {
    auto* c = leaf(convert, "xi", "Order-isomorphism image of a one-line tableau");
    c->add_option("--n", n)->required();
    c->add_option("--m", m)->required();
    with_input(c);
    set_action(c, [&] {
      std::string text;
      if (!read_input(input, text)) {
        std::cerr << "error: cannot read input " << input << "\n";
        exit_code = 2;
        return;
      }
      char* out = nullptr;
      run(nc_xi(session, n, m, text.c_str(), &out), &out);
    });
  }
  {
    auto* c = leaf(convert, "xi-inverse", "One-line tableau of an index set");
    c->add_option("--n", n)->required();
    c->add_option("--m", m)->required();
    c->add_option("--indices", indices, "Index set (csv)")->required();
    set_action(c, [&] {
      char* out = nullptr;
      run(nc_xi_inverse(session, n, m, csv_array(indices).c_str(), &out), &out);
    });
  }
  {
    auto* c = leaf(convert, "reduce", "Reduce a triangle pattern modulo the top column");
    c->add_option("--n", n)->required();
    c->add_option("--m", m)->required();
    with_input(c);
    set_action(c, [&] {
      std::string text;
      if (!read_input(input, text)) {
        std::cerr << "error: cannot read input " << input << "\n";
        exit_code = 2;
        return;
      }
      char* out = nullptr;
      run(nc_reduce_mod_top(session, n, m, text.c_str(), &out), &out);
    });
  }
  {
    auto* c = leaf(convert, "glue", "Glue two patterns over their shared top row");
    c->add_option("--minus", input, "Pattern file for the lower half")->required();
    c->add_option("--plus", input_b, "Pattern file for the upper half")->required();
    set_action(c, [&] {
      std::string a, b;
      if (!read_input(input, a) || !read_input(input_b, b)) {
        std::cerr << "error: cannot read input\n";
        exit_code = 2;
        return;
      }
      char* out = nullptr;
      run(nc_glue(session, a.c_str(), b.c_str(), &out), &out);
    });
  }
  {
    auto* c = leaf(convert, "split-glued", "Split a glued pattern into its two halves");
    with_input(c);
    set_action(c, [&] {
      std::string text;
      if (!read_input(input, text)) {
        std::cerr << "error: cannot read input " << input << "\n";
        exit_code = 2;
        return;
      }
      char* out = nullptr;
      run(nc_split_glued(session, text.c_str(), &out), &out);
    });
  }
  {
    auto* c = leaf(convert, "sp-restrict", "Restrict a pattern to the symplectic half triangle");
    with_input(c);
    set_action(c, [&] {
      std::string text;
      if (!read_input(input, text)) {
        std::cerr << "error: cannot read input " << input << "\n";
        exit_code = 2;
        return;
      }
      char* out = nullptr;
      run(nc_sp_restrict(session, text.c_str(), &out), &out);
    });
  }
  {
    auto* c = leaf(convert, "sp-embed", "Zero-extend a half pattern onto its full triangle");
    with_input(c);
    set_action(c, [&] {
      std::string text;
      if (!read_input(input, text)) {
        std::cerr << "error: cannot read input " << input << "\n";
        exit_code = 2;
        return;
      }
      char* out = nullptr;
      run(nc_sp_embed(session, text.c_str(), &out), &out);
    });
  }
  {
    auto* c = leaf(convert, "split", "Row and column halves of a standard double tableau");
    c->add_option("--rows", split_rows, "Row alphabet bound")->required();
    c->add_option("--cols", split_cols, "Column alphabet bound")->required();
    with_input(c);
    set_action(c, [&] {
      std::string text;
      if (!read_input(input, text)) {
        std::cerr << "error: cannot read input " << input << "\n";
        exit_code = 2;
        return;
      }
      char* out = nullptr;
      run(nc_split(session, split_rows, split_cols, text.c_str(), &out), &out);
    });
  }
  {
    auto* c = leaf(convert, "pattern-of-product", "Reduced pattern of a standard product");
    c->add_option("--n", n)->required();
    c->add_option("--m", m)->required();
    c->add_option("--product", product)->required();
    set_action(c, [&] {
      char* out = nullptr;
      run(nc_pattern_of_product(session, n, m, product.c_str(), &out), &out);
    });
  }
  {
    auto* c = leaf(convert, "add", "Cellwise sum of two patterns on one poset");
    c->add_option("--a", input, "First pattern file")->required();
    c->add_option("--b", input_b, "Second pattern file")->required();
    set_action(c, [&] {
      std::string a, b;
      if (!read_input(input, a) || !read_input(input_b, b)) {
        std::cerr << "error: cannot read input\n";
        exit_code = 2;
        return;
      }
      char* out = nullptr;
      run(nc_pattern_add(session, a.c_str(), b.c_str(), &out), &out);
    });
  }

  auto* cone = app.add_subcommand("cone", "Pattern-cone polyhedra");
  cone->fallthrough();
  cone->require_subcommand(1);
  {
    auto* c = leaf(cone, "inequalities", "H-representation of the pattern cone");
    c->add_option("--poset", poset_name)->check(CLI::IsMember({"gamma", "gamma-nm", "sp", "nullcone"}))->required();
    c->add_option("--m", m);
    c->add_option("--n", n);
    c->add_option("--k", k);
    set_action(c, [&] {
      char* out = nullptr;
      run(nc_cone_inequalities(session, poset_json(poset_name, m, n, k).c_str(), &out), &out);
    });
  }
  {
    auto* c = leaf(cone, "count-extensions", "Number of linear extensions of the cell poset");
    c->add_option("--poset", poset_name)->check(CLI::IsMember({"gamma", "gamma-nm", "sp", "nullcone"}))->required();
    c->add_option("--m", m);
    c->add_option("--n", n);
    c->add_option("--k", k);
    set_action(c, [&] {
      char* out = nullptr;
      run(nc_count_linear_extensions(session, poset_json(poset_name, m, n, k).c_str(), &out), &out);
    });
  }

  auto* verify = app.add_subcommand("verify", "Self-verification suite");
  verify->fallthrough();
  verify->require_subcommand(1);
  {
    auto* c = leaf(verify, "all", "Run every check and print the pass/fail table");
    c->add_option("--max-size", max_size, "Size cap for the exhaustive sweeps");
    c->add_option("--seed", seed);
    set_action(c, [&] {
      int failures = 0;
      char* report = nullptr;
      const nc_status st = nc_verify_all(session, max_size, seed, &failures, &report);
      if (st != NC_OK) {
        std::cerr << "error: " << nc_last_error(session) << "\n";
        nc_string_free(report);
        exit_code = static_cast<int>(st);
        return;
      }
      if (report) std::cout << report;
      nc_string_free(report);
      exit_code = failures == 0 ? 0 : 1;
    });
  }

  // Guard precedence: --guard flag, then NULLCONE_GUARD, then the default.
  const auto apply_guard = [&] {
    if (guard_opt->count() > 0) {
      nc_set_guard_limit(session, opt.guard);
      return;
    }
    if (const char* env = std::getenv("NULLCONE_GUARD")) {
      char* end = nullptr;
      const unsigned long long v = std::strtoull(env, &end, 10);
      if (end && *end == '\0' && end != env) nc_set_guard_limit(session, v);
    }
  };

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    nc_session_destroy(session);
    return code == 0 ? 0 : 2;
  }

  apply_guard();
  if (action) action();
  nc_session_destroy(session);
  return exit_code;
}
