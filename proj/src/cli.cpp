#include "translim/cli.hpp"

#include <algorithm>
#include <cctype>
#include <iomanip>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "rng_util.hpp"
#include "translim/bonding.hpp"
#include "translim/ordinal.hpp"
#include "translim/point.hpp"
#include "translim/thread.hpp"

namespace translim::cli {

namespace {

using nlohmann::json;

constexpr const char* kDefaultLawPool = "0,1,2,3,w,w+1,w*2,w^2";

constexpr const char* kNoThreadNote =
    "No full thread exists over [0, w1): a thread would pick one point per index,\n"
    "and every point's order strictly exceeds its index, so the set of orders\n"
    "would be cofinal in [0, w1). But order is a function of length, and lengths\n"
    "are natural numbers, so at most countably many orders could occur; [0, w1)\n"
    "has uncountable cofinality and no maximal element, so neither finitely nor\n"
    "countably many orders can be cofinal in it. Hence the inverse limit of this\n"
    "system is empty.";

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

// "0..5" (inclusive, naturals) or a comma list of ordinal expressions.
std::vector<Ordinal> parse_pool_spec(const std::string& spec) {
  const std::string text = trim(spec);
  if (text.empty()) throw ParseError("empty pool specification", 0);

  const std::size_t dots = text.find("..");
  if (dots != std::string::npos) {
    const std::string lo = trim(text.substr(0, dots));
    const std::string hi = trim(text.substr(dots + 2));
    auto all_digits = [](const std::string& s) {
      return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c));
      });
    };
    if (!all_digits(lo) || !all_digits(hi)) {
      throw ParseError("pool range bounds must be naturals, as in 0..5", 0);
    }
    const Nat lo_n(lo, 10);
    const Nat hi_n(hi, 10);
    if (lo_n > hi_n) throw ParseError("pool range is empty", 0);
    if (hi_n - lo_n > 10000) throw ParseError("pool range too large", 0);
    std::vector<Ordinal> pool;
    for (Nat v = lo_n; v <= hi_n; ++v) pool.push_back(from_natural(v));
    return pool;
  }

  std::vector<Ordinal> pool;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    const std::string item = text.substr(start, comma - start);
    try {
      pool.push_back(parse_ordinal(item));
    } catch (const ParseError& e) {
      throw ParseError("in pool element \"" + trim(item) + "\": " + e.what(),
                       start + e.position());
    }
    start = comma + 1;
  }
  return pool;
}

std::string comparison_name(Comparison c) {
  switch (c) {
    case Comparison::LT: return "LT";
    case Comparison::EQ: return "EQ";
    case Comparison::GT: return "GT";
  }
  return "?";
}

std::string defect_name(PointDefect d) {
  switch (d) {
    case PointDefect::empty: return "empty";
    case PointDefect::odd_length: return "odd_length";
    case PointDefect::condition_i: return "condition_i";
    case PointDefect::condition_ii: return "condition_ii";
    case PointDefect::condition_iii_pair: return "condition_iii_pair";
    case PointDefect::condition_iii_chain: return "condition_iii_chain";
  }
  return "?";
}

void render_check_table(const std::vector<CheckResult>& checks,
                        std::ostream& out) {
  out << std::left << std::setw(28) << "check" << std::right << std::setw(10)
      << "cases" << std::setw(10) << "failures" << "\n";
  for (const CheckResult& check : checks) {
    out << std::left << std::setw(28) << check.name << std::right
        << std::setw(10) << check.cases << std::setw(10) << check.failures
        << "\n";
  }
  for (const CheckResult& check : checks) {
    if (!check.passed()) {
      out << "counterexample (" << check.name
          << "): " << check.first_counterexample << "\n";
    }
  }
}

json checks_to_json(const std::vector<CheckResult>& checks) {
  json rows = json::array();
  for (const CheckResult& check : checks) {
    json row{{"name", check.name},
             {"cases", check.cases},
             {"failures", check.failures}};
    if (!check.passed()) row["counterexample"] = check.first_counterexample;
    rows.push_back(row);
  }
  return rows;
}

void emit(std::ostream& out, bool as_json, const json& payload,
          const std::string& text) {
  if (as_json) {
    out << payload.dump(2) << "\n";
  } else {
    out << text;
  }
}

// ---------------------------------------------------------------------------
// Subcommand handlers.  Each returns the process exit code.

int handle_ord(const std::string& verb, const std::string& lhs,
               const std::string& rhs, bool as_json, std::ostream& out) {
  if (verb == "eval") {
    const std::string result = format_ordinal(parse_ordinal(lhs));
    emit(out, as_json, json{{"result", result}}, result + "\n");
    return 0;
  }
  if (verb == "compare") {
    const std::string result =
        comparison_name(compare(parse_ordinal(lhs), parse_ordinal(rhs)));
    emit(out, as_json, json{{"result", result}}, result + "\n");
    return 0;
  }
  const Ordinal a = parse_ordinal(lhs);
  const Ordinal b = parse_ordinal(rhs);
  const std::string result =
      format_ordinal(verb == "add" ? add(a, b) : multiply(a, b));
  emit(out, as_json, json{{"result", result}}, result + "\n");
  return 0;
}

int handle_point_validate(const std::string& text, bool as_json,
                          std::ostream& out) {
  const std::vector<Ordinal> entries = parse_point_entries(text);
  try {
    const Point p = Point::make(entries);
    std::ostringstream human;
    human << "valid\n"
          << "index = " << p.index() << "\n"
          << "order = " << p.order() << "\n"
          << "length = " << p.length() << "\n";
    emit(out, as_json,
         json{{"valid", true},
              {"index", p.index().str()},
              {"order", p.order().str()},
              {"length", p.length()}},
         human.str());
    return 0;
  } catch (const PointError& e) {
    emit(out, as_json,
         json{{"valid", false},
              {"defect", defect_name(e.defect())},
              {"position", e.position()},
              {"message", e.what()}},
         std::string("invalid: ") + e.what() + "\n");
    return 1;
  }
}

int handle_point_info(const std::string& text, bool as_json,
                      std::ostream& out) {
  const Point p = parse_point(text);
  std::ostringstream human;
  human << "index = " << p.index() << "\n"
        << "order = " << p.order() << "\n"
        << "length = " << p.length() << "\n";
  emit(out, as_json,
       json{{"index", p.index().str()},
            {"order", p.order().str()},
            {"length", p.length()}},
       human.str());
  return 0;
}

int handle_schemas(const std::string& k_text, bool as_json, std::ostream& out) {
  const Ordinal k = parse_ordinal(k_text);
  const std::vector<Schema> schemas = enumerate_schemas(k);
  if (as_json) {
    json rows = json::array();
    for (const Schema& s : schemas) {
      json chain = json::array();
      for (const Ordinal& c : s.chain()) chain.push_back(c.str());
      rows.push_back(json{{"chain", chain}, {"form", s.form()}});
    }
    out << json{{"k", k.finite_value().get_ui()},
                {"count", schemas.size()},
                {"schemas", rows}}
               .dump(2)
        << "\n";
  } else {
    for (const Schema& s : schemas) out << s.form() << "\n";
    out << "count = " << schemas.size() << " = 2^" << k << "\n";
  }
  return 0;
}

int handle_map_apply(const std::string& from, const std::string& to,
                     const std::string& point_text, bool as_json,
                     std::ostream& out) {
  const Point x = parse_point(point_text);
  const Point image =
      project(MapSpec(parse_ordinal(from), parse_ordinal(to)), x);
  emit(out, as_json, json{{"result", image.str()}}, image.str() + "\n");
  return 0;
}

int handle_map_section(const std::string& from, const std::string& to,
                       const std::optional<std::string>& gamma_text,
                       const std::string& point_text, bool as_json,
                       std::ostream& out) {
  const Point x = parse_point(point_text);
  std::optional<Ordinal> gamma;
  if (gamma_text) gamma = parse_ordinal(*gamma_text);
  const Point lifted =
      section(parse_ordinal(from), parse_ordinal(to), x, gamma);
  emit(out, as_json, json{{"result", lifted.str()}}, lifted.str() + "\n");
  return 0;
}

int handle_laws(const std::string& pool_spec, std::uint64_t samples,
                std::uint64_t seed, bool as_json, std::ostream& out) {
  const LawSuiteReport report =
      run_law_suite(parse_pool_spec(pool_spec), samples, seed);
  if (as_json) {
    out << json{{"checks", checks_to_json(report.checks)},
                {"passed", report.passed()}}
               .dump(2)
        << "\n";
  } else {
    render_check_table(report.checks, out);
    out << (report.passed() ? "all laws hold\n" : "LAW FAILURES\n");
  }
  return report.passed() ? 0 : 1;
}

int handle_oracle(const std::string& pool_spec, bool as_json,
                  std::ostream& out) {
  const OracleReport report = exhaustive_oracle(parse_pool_spec(pool_spec));
  if (as_json) {
    out << json{{"points", report.point_count},
                {"recount", report.recount},
                {"checks", checks_to_json(report.checks)},
                {"passed", report.passed()}}
               .dump(2)
        << "\n";
  } else {
    out << "points enumerated: " << report.point_count
        << " (recount: " << report.recount << ")\n";
    render_check_table(report.checks, out);
    out << (report.passed() ? "all checks passed\n" : "CHECK FAILURES\n");
  }
  return report.passed() ? 0 : 1;
}

// The f^3_2 table over the eight shapes of X_3, as symbolic rows with
// A..D standing for the free even entries.
struct TableRow {
  const char* input;
  const char* expected;
};

constexpr TableRow kF32Table[] = {
    {"(3, A)", "(2, A)"},
    {"(0, A, 3, B)", "(0, A, 2, B)"},
    {"(1, A, 3, B)", "(1, A, 2, B)"},
    {"(2, A, 3, B)", "(2, A)"},
    {"(0, A, 1, B, 3, C)", "(0, A, 1, B, 2, C)"},
    {"(0, A, 2, B, 3, C)", "(0, A, 2, B)"},
    {"(1, A, 2, B, 3, C)", "(1, A, 2, B)"},
    {"(0, A, 1, B, 2, C, 3, D)", "(0, A, 1, B, 2, C)"},
};

std::string substitute_placeholders(const char* pattern,
                                    const std::vector<std::string>& values) {
  std::string out;
  for (const char* p = pattern; *p; ++p) {
    if (*p >= 'A' && *p <= 'D') {
      out += values[static_cast<std::size_t>(*p - 'A')];
    } else {
      out += *p;
    }
  }
  return out;
}

int handle_demo_f32(bool transfinite, bool as_json, std::ostream& out) {
  const std::vector<std::string> values =
      transfinite ? std::vector<std::string>{"w", "w + 1", "w*2", "w^2"}
                  : std::vector<std::string>{"4", "5", "6", "7"};
  const MapSpec f32(from_natural(3), from_natural(2));

  json rows = json::array();
  std::ostringstream human;
  human << "f^3_2 : X_3 -> X_2\n";
  bool all_ok = true;
  for (const TableRow& row : kF32Table) {
    const Point input = parse_point(substitute_placeholders(row.input, values));
    const Point expected =
        parse_point(substitute_placeholders(row.expected, values));
    const Point actual = project(f32, input);
    const bool ok = actual == expected;
    all_ok = all_ok && ok;
    human << input << " -> " << actual << (ok ? "" : "  MISMATCH, expected " +
                                                         expected.str())
          << "\n";
    rows.push_back(json{{"input", input.str()},
                        {"output", actual.str()},
                        {"verified", ok}});
  }
  human << (all_ok ? "all 8 rows verified\n" : "TABLE MISMATCH\n");
  if (as_json) {
    out << json{{"rows", rows}, {"passed", all_ok}}.dump(2) << "\n";
  } else {
    out << human.str();
  }
  return all_ok ? 0 : 1;
}

int handle_demo_composition(bool as_json, std::ostream& out) {
  const Point x = parse_point("(0, 1, 1, 2, 3, 4, 5, 6, 6, 7)");
  const Point y = project(MapSpec(from_natural(6), from_natural(4)), x);
  const Point via = project(MapSpec(from_natural(4), from_natural(3)), y);
  const Point direct = project(MapSpec(from_natural(6), from_natural(3)), x);
  const Point expected = parse_point("(0, 1, 1, 2, 3, 4)");
  const bool ok = via == direct && direct == expected;

  std::ostringstream human;
  human << "x = " << x << "\n"
        << "f^6_4(x) = " << y << "\n"
        << "f^4_3(f^6_4(x)) = " << via << "\n"
        << "f^6_3(x) = " << direct << "\n"
        << (ok ? "composition holds: f^4_3 o f^6_4 = f^6_3\n"
               : "COMPOSITION MISMATCH\n");
  if (as_json) {
    out << json{{"x", x.str()},
                {"f6_4", y.str()},
                {"f4_3_of_f6_4", via.str()},
                {"f6_3", direct.str()},
                {"passed", ok}}
               .dump(2)
        << "\n";
  } else {
    out << human.str();
  }
  return ok ? 0 : 1;
}

int handle_demo_thread(unsigned long n, std::uint64_t seed, bool as_json,
                       std::ostream& out) {
  std::mt19937_64 rng(seed);
  Family family(std::map<Ordinal, Point>{
      {from_natural(0), Point::make({from_natural(0), from_natural(1)})}});
  Ordinal prev_order = from_natural(1);
  for (unsigned long k = 1; k <= n; ++k) {
    const Ordinal key = from_natural(k);
    // Keep the witness above both the new index and the previous order
    // so the profile's orders grow strictly.
    const Ordinal base = std::max(key, prev_order, [](const Ordinal& a,
                                                      const Ordinal& b) {
      return compare(a, b) == Comparison::LT;
    });
    const Ordinal gamma =
        add(base, from_natural(1 + detail::bounded(rng, 5)));
    family = extend_family(family, key, gamma);
    prev_order = gamma;
  }

  const std::vector<ProfileRow> rows = order_length_profile(family);
  bool order_above = true;
  for (const ProfileRow& row : rows) {
    order_above = order_above && compare(row.order, row.index) == Comparison::GT;
  }
  const bool lemma = check_order_function_of_length(family);
  const Ordinal& max_order = rows.back().order;
  bool max_dominates = true;
  for (const ProfileRow& row : rows) {
    max_dominates =
        max_dominates && compare(max_order, row.index) == Comparison::GT;
  }
  const bool ok = order_above && lemma && max_dominates;

  std::size_t key_w = 3, len_w = 6, ord_w = 5;
  for (const ProfileRow& row : rows) {
    key_w = std::max(key_w, row.index.str().size());
    len_w = std::max(len_w, std::to_string(row.length).size());
    ord_w = std::max(ord_w, row.order.str().size());
  }
  std::ostringstream human;
  human << std::left << std::setw(static_cast<int>(key_w) + 2) << "key"
        << std::setw(static_cast<int>(len_w) + 2) << "length"
        << std::setw(static_cast<int>(ord_w)) << "order" << "\n";
  for (const ProfileRow& row : rows) {
    human << std::left << std::setw(static_cast<int>(key_w) + 2)
          << row.index.str() << std::setw(static_cast<int>(len_w) + 2)
          << row.length << std::setw(static_cast<int>(ord_w))
          << row.order.str() << "\n";
  }
  human << "order exceeds index in every row: " << (order_above ? "yes" : "NO")
        << "\n"
        << "order is a function of length: " << (lemma ? "yes" : "NO") << "\n"
        << "max order " << max_order << " exceeds every index: "
        << (max_dominates ? "yes" : "NO") << "\n"
        << kNoThreadNote << "\n";

  if (as_json) {
    json jrows = json::array();
    for (const ProfileRow& row : rows) {
      jrows.push_back(json{{"key", row.index.str()},
                           {"length", row.length},
                           {"order", row.order.str()}});
    }
    out << json{{"rows", jrows},
                {"order_exceeds_index", order_above},
                {"order_function_of_length", lemma},
                {"max_order", max_order.str()},
                {"passed", ok},
                {"note", kNoThreadNote}}
               .dump(2)
        << "\n";
  } else {
    out << human.str();
  }
  return ok ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"inverse-system laboratory: ordinals in Cantor normal form, "
               "points, bonding maps, partial threads",
               "translim"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  auto subcommand = [](CLI::App* parent, const std::string& name,
                       const std::string& description) {
    CLI::App* sub = parent->add_subcommand(name, description);
    sub->fallthrough();
    return sub;
  };

  // ord
  CLI::App* ord = subcommand(&app, "ord", "ordinal arithmetic");
  ord->require_subcommand(1);
  std::string ord_lhs, ord_rhs;
  CLI::App* ord_eval = subcommand(ord, "eval", "parse and print canonically");
  ord_eval->add_option("EXPR", ord_lhs, "ordinal expression")->required();
  CLI::App* ord_compare = subcommand(ord, "compare", "LT, EQ or GT");
  ord_compare->add_option("EXPR", ord_lhs)->required();
  ord_compare->add_option("EXPR2", ord_rhs)->required();
  CLI::App* ord_add = subcommand(ord, "add", "ordinal sum");
  ord_add->add_option("EXPR", ord_lhs)->required();
  ord_add->add_option("EXPR2", ord_rhs)->required();
  CLI::App* ord_mul = subcommand(ord, "mul", "ordinal product");
  ord_mul->add_option("EXPR", ord_lhs)->required();
  ord_mul->add_option("EXPR2", ord_rhs)->required();

  // point
  CLI::App* point = subcommand(&app, "point", "point validation and a look inside");
  point->require_subcommand(1);
  std::string point_text;
  CLI::App* point_validate =
      subcommand(point, "validate", "check the three pointhood conditions");
  point_validate->add_option("POINT", point_text, "point like \"(0, 2, 1, 3)\"")
      ->required();
  CLI::App* point_info = subcommand(point, "info", "index, order and length");
  point_info->add_option("POINT", point_text)->required();

  // schemas
  std::string schemas_k;
  CLI::App* schemas =
      subcommand(&app, "schemas", "the structural shapes of X_k members");
  schemas->add_option("K", schemas_k, "finite index")->required();

  // map
  CLI::App* map = subcommand(&app, "map", "bonding maps and their sections");
  map->require_subcommand(1);
  std::string map_from, map_to, map_point;
  std::string map_gamma;
  CLI::App* map_apply = subcommand(map, "apply", "apply f^from_to to a point");
  map_apply->add_option("--from", map_from, "source index")->required();
  map_apply->add_option("--to", map_to, "target index")->required();
  map_apply->add_option("POINT", map_point)->required();
  CLI::App* map_section =
      subcommand(map, "section", "lift a point along f^to_from");
  map_section->add_option("--from", map_from, "index of the given point")
      ->required();
  map_section->add_option("--to", map_to, "index to lift into")->required();
  map_section->add_option("--gamma", map_gamma,
                          "witness entry, defaults to to-index + 1");
  map_section->add_option("POINT", map_point)->required();

  // laws
  std::string laws_pool = kDefaultLawPool;
  std::uint64_t laws_samples = 10000;
  std::uint64_t laws_seed = 0;
  CLI::App* laws = subcommand(&app, "laws", "seeded random law suite");
  laws->add_option("--samples", laws_samples, "cases per law (default 10000)");
  laws->add_option("--seed", laws_seed, "RNG seed (default 0)");
  laws->add_option("--pool", laws_pool,
                   "pool spec, \"0..5\" or comma list of ordinals");

  // oracle
  std::string oracle_pool;
  CLI::App* oracle =
      subcommand(&app, "oracle", "exhaustive checks over a finite pool");
  oracle->add_option("--pool", oracle_pool, "pool spec, e.g. 0..4")->required();

  // demo
  CLI::App* demo = subcommand(&app, "demo", "worked examples, verified");
  demo->require_subcommand(1);
  bool demo_transfinite = false;
  CLI::App* demo_f32 = subcommand(demo, "f32", "the f^3_2 table on all of X_3");
  demo_f32->add_flag("--transfinite", demo_transfinite,
                     "instantiate with w, w+1, w*2, w^2 instead of 4..7");
  CLI::App* demo_composition =
      subcommand(demo, "composition", "f^4_3 o f^6_4 = f^6_3 on a sample point");
  unsigned long thread_n = 10;
  std::uint64_t thread_seed = 0;
  CLI::App* demo_thread =
      subcommand(demo, "thread", "grow a compatible family and profile it");
  demo_thread->add_option("--n", thread_n, "top index (default 10)");
  demo_thread->add_option("--seed", thread_seed, "RNG seed (default 0)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    err << "run 'translim --help' for usage\n";
    return 2;
  }

  try {
    if (ord_eval->parsed()) return handle_ord("eval", ord_lhs, ord_rhs, as_json, out);
    if (ord_compare->parsed())
      return handle_ord("compare", ord_lhs, ord_rhs, as_json, out);
    if (ord_add->parsed()) return handle_ord("add", ord_lhs, ord_rhs, as_json, out);
    if (ord_mul->parsed()) return handle_ord("mul", ord_lhs, ord_rhs, as_json, out);
    if (point_validate->parsed())
      return handle_point_validate(point_text, as_json, out);
    if (point_info->parsed()) return handle_point_info(point_text, as_json, out);
    if (schemas->parsed()) return handle_schemas(schemas_k, as_json, out);
    if (map_apply->parsed())
      return handle_map_apply(map_from, map_to, map_point, as_json, out);
    if (map_section->parsed()) {
      std::optional<std::string> gamma;
      if (map_section->count("--gamma") > 0) gamma = map_gamma;
      return handle_map_section(map_from, map_to, gamma, map_point, as_json, out);
    }
    if (laws->parsed())
      return handle_laws(laws_pool, laws_samples, laws_seed, as_json, out);
    if (oracle->parsed()) return handle_oracle(oracle_pool, as_json, out);
    if (demo_f32->parsed()) return handle_demo_f32(demo_transfinite, as_json, out);
    if (demo_composition->parsed()) return handle_demo_composition(as_json, out);
    if (demo_thread->parsed())
      return handle_demo_thread(thread_n, thread_seed, as_json, out);
    err << "error: no subcommand selected\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const PointError& e) {
    if (as_json) {
      out << json{{"error", e.what()},
                  {"defect", defect_name(e.defect())},
                  {"position", e.position()}}
                 .dump(2)
          << "\n";
    } else {
      err << "error: invalid point: " << e.what() << "\n";
    }
    return 1;
  } catch (const std::exception& e) {
    if (as_json) {
      out << json{{"error", e.what()}}.dump(2) << "\n";
    } else {
      err << "error: " << e.what() << "\n";
    }
    return 1;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("translim");
  for (const std::string& arg : args) argv.push_back(arg.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace translim::cli
