#include "cli.hpp"

#include <algorithm>   // for reverse, sort
#include <filesystem>  // for path, create_directories
#include <fstream>     // for ofstream
#include <functional>  // for function
#include <iomanip>     // for setw
#include <ostream>     // for ostream

#include "CLI11.hpp"
#include "json.hpp"

#include "assemblies/assembly.hpp"
#include "assemblies/census.hpp"
#include "assemblies/constructions.hpp"
#include "assemblies/errors.hpp"
#include "assemblies/format.hpp"
#include "assemblies/morphisms.hpp"
#include "assemblies/substructures.hpp"

namespace assemblies::cli {

  namespace {

    using json = nlohmann::ordered_json;

    constexpr char const* tick  = "✓";
    constexpr char const* cross = "✗";

    struct Globals {
      std::size_t cap_order = 0;  // 0 keeps the library defaults
      std::size_t cap_maps  = 0;

      Caps caps() const {
        Caps c;
        if (cap_order != 0) {
          c.power_order = c.iso_order = cap_order;
        }
        return c;
      }
      WitnessOptions witness() const {
        WitnessOptions w;
        if (cap_order != 0) {
          w.order_cap = cap_order;
        }
        return w;
      }
      HomSearchOptions hom() const {
        HomSearchOptions h;
        if (cap_maps != 0) {
          h.node_cap = cap_maps;
        }
        return h;
      }
    };

    // Splits text into element names separated by `sep`, trying longer
    // names first since names may themselves contain the separator.
    bool split_names(SemigroupTable const&     t,
                     std::string_view          text,
                     std::string_view          sep,
                     std::vector<ElementId>&   out) {
      if (text.empty()) {
        return true;
      }
      std::vector<ElementId> candidates;
      for (ElementId x = 0; x < t.order(); ++x) {
        if (text.starts_with(t.name(x))) {
          candidates.push_back(x);
        }
      }
      std::sort(candidates.begin(), candidates.end(), [&](ElementId a, ElementId b) {
        return t.name(a).size() > t.name(b).size();
      });
      for (auto x : candidates) {
        std::string_view rest = text.substr(t.name(x).size());
        if (!rest.empty()) {
          if (!rest.starts_with(sep) || rest.size() == sep.size()) {
            continue;
          }
          rest.remove_prefix(sep.size());
        }
        out.push_back(x);
        if (split_names(t, rest, sep, out)) {
          return true;
        }
        out.pop_back();
      }
      return false;
    }

    std::vector<ElementId> parse_names(SemigroupTable const& t, std::string const& text) {
      std::vector<ElementId> out;
      if (text.empty() || !split_names(t, text, ",", out)) {
        throw ParseError(ParseErrorCategory::unknown_name,
                         0,
                         0,
                         "cannot read '" + text + "' as comma-separated element names");
      }
      return out;
    }

    bool split_pairs(SemigroupTable const& s,
                     SemigroupTable const& t,
                     std::string_view      text,
                     ElementMap&           map) {
      if (text.empty()) {
        return true;
      }
      for (ElementId x = 0; x < s.order(); ++x) {
        std::string const head = s.name(x) + "->";
        if (!text.starts_with(head)) {
          continue;
        }
        std::string_view const rest = text.substr(head.size());
        for (ElementId y = 0; y < t.order(); ++y) {
          if (!rest.starts_with(t.name(y))) {
            continue;
          }
          std::string_view tail = rest.substr(t.name(y).size());
          if (!tail.empty()) {
            if (!tail.starts_with(",") || tail.size() == 1) {
              continue;
            }
            tail.remove_prefix(1);
          }
          if (map[x] != static_cast<ElementId>(-1) && map[x] != y) {
            continue;
          }
          ElementId const saved = map[x];
          map[x]                = y;
          if (split_pairs(s, t, tail, map)) {
            return true;
          }
          map[x] = saved;
        }
      }
      return false;
    }

    ElementMap parse_map(SemigroupTable const& s, SemigroupTable const& t, std::string const& text) {
      ElementMap map(s.order(), static_cast<ElementId>(-1));
      if (!split_pairs(s, t, text, map)) {
        throw ParseError(ParseErrorCategory::unknown_name,
                         0,
                         0,
                         "cannot read '" + text + "' as name->name pairs");
      }
      for (ElementId x = 0; x < s.order(); ++x) {
        if (map[x] == static_cast<ElementId>(-1)) {
          throw ParseError(ParseErrorCategory::wrong_arity,
                           0,
                           0,
                           "the map gives no image for " + s.name(x));
        }
      }
      return map;
    }

    std::string pair_text(SemigroupTable const& t, ElementPair p) {
      return "(" + t.name(p.first) + "," + t.name(p.second) + ")";
    }

    std::string map_text(SemigroupTable const& s, SemigroupTable const& t, ElementMap const& m) {
      std::string out;
      for (ElementId x = 0; x < s.order(); ++x) {
        out += (x == 0 ? "" : ",") + s.name(x) + "->" + t.name(m[x]);
      }
      return out;
    }

    json names_json(SemigroupTable const& t, Subset const& b) {
      json out = json::array();
      for (auto x : b) {
        out.push_back(t.name(x));
      }
      return out;
    }

    char const* status_text(AxiomStatus s) {
      switch (s) {
        case AxiomStatus::holds:
          return "holds";
        case AxiomStatus::fails:
          return "fails";
        case AxiomStatus::not_applicable:
          return "not_applicable";
      }
      return "not_applicable";
    }

    char const* mark(AxiomStatus s) {
      return s == AxiomStatus::holds ? tick : s == AxiomStatus::fails ? cross : "-";
    }

    ////////////////////////////////////////////////////////////////////////
    // analyze
    ////////////////////////////////////////////////////////////////////////

    json analysis_json(AssemblyAnalysis const& a, TableKind kind) {
      SemigroupTable const& t = a.subject;
      json                  j;
      j["schema"] = 1;
      j["kind"]   = to_string(kind);
      j["order"]  = t.order();

      auto axiom = [&](auto const& r) {
        json x;
        x["status"] = status_text(r.status);
        x["holds"]  = r.holds();
        if (r.witness) {
          if constexpr (std::is_same_v<std::decay_t<decltype(*r.witness)>, ElementPair>) {
            x["witness"] = json::array({t.name(r.witness->first), t.name(r.witness->second)});
          } else {
            x["witness"] = t.name(*r.witness);
          }
        }
        return x;
      };
      j["axioms"] = {{"A1", axiom(a.a1)}, {"A2", axiom(a.a2)}, {"A3", axiom(a.a3)}};

      auto element_map = [&](std::vector<ElementId> const& m) {
        if (m.empty()) {
          return json(nullptr);
        }
        json out = json::object();
        for (ElementId x = 0; x < t.order(); ++x) {
          out[t.name(x)] = t.name(m[x]);
        }
        return out;
      };
      j["e_map"]       = element_map(a.e_map);
      j["s_map"]       = element_map(a.s_map);
      j["idempotents"] = names_json(t, a.idempotents);

      json blocks = json::array();
      for (auto const& b : a.clifford) {
        blocks.push_back({{"identity", t.name(b.identity)}, {"members", names_json(t, b.members)}});
      }
      j["clifford_blocks"] = blocks;
      j["strong"]          = axiom(a.strong);

      json order;
      order["holds"] = a.idempotent_order.holds();
      if (a.idempotent_order.incomparable) {
        order["witness"] = json::array({t.name(a.idempotent_order.incomparable->first),
                                        t.name(a.idempotent_order.incomparable->second)});
      }
      j["idempotent_order_total"] = order;
      j["semilattice_of_groups"]  = a.semilattice_of_groups;
      return j;
    }

    void analysis_text(AssemblyAnalysis const& a, TableKind kind, std::ostream& out) {
      SemigroupTable const& t = a.subject;
      out << to_string(kind) << " of order " << t.order() << '\n';

      out << "A1 " << mark(a.a1.status) << " A2 " << mark(a.a2.status) << " A3 "
          << mark(a.a3.status);
      if (a.a1.witness) {
        out << " witness " << t.name(*a.a1.witness);
      } else if (a.a2.witness) {
        out << " witness " << t.name(*a.a2.witness);
      } else if (a.a3.witness) {
        out << " witness " << pair_text(t, *a.a3.witness);
      }
      out << '\n';

      if (a.a1.witness) {
        ElementId const x = *a.a1.witness;
        out << "  " << t.name(x) << " has no local identity; idempotent candidates ";
        out << format_subset(t, Subset(a.a1_candidates)) << '\n';
      }
      if (a.a3.witness) {
        auto [x, y] = *a.a3.witness;
        out << "  e(" << t.name(x) << "*" << t.name(y) << ") = " << t.name(a.e(t(x, y)))
            << ", e(" << t.name(x) << ")*e(" << t.name(y)
            << ") = " << t.name(t(a.e(x), a.e(y))) << '\n';
      }

      out << "idempotents: " << format_subset(t, a.idempotents) << '\n';
      if (!a.e_map.empty()) {
        out << "e:";
        for (ElementId x = 0; x < t.order(); ++x) {
          out << ' ' << t.name(x) << "->" << t.name(a.e_map[x]);
        }
        out << '\n';
      }
      if (!a.s_map.empty()) {
        out << "s:";
        for (ElementId x = 0; x < t.order(); ++x) {
          out << ' ' << t.name(x) << "->" << t.name(a.s_map[x]);
        }
        out << '\n';
      }
      if (!a.clifford.empty()) {
        out << "clifford blocks:\n";
        for (auto const& b : a.clifford) {
          out << "  S_" << t.name(b.identity) << " = " << format_subset(t, b.members) << '\n';
        }
      }
      out << "assembly: " << (a.is_assembly() ? "yes" : "no") << '\n';
      if (a.is_assembly()) {
        out << "strong: " << (a.strong.holds() ? "yes" : "no");
        if (a.strong.witness) {
          out << ", witness " << pair_text(t, *a.strong.witness);
        }
        out << '\n';
      }
      out << "idempotents commute: " << (a.idempotents_commute.holds ? "yes" : "no") << '\n';
      out << "idempotent order total: " << (a.idempotent_order.holds() ? "yes" : "no");
      if (a.idempotent_order.incomparable) {
        out << ", incomparable " << pair_text(t, *a.idempotent_order.incomparable);
      }
      out << '\n';
      out << "semilattice of groups: " << (a.semilattice_of_groups ? "yes" : "no") << '\n';
    }

    ////////////////////////////////////////////////////////////////////////
    // construct
    ////////////////////////////////////////////////////////////////////////

    std::size_t parse_count(std::string const& text) {
      std::size_t pos = 0;
      unsigned long n = 0;
      try {
        n = std::stoul(text, &pos);
      } catch (std::exception const&) {
        pos = 0;
      }
      if (pos != text.size() || n == 0) {
        throw CLI::ValidationError("expected a positive integer, got '" + text + "'");
      }
      return n;
    }

    // Rows of the sandwich matrix separated by ';', entries by ','.
    std::vector<std::vector<ElementId>> parse_matrix(GroupTable const& g, std::string const& text) {
      std::vector<std::vector<ElementId>> rows;
      std::size_t                         start = 0;
      while (true) {
        std::size_t const end = text.find(';', start);
        rows.push_back(parse_names(g.base(), text.substr(start, end - start)));
        if (end == std::string::npos) {
          break;
        }
        start = end + 1;
      }
      for (auto const& r : rows) {
        if (r.size() != rows.front().size()) {
          throw ParseError(ParseErrorCategory::wrong_arity, 0, 0, "sandwich rows differ in length");
        }
      }
      return rows;
    }

    struct Built {
      SemigroupTable table;
      TableKind      kind = TableKind::semigroup;
    };

    Built construct(std::string const&              kind,
                    std::vector<std::string> const& a,
                    Globals const&                  globals) {
      auto need = [&](std::size_t k) {
        if (a.size() != k) {
          throw CLI::ValidationError("construct " + kind + " takes " + std::to_string(k)
                                     + " argument(s)");
        }
      };
      if (kind == "cyclic") {
        need(1);
        return {cyclic_group(parse_count(a[0])).base(), TableKind::group};
      }
      if (kind == "with-zero") {
        need(1);
        return {with_zero(read_table_file(a[0]))};
      }
      if (kind == "left-zero") {
        need(1);
        return {left_zero_band(parse_count(a[0]))};
      }
      if (kind == "right-zero") {
        need(1);
        return {right_zero_band(parse_count(a[0]))};
      }
      if (kind == "chain") {
        need(1);
        return {chain_assembly(parse_count(a[0]))};
      }
      if (kind == "product") {
        need(2);
        TableKind k1 = TableKind::semigroup, k2 = TableKind::semigroup;
        auto      s  = read_table_file(a[0], &k1);
        auto      t  = read_table_file(a[1], &k2);
        auto const kind_out
            = k1 == TableKind::group && k2 == TableKind::group ? TableKind::group : TableKind::semigroup;
        return {direct_product(s, t, globals.caps().product_order), kind_out};
      }
      if (kind == "power") {
        need(1);
        return {power_semigroup(read_table_file(a[0]), globals.caps().power_order)};
      }
      if (kind == "rees") {
        need(2);
        auto g        = load_group(a[0]);
        auto sandwich = parse_matrix(g, a[1]);
        std::size_t const rows = sandwich.front().size(), cols = sandwich.size();
        return {rees_matrix(ReesSpec{std::move(g), rows, cols, std::move(sandwich)})};
      }
      if (kind == "rees-paper") {
        need(0);
        return {rees_paper()};
      }
      if (kind == "coset-assembly") {
        need(1);
        return {coset_assembly(load_group(a[0]))};
      }
      if (kind == "semilattice-group") {
        need(2);
        return {semilattice_times_group(read_table_file(a[0]), load_group(a[1]))};
      }
      throw CLI::ValidationError("unknown construction '" + kind + "'");
    }

    ////////////////////////////////////////////////////////////////////////
    // hom
    ////////////////////////////////////////////////////////////////////////

    void hom_text(AssemblyAnalysis const& s,
                  AssemblyAnalysis const& t,
                  HomAnalysis const&      h,
                  std::ostream&           out) {
      SemigroupTable const& S = s.subject;
      SemigroupTable const& T = t.subject;
      out << map_text(S, T, h.map) << '\n';
      if (!h.verdict) {
        auto [x, y] = *h.verdict.witness;
        out << "  not a homomorphism, witness " << pair_text(S, {x, y}) << ": phi("
            << S.name(x) << "*" << S.name(y) << ") = " << T.name(h.map[S(x, y)])
            << " but phi(" << S.name(x) << ")*phi(" << S.name(y)
            << ") = " << T.name(T(h.map[x], h.map[y])) << '\n';
        return;
      }
      out << "  homomorphism\n";
      if (h.kernel) {
        out << "  kernel: " << format_subset(S, *h.kernel) << '\n';
      }
      if (h.image) {
        out << "  image: " << format_subset(T, *h.image) << '\n';
      }
      if (h.injectivity) {
        out << "  injective: " << (h.injectivity->literal ? "yes" : "no")
            << "; kernel = E: " << (h.injectivity->kernel_is_e ? "yes" : "no");
        if (!h.injectivity->agree()) {
          out << "  [kernel criterion disagrees]";
        }
        out << '\n';
      }
      if (h.components) {
        for (auto const& c : h.components->components) {
          out << "  component " << S.name(c.source_identity) << " -> "
              << T.name(c.target_identity) << ": " << format_subset(S, c.domain) << " -> "
              << format_subset(T, c.image) << (c.injective ? ", injective" : "")
              << (c.onto ? ", onto" : "") << '\n';
        }
        if (!h.components->injective_clause_holds()) {
          out << "  [components all injective: "
              << (h.components->all_components_injective ? "yes" : "no")
              << ", but the map is " << (h.components->injective ? "" : "not ")
              << "injective]\n";
        }
      }
    }

    ////////////////////////////////////////////////////////////////////////
    // census
    ////////////////////////////////////////////////////////////////////////

    void write_summary(CensusSummary const& s, std::ostream& out) {
      out << "order " << s.order << ": " << s.total << " semigroups\n";
      for (auto const& [key, count] : s.counts) {
        out << "  " << std::left << std::setw(24) << key << ' ' << count << '\n';
      }
    }

    ////////////////////////////////////////////////////////////////////////

    int dispatch(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
      CLI::App app{"Finite semigroup and assembly analysis", "assemblies"};
      app.require_subcommand(1);
      Globals globals;
      app.add_option("--cap-order", globals.cap_order, "Order cap for exponential searches");
      app.add_option("--cap-maps", globals.cap_maps, "Node cap for homomorphism search");

      std::function<int()> action;

      auto* validate = app.add_subcommand("validate", "Check a table for associativity");
      std::string validate_file;
      validate->add_option("FILE", validate_file)->required();
      validate->callback([&] {
        action = [&] {
          read_table_file(validate_file);
          out << validate_file << ": associative\n";
          return ok;
        };
      });

      auto* analyze = app.add_subcommand("analyze", "Check the assembly axioms");
      std::string analyze_file, analyze_format = "text", preset;
      analyze->add_option("FILE", analyze_file);
      analyze->add_option("--preset", preset, "Built-in table instead of FILE")
          ->check(CLI::IsMember({"rees-paper"}));
      analyze->add_option("--format", analyze_format)->check(CLI::IsMember({"text", "json"}));
      analyze->callback([&] {
        action = [&] {
          if (analyze_file.empty() == preset.empty()) {
            throw CLI::ValidationError("give exactly one of FILE and --preset");
          }
          TableKind      kind = TableKind::semigroup;
          SemigroupTable t    = preset.empty() ? read_table_file(analyze_file, &kind) : rees_paper();
          auto const     a    = check_axioms(t);
          if (analyze_format == "json") {
            out << analysis_json(a, kind).dump(2) << '\n';
          } else {
            analysis_text(a, kind, out);
          }
          return ok;
        };
      });

      auto* construct_cmd = app.add_subcommand("construct", "Build a table");
      std::string              construct_kind, construct_out;
      std::vector<std::string> construct_args;
      construct_cmd->add_option("KIND", construct_kind)->required();
      construct_cmd->add_option("ARGS", construct_args);
      construct_cmd->add_option("-o,--output", construct_out, "Output file (default stdout)");
      construct_cmd->callback([&] {
        action = [&] {
          auto built = construct(construct_kind, construct_args, globals);
          if (construct_out.empty()) {
            out << render_table(built.table, built.kind);
          } else {
            write_table_file(construct_out, built.table, built.kind);
          }
          return ok;
        };
      });

      auto* hom = app.add_subcommand("hom", "Check or enumerate homomorphisms");
      std::string hom_src, hom_dst, hom_map;
      bool        hom_all = false, hom_count = false;
      hom->add_option("SRC", hom_src)->required();
      hom->add_option("DST", hom_dst)->required();
      auto* map_opt   = hom->add_option("--map", hom_map, "name->name pairs, comma-separated");
      auto* all_opt   = hom->add_flag("--all", hom_all, "List every homomorphism");
      auto* count_opt = hom->add_flag("--count", hom_count, "Count homomorphisms");
      map_opt->excludes(all_opt)->excludes(count_opt);
      all_opt->excludes(count_opt);
      hom->callback([&] {
        action = [&] {
          auto const s = check_axioms(read_table_file(hom_src));
          auto const t = check_axioms(read_table_file(hom_dst));
          if (!hom_map.empty()) {
            auto const h = analyze_hom(s, t, parse_map(s.subject, t.subject, hom_map));
            hom_text(s, t, h, out);
            if (h.injectivity && !h.injectivity->agree()) {
              err << "inconsistency: injectivity and the kernel criterion disagree\n";
              return inconsistency;
            }
            return ok;
          }
          if (!hom_all && !hom_count) {
            throw CLI::ValidationError("give one of --map, --all, --count");
          }
          auto const homs = enumerate_homomorphisms(s, t, globals.hom());
          if (hom_count) {
            out << homs.size() << '\n';
            return ok;
          }
          bool disagree = false;
          for (auto const& m : homs) {
            auto const h = analyze_hom(s, t, m);
            hom_text(s, t, h, out);
            disagree = disagree || (h.injectivity && !h.injectivity->agree());
          }
          out << homs.size() << " homomorphism(s)\n";
          if (disagree) {
            err << "inconsistency: injectivity and the kernel criterion disagree\n";
            return inconsistency;
          }
          return ok;
        };
      });

      auto* sub = app.add_subcommand("sub", "Subassembly criterion");
      std::string sub_file, sub_subset;
      sub->add_option("FILE", sub_file)->required();
      sub->add_option("--subset", sub_subset, "Comma-separated element names")->required();
      sub->callback([&] {
        action = [&] {
          auto const      a = check_axioms(read_table_file(sub_file));
          Subset const    b(parse_names(a.subject, sub_subset));
          auto const      v = is_subassembly(a, b);
          auto const&     t = a.subject;
          out << format_subset(t, b);
          if (v) {
            out << " is a subassembly\n";
          } else {
            auto [x, y] = *v.witness;
            out << " is not a subassembly, witness " << pair_text(t, {x, y}) << ": "
                << t.name(x) << "*s(" << t.name(y) << ") = " << t.name(t(x, a.s(y)))
                << '\n';
          }
          return ok;
        };
      });

      auto* centre_cmd = app.add_subcommand("centre", "Elements commuting with everything");
      std::string centre_file;
      centre_cmd->add_option("FILE", centre_file)->required();
      centre_cmd->callback([&] {
        action = [&] {
          auto const a = check_axioms(read_table_file(centre_file));
          auto const r = centre_report(a);
          out << "centre: " << format_subset(a.subject, r.members) << '\n';
          if (r.certificate) {
            out << "  a subassembly\n";
          }
          if (r.empty_edge_case) {
            out << "  empty centre of an assembly\n";
          }
          return ok;
        };
      });

      auto* iso = app.add_subcommand("iso", "Find an isomorphism");
      std::string iso_a, iso_b;
      iso->add_option("FILE1", iso_a)->required();
      iso->add_option("FILE2", iso_b)->required();
      iso->callback([&] {
        action = [&] {
          auto const s = read_table_file(iso_a);
          auto const t = read_table_file(iso_b);
          auto const f = are_isomorphic(s, t, globals.caps().iso_order);
          if (f) {
            out << map_text(s, t, *f) << '\n';
          } else {
            out << "not isomorphic\n";
          }
          return ok;
        };
      });

      auto* census = app.add_subcommand("census", "Enumerate small semigroups");
      std::size_t max_order = 0;
      unsigned    threads   = 1;
      bool        classify_flag = false, long_run = false;
      std::string emit_dir;
      census->add_option("--max-order", max_order)->required()->check(CLI::Range(1, 5));
      census->add_flag("--classify", classify_flag, "Check the population equivalences");
      census->add_option("--emit", emit_dir, "Write each table to DIR");
      census->add_flag("--long", long_run, "Allow order 5");
      census->add_option("--threads", threads)->check(CLI::Range(1u, 256u));
      census->callback([&] {
        action = [&] {
          CensusOptions opts;
          opts.allow_order_5 = long_run;
          opts.threads       = threads;
          opts.witness       = globals.witness();
          std::ofstream summary_file;
          if (!emit_dir.empty()) {
            std::filesystem::create_directories(emit_dir);
            summary_file.open(std::filesystem::path(emit_dir) / "summary.txt");
          }
          for (std::size_t n = 1; n <= max_order; ++n) {
            auto const records = enumerate_semigroups(n, opts);
            auto const summary = classify_flag ? classify_census(records) : summarize_census(records);
            write_summary(summary, out);
            if (!emit_dir.empty()) {
              write_summary(summary, summary_file);
              auto const dir = std::filesystem::path(emit_dir) / ("order-" + std::to_string(n));
              std::filesystem::create_directories(dir);
              for (std::size_t i = 0; i < records.size(); ++i) {
                std::ostringstream name;
                name << std::setw(3) << std::setfill('0') << i << ".sgt";
                write_table_file(dir / name.str(), records[i].canonical_table);
              }
            }
          }
          if (classify_flag) {
            out << "all equivalences hold\n";
          }
          return ok;
        };
      });

      std::vector<std::string> reversed(args.rbegin(), args.rend());
      try {
        app.parse(reversed);
      } catch (CLI::ParseError const& e) {
        int const code = app.exit(e, out, err);
        return code == 0 ? ok : usage;
      }
      return action();
    }

  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    try {
      return dispatch(args, out, err);
    } catch (CLI::Error const& e) {
      err << "usage error: " << e.what() << '\n';
      return usage;
    } catch (ParseError const& e) {
      err << "parse error: " << e.what() << '\n';
      return invalid;
    } catch (AssociativityError const& e) {
      err << "validation error: " << e.what() << '\n';
      return invalid;
    } catch (CapExceeded const& e) {
      err << "cap exceeded: " << e.what() << '\n';
      return cap_exceeded;
    } catch (InconsistencyError const& e) {
      err << "inconsistency: " << e.what() << '\n';
      return inconsistency;
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
      return invalid;
    } catch (std::filesystem::filesystem_error const& e) {
      err << "error: " << e.what() << '\n';
      return invalid;
    }
  }

}  // namespace assemblies::cli
