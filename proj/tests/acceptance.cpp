// Acceptance run: one line per criterion, exit status 1 if any fails.

#include <algorithm>   // for all_of
#include <chrono>      // for steady_clock
#include <filesystem>  // for directory_iterator
#include <functional>  // for function
#include <iomanip>     // for setprecision
#include <iostream>    // for cout
#include <sstream>     // for ostringstream

#include "assemblies/assembly.hpp"
#include "assemblies/census.hpp"
#include "assemblies/constructions.hpp"
#include "assemblies/errors.hpp"
#include "assemblies/format.hpp"
#include "assemblies/morphisms.hpp"
#include "assemblies/substructures.hpp"
#include "cli.hpp"
#include "support.hpp"

using namespace assemblies;

namespace {

  struct Outcome {
    bool        pass = true;
    std::string detail;

    // Records the first failure only.
    void require(bool ok, std::string const& what) {
      if (!ok && pass) {
        pass   = false;
        detail = what;
      }
    }
  };

  using Check = std::function<Outcome()>;

  std::string name_of(SemigroupTable const& t, ElementPair p) {
    return "(" + t.name(p.first) + "," + t.name(p.second) + ")";
  }

  std::string table_text(SemigroupTable const& t) {
    std::string out;
    for (auto x : t.products()) {
      out += std::to_string(x);
    }
    return out;
  }

  Outcome rees_counterexample() {
    Outcome    o;
    auto const t = rees_paper();
    auto const a = check_axioms(t);
    o.require(t == support::load("rees-paper.sgt"), "preset differs from the matrix fixture");
    o.require(a.a1.holds() && a.a2.holds(), "A1 or A2 fails");
    o.require(a.a3.status == AxiomStatus::fails, "A3 holds");
    if (!o.pass) {
      return o;
    }
    auto const [x, y] = *a.a3.witness;
    ElementId const minus_a = *t.find("-A");
    o.require(name_of(t, {x, y}) == "(B,C)", "witness is " + name_of(t, {x, y}));
    o.require(t.name(a.e(t(x, y))) == "A", "e(B*C) is not A");
    o.require(t.name(t(a.e(x), a.e(y))) == "-A", "e(B)*e(C) is not -A");
    o.require(t.name(t(minus_a, minus_a)) == "A", "(-A)^2 is not A");
    o.detail = o.pass ? "A1 ok, A2 ok, A3 fails at (B,C); e(B*C) = A, e(B)*e(C) = -A, (-A)^2 = A"
                      : o.detail;
    return o;
  }

  Outcome coset_orders() {
    Outcome     o;
    std::string sizes;
    for (auto [p, n] : std::vector<std::pair<std::size_t, std::size_t>>{
             {2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {5, 1}}) {
      std::size_t pn = 1, sum = 1;
      for (std::size_t k = 0; k < n; ++k) {
        pn *= p;
        sum += pn;
      }
      auto const g   = cyclic_group(pn);
      auto const acg = coset_assembly(g);
      auto const a   = check_axioms(acg);
      auto const gn  = direct_product(g.base(), normal_subgroup_semilattice(g));
      std::string const label = "C" + std::to_string(pn);
      o.require(acg.order() == sum, label + " gives " + std::to_string(acg.order()));
      o.require(gn.order() == (n + 1) * pn, label + ": |G x n(G)| = " + std::to_string(gn.order()));
      o.require(a.is_assembly() && a.idempotents_commute.holds,
                label + ": not an assembly with commuting idempotents");
      sizes += (sizes.empty() ? "" : ", ") + std::to_string(acg.order()) + "/"
               + std::to_string(gn.order());
    }
    if (o.pass) {
      o.detail = "|A(G)|/|G x n(G)| = " + sizes;
    }
    return o;
  }

  std::vector<CensusRecord> const& census(std::size_t n) {
    return support::census(n);
  }

  Outcome census_band_of_groups() {
    Outcome                        o;
    std::vector<std::size_t> const expected = {1, 5, 24, 188};
    std::size_t                    assemblies = 0, total = 0;
    for (std::size_t n = 1; n <= 4; ++n) {
      auto const& records = census(n);
      o.require(records.size() == expected[n - 1],
                "order " + std::to_string(n) + " has " + std::to_string(records.size()));
      if (n <= 3) {
        o.require(naive_canonical_tables(n).size() == records.size(),
                  "naive scan disagrees at order " + std::to_string(n));
      }
      for (auto const& r : records) {
        ++total;
        assemblies += r.flags.is_assembly;
        o.require(r.flags.is_assembly == r.flags.has_band_of_groups_witness,
                  "discrepancy at " + table_text(r.canonical_table));
      }
    }
    if (o.pass) {
      o.detail = std::to_string(total) + " tables (1+5+24+188), " + std::to_string(assemblies)
                 + " assemblies, 0 discrepancies";
    }
    return o;
  }

  Outcome census_semilattice_of_groups() {
    Outcome     o;
    std::size_t count = 0;
    for (std::size_t n = 1; n <= 4; ++n) {
      for (auto const& r : census(n)) {
        auto const& f        = r.flags;
        bool const  commute  = f.is_assembly && f.idempotents_commute;
        bool const  central  = f.is_assembly && f.idempotents_central;
        count += commute;
        o.require(commute == central && commute == f.has_semilattice_witness,
                  "discrepancy at " + table_text(r.canonical_table));
      }
    }
    if (o.pass) {
      o.detail = std::to_string(count) + " semilattices of groups, 0 discrepancies";
    }
    return o;
  }

  Outcome census_clifford() {
    Outcome     o;
    std::size_t count = 0;
    for (std::size_t n = 1; n <= 4; ++n) {
      for (auto const& r : census(n)) {
        if (r.flags.is_union_of_groups && r.flags.idempotents_commute) {
          ++count;
          o.require(check_axioms(r.canonical_table).a3.holds(),
                    "A3 fails at " + table_text(r.canonical_table));
        }
      }
    }
    if (o.pass) {
      o.detail = std::to_string(count) + " unions of groups with commuting idempotents, all satisfy A3";
    }
    return o;
  }

  Outcome strong_and_order() {
    Outcome     o;
    std::size_t count = 0;
    for (std::size_t n = 1; n <= 4; ++n) {
      for (auto const& r : census(n)) {
        if (r.flags.is_assembly && r.flags.idempotents_commute) {
          ++count;
          o.require(r.flags.is_strong == r.flags.idempotent_order_total,
                    "discrepancy at " + table_text(r.canonical_table));
        }
      }
    }
    auto const lz = check_axioms(left_zero_band(2));
    o.require(is_strong(lz).holds, "left_zero_band(2) is not strong");
    o.require(!idempotent_order_total(lz).holds(), "left_zero_band(2) has a total idempotent order");
    if (o.pass) {
      o.detail = std::to_string(count)
                 + " assemblies with commuting idempotents agree; edge case: left_zero_band(2) is "
                   "strong, its idempotents are pairwise incomparable";
    }
    return o;
  }

  Outcome products() {
    Outcome    o;
    auto const p = direct_product(chain_assembly(2), chain_assembly(2));
    auto const a = check_axioms(p);
    o.require(a.is_assembly(), "chain(2) x chain(2) is not an assembly");
    if (a.is_assembly()) {
      auto const v = is_strong(a);
      o.require(!v.holds, "chain(2) x chain(2) is strong");
      if (!v.holds) {
        o.require(name_of(p, *v.witness) == "(0,1,1,0)", "witness " + name_of(p, *v.witness));
      }
    }
    auto const  tables = support::census_assemblies(3);
    std::size_t pairs  = 0;
    for (auto const& s : tables) {
      for (auto const& t : tables) {
        ++pairs;
        o.require(check_axioms(direct_product(s, t)).is_assembly(),
                  "product of " + table_text(s) + " and " + table_text(t) + " is not an assembly");
      }
    }
    if (o.pass) {
      o.detail = "chain(2)^2 not strong at ((0,1),(1,0)); " + std::to_string(pairs)
                 + " products of census assemblies are assemblies";
    }
    return o;
  }

  Outcome idempotent_nonclosure() {
    Outcome    o;
    auto const t = support::load("matrix4.sgt");
    o.require(t == idempotent_nonclosure_example(), "fixture differs from the construction");
    auto const a  = check_axioms(t);
    auto const am = t(*t.find("A"), *t.find("M"));
    o.require(format_subset(t, a.idempotents) == "{0, A, M}", "E = " + format_subset(t, a.idempotents));
    o.require(!a.idempotents.contains(am), "A*M is idempotent");
    o.require(a.a1.status == AxiomStatus::fails && t.name(*a.a1.witness) == "AM", "A1 does not fail at AM");
    o.require(!a.is_assembly(), "is an assembly");
    if (o.pass) {
      o.detail = "E = {0, A, M}, A*M = AM not in E, A1 fails at AM";
    }
    return o;
  }

  Outcome homomorphisms() {
    Outcome     o;
    auto const  tables = support::census_assemblies(4);
    std::size_t count = 0, literal_injective = 0, kernel_is_e = 0, disagreements = 0;
    std::string first_disagreement;
    for (auto const& s : tables) {
      auto const sa = check_axioms(s);
      for (auto const& t : tables) {
        auto const ta = check_axioms(t);
        for (auto const& m : enumerate_homomorphisms(sa, ta)) {
          ++count;
          try {
            // throws if e or s is not preserved
            is_homomorphism(sa, ta, m);
            // phi^-1(phi(E)) and the union of component kernels, computed here
            std::vector<ElementId> pre, comp;
            Subset const           phi_e = [&] {
              std::vector<ElementId> v;
              for (auto f : sa.idempotents) {
                v.push_back(m[f]);
              }
              return Subset(std::move(v));
            }();
            for (ElementId x = 0; x < s.order(); ++x) {
              if (phi_e.contains(m[x])) {
                pre.push_back(x);
              }
              if (m[x] == m[sa.e(x)]) {
                comp.push_back(x);
              }
            }
            auto const k = kernel(sa, t, m);
            o.require(k == Subset(pre) && k == Subset(comp), "kernel mismatch");
            o.require(sa.idempotents.is_subset_of(k), "kernel misses an idempotent");
            o.require(is_subassembly(ta, image(sa, ta, m)).holds, "image is not a subassembly");
            auto const inj = injectivity_check(sa, t, m);
            literal_injective += inj.literal;
            kernel_is_e += inj.kernel_is_e;
            if (!inj.agree()) {
              if (disagreements++ == 0) {
                std::ostringstream w;
                w << table_text(s) << " -> " << table_text(t) << " map ";
                for (auto y : m) {
                  w << y;
                }
                first_disagreement = w.str();
              }
            }
          } catch (InconsistencyError const& e) {
            o.require(false, e.what());
          }
        }
      }
    }
    auto const c2 = cyclic_group(2);
    for (std::size_t n : {2, 4}) {
      auto const homs = enumerate_homomorphisms(check_axioms(coset_assembly(cyclic_group(n))),
                                                check_axioms(c2.base()));
      bool const constant_only
          = homs.size() == 1
            && std::all_of(homs[0].begin(), homs[0].end(), [](ElementId y) { return y == 0; });
      o.require(constant_only, "Hom(A(C" + std::to_string(n) + "), C2) is not just the constant map");
    }
    std::ostringstream d;
    d << count << " homomorphisms; e, s preserved; kernel = phi^-1(phi(E)) = union of component kernels"
      << " contains E; images are subassemblies; only constant maps A(C2), A(C4) -> C2;"
      << " injective " << literal_injective << " vs kernel = E " << kernel_is_e << ", "
      << disagreements << " disagreements";
    if (kernel_is_e - literal_injective == disagreements) {
      d << ", all of them kernel = E without injectivity";
    }
    if (disagreements != 0) {
      d << " (first: " << first_disagreement << ")";
      o.require(false, "");
    }
    if (o.detail.empty()) {
      o.detail = d.str();
    } else {
      o.detail += "; " + d.str();
    }
    return o;
  }

  Outcome subassemblies() {
    Outcome     o;
    std::size_t subsets = 0, certified = 0;
    for (auto const& t : support::census_assemblies(4)) {
      auto const          a = check_axioms(t);
      std::vector<Subset> subs;
      for (auto const& b : support::nonempty_subsets(t.order())) {
        ++subsets;
        bool const criterion = is_subassembly(a, b).holds;
        o.require(criterion == closed_under_operations(a, b),
                  "criterion and closure differ on " + table_text(t));
        if (criterion) {
          subs.push_back(b);
        }
      }
      for (auto const& b1 : subs) {
        for (auto const& b2 : subs) {
          auto const i = intersect_subassemblies(a, b1, b2);
          if (!i.empty()) {
            ++certified;
          }
          if (auto p = setwise_product_subassemblies(a, b1, b2)) {
            ++certified;
          }
        }
      }
      if (is_commutative(t)) {
        o.require(centre(t) == Subset::all(t.order()), "centre of a commutative table is not everything");
      }
    }

    auto const s3  = support::group("s3.sgt");
    auto const big = coset_assembly_full(s3);
    Subset     a3;
    for (auto const& n : big.normal_subgroups) {
      if (n.size() == 3) {
        a3 = n;
      }
    }
    std::vector<ElementId> inner;
    for (ElementId x = 0; x < big.cosets.size(); ++x) {
      if (big.cosets[x].members.is_subset_of(a3) && big.normal_subgroups[big.cosets[x].subgroup].is_subset_of(a3)) {
        inner.push_back(x);
      }
    }
    auto const a = check_axioms(big.table);
    o.require(inner.size() == 4 && is_subassembly(a, Subset(inner)).holds,
              "A(A3) does not certify inside A(S3)");
    o.require(centre(left_zero_band(2)).empty(), "centre of left_zero_band(2) is not empty");
    if (o.pass) {
      o.detail = std::to_string(subsets) + " subsets agree; " + std::to_string(certified)
                 + " intersections/products re-certified; A(A3) has order 4 in A(S3); "
                   "Z(left_zero_band(2)) is empty";
    }
    return o;
  }

  Outcome parser() {
    Outcome     o;
    std::size_t round_trips = 0;
    for (auto const& entry : std::filesystem::directory_iterator(ASSEMBLIES_FIXTURE_DIR)) {
      auto const& path = entry.path();
      if (path.extension() != ".sgt") {
        continue;
      }
      TableKind kind = TableKind::semigroup;
      try {
        auto const t = read_table_file(path, &kind);
        o.require(parse_table(render_table(t, kind)) == t, "round trip fails on " + path.filename().string());
        ++round_trips;
      } catch (Error const&) {
      }
    }
    for (std::size_t n = 1; n <= 3; ++n) {
      for (auto const& r : census(n)) {
        o.require(parse_table(render_table(r.canonical_table)) == r.canonical_table, "round trip fails on census");
        ++round_trips;
      }
    }

    struct Case {
      char const* file;
      char const* category;
    };
    for (auto [file, category] : std::vector<Case>{{"unknown-name.sgt", "unknown name"},
                                                   {"wrong-arity.sgt", "wrong arity"},
                                                   {"duplicate-name.sgt", "duplicate name"},
                                                   {"missing-section.sgt", "missing section"},
                                                   {"garbled.sgt", "not associative"},
                                                   {"not-a-group.sgt", "not a group"}}) {
      std::ostringstream out, err;
      int const code = cli::run({"validate", support::fixture(file)}, out, err);
      o.require(code == 2, std::string(file) + " exits " + std::to_string(code));
      o.require(err.str().find(category) != std::string::npos, std::string(file) + ": " + err.str());
    }
    if (o.pass) {
      o.detail = std::to_string(round_trips) + " round trips; 6 corruption fixtures exit 2 with their category";
    }
    return o;
  }

}  // namespace

int main() {
  std::vector<std::pair<std::string, Check>> const criteria = {
      {"Rees counterexample", rees_counterexample},
      {"coset assembly orders", coset_orders},
      {"assembly iff band of groups (census <= 4)", census_band_of_groups},
      {"semilattice of groups equivalences (census <= 4)", census_semilattice_of_groups},
      {"union of groups with commuting idempotents satisfies A3", census_clifford},
      {"strong iff total idempotent order", strong_and_order},
      {"direct products", products},
      {"idempotent non-closure", idempotent_nonclosure},
      {"homomorphism suite", homomorphisms},
      {"subassembly suite", subassemblies},
      {"parser and format", parser},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto const start = std::chrono::steady_clock::now();
    Outcome    o;
    try {
      o = criteria[i].second();
    } catch (std::exception const& e) {
      o.pass   = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::chrono::duration<double> const took = std::chrono::steady_clock::now() - start;
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << std::setw(2) << i + 1 << "  "
              << criteria[i].first << ": " << o.detail << " [" << std::fixed << std::setprecision(2)
              << took.count() << " s]" << std::endl;
  }
  std::cout << criteria.size() - failures << "/" << criteria.size() << " criteria pass\n";
  return failures == 0 ? 0 : 1;
}
