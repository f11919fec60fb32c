#include <catch_amalgamated.hpp>

#include "assemblies/constructions.hpp"
#include "assemblies/morphisms.hpp"
#include "assemblies/substructures.hpp"
#include "support.hpp"

using namespace assemblies;

TEST_CASE("inverse formulas on unions of groups", "[properties]") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (auto const& r : support::census(n)) {
      auto const a = check_axioms(r.canonical_table);
      if (!a.is_union_of_groups()) {
        continue;
      }
      auto const& t = a.subject;
      for (ElementId x = 0; x < n; ++x) {
        CHECK(a.e(x) == t(a.s(x), x));
        CHECK(a.e(x) == t(x, a.s(x)));
        CHECK(a.s(a.s(x)) == x);
      }
    }
  }
}

TEST_CASE("inverse of a product when idempotents commute", "[properties]") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (auto const& r : support::census(n)) {
      auto const a = check_axioms(r.canonical_table);
      if (!a.is_union_of_groups() || !a.idempotents_commute.holds) {
        continue;
      }
      auto const& t = a.subject;
      for (ElementId x = 0; x < n; ++x) {
        for (ElementId y = 0; y < n; ++y) {
          CHECK(a.s(t(x, y)) == t(a.s(y), a.s(x)));
        }
      }
    }
  }
  // fails without commuting idempotents: s(ab) = a but s(b)s(a) = b
  auto const lz = check_axioms(left_zero_band(2));
  CHECK(lz.s(lz.subject(0, 1)) != lz.subject(lz.s(1), lz.s(0)));
}

TEST_CASE("union of groups from monogenic subsemigroups", "[properties]") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (auto const& r : support::census(n)) {
      CHECK(is_union_of_groups(r.canonical_table) == check_axioms(r.canonical_table).is_union_of_groups());
    }
  }
}

TEST_CASE("subassembly criterion equals closure", "[properties]") {
  for (auto const& t : support::census_assemblies(4)) {
    auto const a = check_axioms(t);
    for (auto const& b : support::nonempty_subsets(t.order())) {
      CHECK(is_subassembly(a, b).holds == closed_under_operations(a, b));
    }
  }
}

TEST_CASE("intersections and commutative products of subassemblies", "[properties]") {
  for (auto const& t : support::census_assemblies(4)) {
    auto const          a = check_axioms(t);
    std::vector<Subset> subs;
    for (auto const& b : support::nonempty_subsets(t.order())) {
      if (is_subassembly(a, b)) {
        subs.push_back(b);
      }
    }
    for (auto const& b1 : subs) {
      for (auto const& b2 : subs) {
        auto const i = intersect_subassemblies(a, b1, b2);
        CHECK(i == set_intersection(b1, b2));
        auto const p = setwise_product_subassemblies(a, b1, b2);
        CHECK(p.has_value() == is_commutative(t));
      }
    }
  }
}

TEST_CASE("in groups, subassemblies are the subgroups", "[properties]") {
  std::vector<GroupTable> groups;
  for (std::size_t n = 1; n <= 8; ++n) {
    groups.push_back(cyclic_group(n));
  }
  for (auto const* name : {"s3.sgt", "d4.sgt", "q8.sgt"}) {
    groups.push_back(support::group(name));
  }
  auto const c2 = cyclic_group(2);
  groups.push_back(GroupTable::certify(direct_product(c2.base(), c2.base())));
  groups.push_back(GroupTable::certify(direct_product(c2.base(), cyclic_group(4).base())));
  groups.push_back(GroupTable::certify(
      direct_product(direct_product(c2.base(), c2.base()), c2.base())));
  for (auto const& g : groups) {
    auto const          a = check_axioms(g.base());
    std::vector<Subset> subs;
    for (auto const& b : support::nonempty_subsets(g.order())) {
      if (is_subassembly(a, b)) {
        subs.push_back(b);
      }
    }
    CHECK(subs == support::brute_subgroups(g));
  }
}

TEST_CASE("homomorphism invariants on small assemblies", "[properties]") {
  auto const tables = support::census_assemblies(3);
  for (auto const& s : tables) {
    auto const sa = check_axioms(s);
    for (auto const& t : tables) {
      auto const ta = check_axioms(t);
      for (auto const& m : enumerate_homomorphisms(sa, ta)) {
        CHECK(is_homomorphism(sa, ta, m).holds);
        for (auto f : sa.idempotents) {
          CHECK(ta.idempotents.contains(m[f]));
        }
        auto const k = kernel(sa, t, m);
        CHECK(sa.idempotents.is_subset_of(k));
        CHECK(is_subassembly(sa, k));
        CHECK(is_subassembly(ta, image(sa, ta, m)));
        auto const c = components(sa, ta, m);
        CHECK(c.surjective_clause_holds());

        auto const inj = injectivity_check(sa, t, m);
        if (inj.literal) {
          CHECK(inj.kernel_is_e);
        }
        bool on_e = true;
        for (auto f : sa.idempotents) {
          for (auto g : sa.idempotents) {
            on_e = on_e && (f == g || m[f] != m[g]);
          }
        }
        CHECK(inj.literal == (inj.kernel_is_e && on_e));
      }
    }
  }
}
