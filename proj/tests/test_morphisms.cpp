#include <catch_amalgamated.hpp>

#include "assemblies/constructions.hpp"
#include "assemblies/errors.hpp"
#include "assemblies/morphisms.hpp"
#include "support.hpp"

using namespace assemblies;

TEST_CASE("homomorphism verdicts", "[morphisms]") {
  auto const chain = check_axioms(chain_assembly(2));
  auto const c2    = check_axioms(cyclic_group(2).base());
  ElementMap id    = {0, 1};
  CHECK(is_homomorphism(chain, chain, id).holds);

  // 0 -> g, 1 -> identity
  auto const v = is_homomorphism(chain, c2, ElementMap{1, 0});
  REQUIRE_FALSE(v.holds);
  CHECK(*v.witness == ElementPair{0, 0});

  CHECK_THROWS_AS(is_homomorphism(chain, c2, ElementMap{0}), PreconditionError);
  CHECK_THROWS_AS(is_homomorphism(chain, c2, ElementMap{0, 2}), PreconditionError);

  auto const g0 = check_axioms(with_zero(cyclic_group(2).base()));
  CHECK(is_homomorphism(g0, g0, g0.e_map).holds);
}

TEST_CASE("enumeration counts", "[morphisms]") {
  auto const c2    = check_axioms(cyclic_group(2).base());
  auto const chain = check_axioms(chain_assembly(2));
  CHECK(enumerate_homomorphisms(c2, c2).size() == 2);
  CHECK(enumerate_homomorphisms(chain, chain).size() == 3);
  auto const homs = enumerate_homomorphisms(check_axioms(coset_assembly(cyclic_group(2))), c2);
  REQUIRE(homs.size() == 1);
  CHECK(homs[0] == ElementMap{0, 0, 0});
  CHECK_THROWS_AS(enumerate_homomorphisms(check_axioms(chain_assembly(8)),
                                          check_axioms(chain_assembly(8)),
                                          {.node_cap = 100}),
                  CapExceeded);
}

TEST_CASE("enumeration agrees with brute force", "[morphisms]") {
  std::vector<SemigroupTable> tables;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto const& r : support::census(n)) {
      tables.push_back(r.canonical_table);
    }
  }
  for (auto const& s : tables) {
    auto const sa = check_axioms(s);
    for (auto const& t : tables) {
      std::vector<ElementMap> brute;
      for (auto const& m : support::all_maps(s.order(), t.order())) {
        if (support::brute_hom(s, t, m)) {
          brute.push_back(m);
        }
      }
      std::ranges::sort(brute);
      CHECK(enumerate_homomorphisms(s, t) == brute);
      CHECK(enumerate_homomorphisms(sa, check_axioms(t)) == brute);
    }
  }
}

TEST_CASE("kernels", "[morphisms]") {
  auto const g0 = check_axioms(with_zero(cyclic_group(2).base()));
  CHECK(kernel(g0, g0.subject, g0.e_map) == Subset::all(3));
  ElementMap id = {0, 1, 2};
  CHECK(kernel(g0, g0.subject, id) == g0.idempotents);

  auto const acg = check_axioms(coset_assembly(cyclic_group(2)));
  CHECK(kernel(acg, cyclic_group(2).base(), ElementMap{0, 0, 0}) == Subset::all(3));
  CHECK_THROWS_AS(kernel(g0, g0.subject, ElementMap{1, 1, 1}), PreconditionError);
}

TEST_CASE("injectivity", "[morphisms]") {
  auto const g0 = check_axioms(with_zero(cyclic_group(2).base()));
  ElementMap id = {0, 1, 2};
  CHECK(is_injective_hom(g0, g0.subject, id));
  auto const e = injectivity_check(g0, g0.subject, g0.e_map);
  CHECK_FALSE(e.literal);
  CHECK_FALSE(e.kernel_is_e);

  auto const c2 = check_axioms(cyclic_group(2).base());
  auto const v4 = direct_product(cyclic_group(2).base(), cyclic_group(2).base());
  CHECK(is_injective_hom(c2, v4, ElementMap{0, 2}));

  // Collapsing two idempotents: kernel = E but not injective.
  auto const chain = check_axioms(chain_assembly(2));
  auto const r     = injectivity_check(chain, chain.subject, ElementMap{1, 1});
  CHECK(r.kernel_is_e);
  CHECK_FALSE(r.literal);
  CHECK_THROWS_AS(is_injective_hom(chain, chain.subject, ElementMap{1, 1}), InconsistencyError);
}

TEST_CASE("components", "[morphisms]") {
  auto const g0 = check_axioms(with_zero(cyclic_group(2).base()));
  auto const r  = components(g0, g0, g0.e_map);
  REQUIRE(r.components.size() == 2);
  CHECK(r.components[0].domain == Subset{0, 1});
  CHECK(r.components[0].image == Subset{0});
  CHECK_FALSE(r.components[0].injective);
  CHECK(r.components[1].domain == Subset{2});
  CHECK(r.components[1].image == Subset{2});
  CHECK(r.components[1].onto);
  CHECK(r.injective_clause_holds());

  auto const p    = direct_product(chain_assembly(2), cyclic_group(2).base());
  auto const pa   = check_axioms(p);
  auto const proj = components(pa, check_axioms(chain_assembly(2)), ElementMap{0, 0, 1, 1});
  REQUIRE(proj.components.size() == 2);
  for (auto const& c : proj.components) {
    CHECK(c.image.size() == 1);
    CHECK(c.onto);
  }
  CHECK(proj.surjective);
  CHECK(proj.components_cover_target);

  auto const chain = check_axioms(chain_assembly(2));
  auto const k     = components(chain, chain, ElementMap{1, 1});
  CHECK(k.all_components_injective);
  CHECK_FALSE(k.injective);
  CHECK_FALSE(k.injective_clause_holds());
  CHECK(k.surjective_clause_holds());
}

TEST_CASE("images", "[morphisms]") {
  auto const g0 = check_axioms(with_zero(cyclic_group(2).base()));
  CHECK(image(g0, g0, g0.e_map) == g0.idempotents);
  CHECK(image(g0, g0, ElementMap{0, 1, 2}) == Subset::all(3));
  CHECK(image(g0, g0, ElementMap{2, 2, 2}) == Subset{2});
}

TEST_CASE("maximum idempotent obstruction", "[morphisms]") {
  auto const c2 = cyclic_group(2);
  for (std::size_t n : {2, 4}) {
    auto const r = max_idempotent_obstruction(check_axioms(coset_assembly(cyclic_group(n))), c2);
    CHECK(r.status == ObstructionStatus::holds);
    CHECK(r.maximum_absorbs);
    CHECK(r.homomorphisms == 1);
  }
  auto const g = max_idempotent_obstruction(check_axioms(c2.base()), c2);
  CHECK(g.status == ObstructionStatus::not_applicable);

  auto const lz = max_idempotent_obstruction(check_axioms(left_zero_band(2)), c2);
  CHECK(lz.status == ObstructionStatus::no_maximum);

  // The maximum of chain(2) x C2 does not absorb, and the projection to C2
  // is not constant.
  auto const p = check_axioms(semilattice_times_group(chain_assembly(2), c2));
  auto const r = max_idempotent_obstruction(p, c2);
  CHECK(r.status == ObstructionStatus::violated);
  CHECK_FALSE(r.maximum_absorbs);
  REQUIRE(r.non_constant);
}

TEST_CASE("analyze_hom", "[morphisms]") {
  auto const g0 = check_axioms(with_zero(cyclic_group(2).base()));
  auto const h  = analyze_hom(g0, g0, g0.e_map);
  CHECK(h.verdict.holds);
  CHECK(h.kernel == Subset::all(3));
  CHECK(h.image == g0.idempotents);
  REQUIRE(h.injectivity);
  CHECK(h.injectivity->agree());
  auto const bad = analyze_hom(g0, g0, ElementMap{1, 1, 1});
  CHECK_FALSE(bad.verdict.holds);
  CHECK_FALSE(bad.kernel);
}
