#include <catch_amalgamated.hpp>

#include <random>  // for mt19937

#include "assemblies/census.hpp"
#include "assemblies/constructions.hpp"
#include "assemblies/errors.hpp"
#include "support.hpp"

using namespace assemblies;

TEST_CASE("census sizes", "[census]") {
  CHECK(support::census(1).size() == 1);
  CHECK(support::census(2).size() == 5);
  CHECK(support::census(3).size() == 24);
  CHECK(support::census(4).size() == 188);
}

TEST_CASE("backtracking agrees with the naive scan", "[census]") {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto const naive = naive_canonical_tables(n);
    auto const fast  = enumerate_canonical_tables(n);
    CHECK(naive == fast);
    CHECK(enumerate_canonical_tables(n, {.threads = 3}) == fast);
  }
  CHECK_THROWS_AS(naive_canonical_tables(4), PreconditionError);
}

TEST_CASE("thread count does not change the order-4 census", "[census]") {
  CHECK(enumerate_canonical_tables(4, {.threads = 1}) == enumerate_canonical_tables(4, {.threads = 8}));
}

TEST_CASE("range checks", "[census]") {
  CHECK_THROWS_AS(enumerate_semigroups(0), PreconditionError);
  CHECK_THROWS_AS(enumerate_semigroups(6), PreconditionError);
  CHECK_THROWS_AS(enumerate_semigroups(5), CapExceeded);
}

TEST_CASE("canonical forms", "[census]") {
  std::mt19937 rng(11);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (auto const& r : support::census(n)) {
      auto const& t = r.canonical_table;
      CHECK(is_canonical(t));
      CHECK(canonical_form(t) == t);
      std::vector<ElementId> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      for (int k = 0; k < 3; ++k) {
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(canonical_form(relabel(t, perm)) == t);
      }
    }
  }
  auto const q8 = support::group("q8.sgt").base();
  CHECK(canonical_form(canonical_form(q8)) == canonical_form(q8));
}

TEST_CASE("band catalogue matches the census", "[census]") {
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<SemigroupTable> bands;
    for (auto const& r : support::census(n)) {
      if (r.flags.is_band) {
        bands.push_back(r.canonical_table);
      }
    }
    CHECK(band_catalogue(n) == bands);
  }
}

TEST_CASE("order 2 classification", "[census]") {
  auto const s = classify_census(support::census(2));
  CHECK(s.total == 5);
  CHECK(s.counts.at("assembly") == 4);
  CHECK(s.counts.at("strong") == 4);
  CHECK(s.counts.at("semilattice_of_groups") == 2);
  CHECK(s.violations.empty());
  CHECK(classify_census(support::census(1)).counts.at("assembly") == 1);
}

TEST_CASE("population equivalences on the order-3 and order-4 census", "[census]") {
  for (std::size_t n = 3; n <= 4; ++n) {
    auto const s = classify_census(support::census(n));
    CHECK(s.violations.empty());
    CHECK(s.counts.at("assembly") == s.counts.at("band_of_groups_witness"));
  }
}

TEST_CASE("violations are reported", "[census]") {
  auto records = support::census(2);
  for (auto& r : records) {
    if (r.flags.is_assembly) {
      r.flags.has_band_of_groups_witness = false;
      break;
    }
  }
  CHECK(summarize_census(records).violations.size() == 1);
  CHECK_THROWS_AS(classify_census(records), InconsistencyError);
}
