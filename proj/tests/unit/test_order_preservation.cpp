#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "tis/errors.hpp"
#include "tis/generators.hpp"
#include "tis/order_preservation.hpp"

using namespace tis;

namespace {

VertexOrdering by_names(const TemporalInstance& inst, std::vector<std::string> names) {
  return VertexOrdering(inst.resolve(names));
}

} // namespace

TEST_SUITE("order_preservation") {
  TEST_CASE("edgeless single layer gives singleton rows") {
    const auto inst = parse_instance("tis 1\nmode edges\nn 3\ntau 1\ndelta 1\nk 0\nunit true\nvertex a\nvertex b\n"
                                     "vertex c\nlayer 1\n");
    const auto m = pooled_clique_matrix(inst);
    CHECK(m.rows == std::vector<Clique>{{0}, {1}, {2}});
    CHECK(m.row_layer == std::vector<int>{1, 1, 1});
  }

  TEST_CASE("pooled rows are deduplicated across layers") {
    const auto inst = gen_order_preserving(6, 3, 1, 0, 4);
    const auto layer1 = parse_instance(serialize_instance(inst)); // same data
    const auto m = pooled_clique_matrix(inst);
    std::vector<Clique> sorted = m.rows;
    std::sort(sorted.begin(), sorted.end());
    CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
    CHECK(pooled_clique_matrix(layer1).rows == m.rows);
  }

  TEST_CASE("single unit layers are order preserving") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const auto inst = gen_random_unit(9, 1, 1, 0, seed, Rational(3));
      const auto report = recognize_order_preserving(inst);
      REQUIRE(report.is_order_preserving);
      CHECK(try_normalize_to_ordering(inst.graphs()[0], *report.ordering).model.has_value());
    }
  }

  TEST_CASE("two-layer example has no common ordering") {
    for (const char* file : {"example_no_common_order.tis", "example_no_common_order_model.tis"}) {
      const auto inst = fixtures::load(file);
      CHECK_FALSE(c1p_test(pooled_clique_matrix(inst).as_matrix()).has_c1p());
      const auto report = recognize_order_preserving(inst);
      CHECK_FALSE(report.is_order_preserving);
      CHECK_FALSE(oracle::common_umbrella_ordering(inst));
      // Witness is minimal: it fails, and dropping any vertex of it repairs it.
      const auto& w = report.witness;
      CHECK_FALSE(oracle::common_umbrella_ordering(inst.restricted(w)));
      for (std::size_t i = 0; i < w.size(); ++i) {
        auto smaller = w;
        smaller.erase(smaller.begin() + static_cast<long>(i));
        CHECK(oracle::common_umbrella_ordering(inst.restricted(smaller)));
      }
    }
  }

  TEST_CASE("two-layer example without v4 agrees on (v3,v2,v1,v5,v6)") {
    for (const char* file : {"example_no_common_order.tis", "example_no_common_order_model.tis"}) {
      const auto full = fixtures::load(file);
      const std::vector<std::string> drop{"v4"};
      const auto inst = remove_vertices(full, drop);
      const auto m = pooled_clique_matrix(inst);
      const auto drawn = by_names(inst, {"v3", "v2", "v1", "v5", "v6"});
      CHECK(rows_consecutive(m.as_matrix(), drawn.order()));
      for (const auto& g : inst.graphs()) CHECK(try_normalize_to_ordering(g, drawn).model.has_value());
      const auto report = recognize_order_preserving(inst);
      REQUIRE(report.is_order_preserving);
      for (const auto& g : inst.graphs()) CHECK(try_normalize_to_ordering(g, *report.ordering).model.has_value());
    }
  }

  TEST_CASE("recognition matches exhaustive ordering search") {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
      const int n = 2 + static_cast<int>(seed % 6);
      const auto inst = gen_random_unit(n, 2 + static_cast<int>(seed % 2), 1, 0, seed, Rational(n, 2));
      const auto report = recognize_order_preserving(inst);
      CHECK(report.is_order_preserving == oracle::common_umbrella_ordering(inst));
    }
  }

  TEST_CASE("generated order-preserving instances are recognized") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      const auto inst = gen_order_preserving(10, 3, 2, 0, seed);
      CHECK(recognize_order_preserving(inst).is_order_preserving);
    }
  }

  TEST_CASE("non-unit instances are refused") {
    CHECK_THROWS_AS(recognize_order_preserving(fixtures::load("example_three_layers.tis")), NonUnitInstance);
  }

  TEST_CASE("non-interval edges layer is reported") {
    const auto inst = parse_instance("tis 1\nmode edges\nn 4\ntau 1\ndelta 1\nk 0\nunit false\nvertex a\nvertex b\n"
                                     "vertex c\nvertex d\nlayer 1\nedge a b\nedge b c\nedge c d\nedge a d\n");
    CHECK_THROWS_AS(pooled_clique_matrix(inst), NotIntervalLayer);
  }

  TEST_CASE("conflict model of one layer is its normalized model") {
    const auto inst = gen_random_unit(8, 1, 1, 0, 12, Rational(3));
    const auto ordering = *recognize_order_preserving(inst).ordering;
    CHECK(conflict_interval_model(inst, ordering) == normalize_to_ordering(inst.graphs()[0], ordering));
  }

  TEST_CASE("conflict model with one window of two layers induces their intersection") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const auto inst = gen_order_preserving(9, 2, 2, 0, seed);
      const auto ordering = *recognize_order_preserving(inst).ordering;
      CHECK(conflict_interval_model(inst, ordering).graph() == edge_intersection(inst.graphs()[0], inst.graphs()[1]));
    }
  }

  TEST_CASE("conflict model induces the conflict graph") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const int tau = 1 + static_cast<int>(seed % 4);
      const int delta = 1 + static_cast<int>(seed / 4 % tau);
      const auto inst = gen_order_preserving(2 + static_cast<int>(seed % 11), tau, delta, 0, seed);
      const auto ordering = *recognize_order_preserving(inst).ordering;
      for (auto sem : {WindowSemantics::Figure, WindowSemantics::Formula}) {
        const auto m = conflict_interval_model(inst, ordering, sem);
        CHECK(m.graph() == conflict_graph(inst, sem));
        CHECK(agrees_with(m, ordering));
      }
    }
  }

  TEST_CASE("conflict model rejects an incompatible ordering") {
    const auto inst = fixtures::load("example_no_common_order.tis");
    CHECK_THROWS_AS(conflict_interval_model(inst, VertexOrdering::identity(6)), OrderingIncompatible);
  }
}
