#include "doctest.h"

#include "quillen/json_io.hpp"
#include "quillen/search.hpp"

#include <set>

using namespace quillen;

TEST_CASE("positive searches") {
  for (auto name : {"Alt(4)", "Alt(5)", "Alt(8)"}) {
    CAPTURE(name);
    auto r = search_admissible(named_group(name), 3);
    CHECK(r.outcome == SearchOutcome::Found);
    REQUIRE(r.found.size() == 1);
    // soundness: every hit passes the enumerated check
    auto rep = is_admissible(r.found[0]);
    CHECK(rep.admissible);
    CHECK(rep.maximality == Maximality::Maximal);
  }
}

TEST_CASE("negative searches") {
  for (auto name : {"Sym(6)", "Sym(7)"}) {
    CAPTURE(name);
    auto r = search_admissible(named_group(name), 3);
    CHECK(r.outcome == SearchOutcome::ExhaustivelyNone);
    CHECK(r.found.empty());
    CHECK(r.stats.skipped_by_rank == 0);
  }
}

TEST_CASE("frame counts for rank 2 at p = 3") {
  auto r = search_admissible(symmetric_group(6), 3);
  CHECK(r.stats.p_rank == 2);
  REQUIRE(r.stats.subgroups_searched > 0);
  CHECK(r.stats.frames == 12 * r.stats.subgroups_searched);
}

TEST_CASE("frame reduction removes a factor (p-1)^r") {
  SearchLimits all;
  all.max_results = 0;
  auto reduced = search_admissible(symmetric_group(5), 3, all);
  all.frame_reduction = false;
  auto full = search_admissible(symmetric_group(5), 3, all);
  REQUIRE(reduced.outcome == SearchOutcome::Found);
  CHECK(full.found.size() == 2 * reduced.found.size());
  CHECK(full.stats.frames == 2 * reduced.stats.frames);
}

TEST_CASE("obstructed groups") {
  auto r = search_admissible(general_linear_group(2, 4), 3);
  CHECK(r.outcome == SearchOutcome::Obstructed);
  REQUIRE(r.obstruction.has_value());
  CHECK(r.obstruction->witness.matrix().is_scalar());

  SearchLimits force;
  force.force = true;
  auto forced = search_admissible(general_linear_group(2, 4), 3, force);
  CHECK(forced.outcome == SearchOutcome::ExhaustivelyNone);
  auto gl27 = general_linear_group(2, 7);
  CHECK(search_admissible(gl27, 3).outcome == SearchOutcome::Obstructed);
  CHECK(search_admissible(gl27, 3, force).outcome ==
        SearchOutcome::ExhaustivelyNone);
}

TEST_CASE("conjugacy reduction agrees on existence") {
  SearchLimits lim;
  lim.conjugacy_reduction = true;
  CHECK(search_admissible(symmetric_group(6), 3, lim).outcome ==
        SearchOutcome::ExhaustivelyNone);
  auto a5 = search_admissible(alternating_group(5), 3, lim);
  CHECK(a5.outcome == SearchOutcome::Found);
  CHECK(a5.stats.subgroups_searched <= a5.stats.maximal_subgroups);
}

TEST_CASE("limits") {
  SearchLimits lim;
  lim.max_rank = 1;
  auto r = search_admissible(symmetric_group(6), 3, lim);
  CHECK(r.outcome == SearchOutcome::Capped);
  CHECK(r.stats.skipped_by_rank > 0);

  SearchLimits cap;
  cap.cap = 100;
  CHECK(search_admissible(symmetric_group(6), 3, cap).outcome ==
        SearchOutcome::Capped);
}

TEST_CASE("reports are deterministic") {
  auto a = search_result_to_json(search_admissible(alternating_group(5), 3));
  auto b = search_result_to_json(search_admissible(alternating_group(5), 3));
  CHECK(a.dump() == b.dump());
}

// Brute force over every line frame <e> and every c in G, with is_admissible
// as the only judge, for rank-1 groups.
TEST_CASE("complete against brute force in rank 1") {
  for (auto name : {"Sym(5)", "Alt(5)"}) {
    CAPTURE(name);
    auto G = named_group(name);
    auto elems = enumerate(G);
    std::set<SubgroupNode> lines;
    for (const auto &g : elems)
      if (element_order(g) == 3)
        lines.insert(SubgroupNode::generated({g}, 3));
    std::size_t brute = 0;
    for (const auto &L : lines) {
      // canonical generator: least nonidentity element
      GroupElement e = L.elements().front().is_identity() ? L.elements()[1]
                                                          : L.elements()[0];
      for (const auto &c : elems) {
        Collection C;
        C.group = G;
        C.E = ElemAbelianBasis(3, {e});
        C.c = {c};
        if (is_admissible(C).admissible)
          ++brute;
      }
    }
    SearchLimits all;
    all.max_results = 0;
    auto r = search_admissible(G, 3, all);
    CHECK(r.found.size() == brute);
    CHECK(brute > 0);
  }
}
