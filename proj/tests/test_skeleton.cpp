#include <doctest.h>

#include <set>

#include "deligne/skeleton.hpp"

using namespace deligne;

namespace {

IVec vec(std::initializer_list<long> entries) {
  IVec v(static_cast<int>(entries.size()));
  int i = 0;
  for (long e : entries) v[i++] = Int(e);
  return v;
}

Arrangement ex8() {
  return Arrangement(2, {vec({1, 0}), vec({0, 1}), vec({1, 1}), vec({1, 2})});
}

}  // namespace

TEST_CASE("skeleton of the four-line fixture") {
  Arrangement arr = ex8();
  SkeletonGraph sk = build_skeleton(arr, arr.chamber(0));
  CHECK(sk.base() == 0);
  CHECK(sk.labels() == 2);
  CHECK(sk.arrows().size() == 16);

  const Chamber& base = arr.chamber(0);
  const Arrow& s1 = cross(sk, base, 1);
  CHECK(arr.chamber(s1.target).sign.to_string() == "-+++");
  CHECK(s1.wall == 0);
  CHECK(s1.label == 1);
  const Arrow& s2 = cross(sk, base, 2);
  CHECK(arr.chamber(s2.target).sign.to_string() == "+-++");
  CHECK(s2.wall == 1);

  const Chamber& m2 = arr.chamber(SignVector::from_string("+-++"));
  const Arrow& a = cross(sk, m2, 1);
  CHECK(arr.chamber(a.target).sign.to_string() == "+-+-");
  CHECK(a.wall == 3);

  CHECK_THROWS_AS(sk.arrow(0, 3), Error);
  CHECK_THROWS_AS(sk.arrow(0, 0), Error);
}

TEST_CASE("labels propagate from the base rays") {
  Arrangement arr = ex8();
  SkeletonGraph sk = build_skeleton(arr, arr.chamber(0));
  CHECK(sk.labeled_rays(0) == std::vector<IVec>{vec({1, 0}), vec({0, 1})});
  int m1 = arr.chamber(SignVector::from_string("-+++")).id;
  CHECK(sk.labeled_rays(m1) == std::vector<IVec>{vec({-1, 1}), vec({0, 1})});
  int opp = arr.chamber(SignVector::from_string("----")).id;
  CHECK(sk.labeled_rays(opp) == std::vector<IVec>{vec({-1, 0}), vec({0, -1})});
}

TEST_CASE("every arrow has a reverse with the same label and wall") {
  Arrangement arr = ex8();
  SkeletonGraph sk = build_skeleton(arr, arr.chamber(0));
  for (const auto& a : sk.arrows()) {
    const Arrow& back = sk.arrow(a.target, a.label);
    CHECK(back.target == a.source);
    CHECK(back.wall == a.wall);
    CHECK(back.label == a.label);
  }
}

TEST_CASE("degrees and label partition") {
  Arrangement arr = ex8();
  SkeletonGraph sk = build_skeleton(arr, arr.chamber(0));
  std::vector<int> in(8, 0);
  for (const auto& c : arr.chambers().chambers) {
    std::set<int> targets;
    for (int l = 1; l <= sk.labels(); ++l) {
      const Arrow& a = sk.arrow(c.id, l);
      CHECK(a.source == c.id);
      CHECK(a.label == l);
      targets.insert(a.target);
      ++in[a.target];
    }
    CHECK(targets.size() == 2);
  }
  for (int d : in) CHECK(d == 2);
}

TEST_CASE("explicit base labeling swaps the arrow labels") {
  Arrangement arr = ex8();
  std::vector<IVec> swapped{vec({0, 1}), vec({1, 0})};
  SkeletonGraph sk = build_skeleton(arr, arr.chamber(0), swapped);
  CHECK(sk.labeled_rays(0) == swapped);
  const Arrow& s1 = sk.arrow(0, 1);
  CHECK(arr.chamber(s1.target).sign.to_string() == "+-++");
  const Arrow& s2 = sk.arrow(0, 2);
  CHECK(arr.chamber(s2.target).sign.to_string() == "-+++");
}

TEST_CASE("base labeling must list the base rays") {
  Arrangement arr = ex8();
  CHECK_THROWS_AS(
      build_skeleton(arr, arr.chamber(0),
                     std::vector<IVec>{vec({1, 0}), vec({1, 1})}),
      InconsistentLabeling);
  CHECK_THROWS_AS(
      build_skeleton(arr, arr.chamber(0), std::vector<IVec>{vec({1, 0})}),
      InconsistentLabeling);
  CHECK_THROWS_AS(
      build_skeleton(arr, arr.chamber(0),
                     std::vector<IVec>{vec({1, 0}), vec({1, 0})}),
      InconsistentLabeling);
  // Scaling a ray is fine; labels attach to directions.
  SkeletonGraph sk = build_skeleton(
      arr, arr.chamber(0), std::vector<IVec>{vec({3, 0}), vec({0, 7})});
  CHECK(sk.labeled_rays(0) == std::vector<IVec>{vec({1, 0}), vec({0, 1})});
}

TEST_CASE("randomized traversal orders leave the labels unchanged") {
  Arrangement arr = ex8();
  SkeletonGraph plain = build_skeleton(arr, arr.chamber(0));
  for (std::uint64_t seed : {1, 7, 42, 1234, 99999}) {
    SkeletonGraph shuffled =
        build_skeleton(arr, arr.chamber(0), std::nullopt, seed);
    CHECK(shuffled.arrows() == plain.arrows());
    for (int c = 0; c < 8; ++c) {
      CHECK(shuffled.labeled_rays(c) == plain.labeled_rays(c));
    }
  }
}

TEST_CASE("skeleton requires simplicial and essential input") {
  Arrangement r3(3, {vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1}),
                     vec({1, 1, 1})});
  CHECK_THROWS_AS(build_skeleton(r3, r3.chamber(0)), NotSimplicial);
  Arrangement line(3, {vec({1, 0, 0})});
  CHECK_THROWS_AS(build_skeleton(line, line.chamber(0)), NotEssential);
}

TEST_CASE("rank-three skeleton builds and stays consistent") {
  Arrangement a3(3, {vec({1, 1, 0}), vec({1, -1, 0}), vec({1, 0, 1}),
                     vec({1, 0, -1}), vec({0, 1, 1}), vec({0, 1, -1})});
  SkeletonGraph sk = build_skeleton(a3, a3.chamber(0));
  CHECK(sk.labels() == 3);
  CHECK(sk.arrows().size() == 24 * 3);
  for (const auto& a : sk.arrows()) {
    CHECK(sk.arrow(a.target, a.label).target == a.source);
  }
}

TEST_CASE("dot export is stable and complete") {
  Arrangement arr = ex8();
  SkeletonGraph sk = build_skeleton(arr, arr.chamber(0));
  std::string dot = export_dot(sk);
  CHECK(dot.starts_with("digraph skeleton {\n  \"++++\";\n"));
  CHECK(dot.find("  \"++++\" -> \"-+++\" [label=\"s1\"];\n") != std::string::npos);
  CHECK(dot.find("  \"++++\" -> \"+-++\" [label=\"s2\"];\n") != std::string::npos);
  CHECK(dot.ends_with("}\n"));
  size_t lines = std::count(dot.begin(), dot.end(), '\n');
  CHECK(lines == 1 + 8 + 16 + 1);
  CHECK(dot == export_dot(build_skeleton(arr, arr.chamber(0), std::nullopt, 5)));
}
