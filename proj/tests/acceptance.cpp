// End-to-end checks against the worked four-line example and the small
// reflection arrangements. Prints one line per criterion; the exit code is
// the number of failures.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <vector>

#include "deligne/gfan.hpp"
#include "deligne/groupoid.hpp"
#include "deligne/json_io.hpp"

using namespace deligne;

namespace {

IVec vec(std::initializer_list<long> entries) {
  IVec v(static_cast<int>(entries.size()));
  int i = 0;
  for (long e : entries) v[i++] = Int(e);
  return v;
}

int failures = 0;

void criterion(int number, const std::string& name,
               const std::function<void()>& body) {
  try {
    body();
    std::cout << "PASS " << number << " " << name << "\n";
  } catch (const std::exception& e) {
    std::cout << "FAIL " << number << " " << name << ": " << e.what() << "\n";
    ++failures;
  }
}

void expect(bool ok, const std::string& msg) {
  if (!ok) throw Error(msg);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

// Everything criterion 7 computes, reused by criterion 9.
struct SweepEntry {
  PositivePath path;
  EquivClass cls;
  NormalForm nf;
};

std::vector<Word> all_words(int labels, int max_len) {
  std::vector<Word> words{{}};
  size_t tier_begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    size_t tier_end = words.size();
    for (size_t i = tier_begin; i < tier_end; ++i) {
      for (int l = 1; l <= labels; ++l) {
        Word w = words[i];
        w.push_back(l);
        words.push_back(std::move(w));
      }
    }
    tier_begin = tier_end;
  }
  return words;
}

std::vector<std::pair<int, int>> nf_signature(const NormalForm& nf) {
  std::vector<std::pair<int, int>> sig;
  for (const auto& f : nf.factors) sig.emplace_back(f.start(), f.end());
  return sig;
}

}  // namespace

int main() {
  Arrangement ex8(2, {vec({1, 0}), vec({0, 1}), vec({1, 1}), vec({1, 2})});
  Arrangement a2(2, {vec({1, 0}), vec({0, 1}), vec({1, 1})});
  Arrangement b2(2, {vec({1, 0}), vec({0, 1}), vec({1, 1}), vec({1, -1})});
  Arrangement g2(2, {vec({1, 0}), vec({0, 1}), vec({1, 1}), vec({2, 1}),
                     vec({1, 2}), vec({1, -1})});
  Arrangement a3(3, {vec({1, 1, 0}), vec({1, -1, 0}), vec({1, 0, 1}),
                     vec({1, 0, -1}), vec({0, 1, 1}), vec({0, 1, -1})});

  criterion(1, "chamber-enumeration", [&] {
    Arrangement fresh(2, {vec({1, 0}), vec({0, 1}), vec({1, 1}), vec({1, 2})});
    auto t0 = std::chrono::steady_clock::now();
    const auto& cx = fresh.chambers();
    double dt = seconds_since(t0);
    expect(cx.chambers.size() == 8, "expected 8 chambers");
    expect(dt < 1.0, "enumeration took " + std::to_string(dt) + "s");
  });

  SkeletonGraph sk = build_skeleton(
      ex8, ex8.chamber(0), std::vector<IVec>{vec({1, 0}), vec({0, 1})});

  criterion(2, "skeleton-structure", [&] {
    expect(sk.arrows().size() == 16, "expected 16 arrows");
    for (const auto& c : ex8.chambers().chambers) {
      std::set<int> targets;
      for (int l = 1; l <= 2; ++l) targets.insert(sk.arrow(c.id, l).target);
      expect(targets.size() == 2, "out-degree must be 2");
    }
    const Chamber& m1 = ex8.chamber(SignVector::from_string("-+++"));
    const Chamber& m2 = ex8.chamber(SignVector::from_string("+-++"));
    expect(sk.arrow(sk.base(), 1).target == m1.id, "s1 must cross to -+++");
    expect(sk.arrow(sk.base(), 2).target == m2.id, "s2 must cross to +-++");
  });

  criterion(3, "antipodal-atoms", [&] {
    const Chamber& opp = antipode(ex8, ex8.chamber(0));
    auto atoms = enumerate_atoms(sk, ex8.chamber(0), opp);
    expect(atoms.size() == 2, "expected exactly 2 atoms");
    std::set<Word> words{atoms[0].word(), atoms[1].word()};
    expect(words == std::set<Word>{{1, 2, 1, 2}, {2, 1, 2, 1}},
           "atom words must be 1212 and 2121");
    expect(equal_positive(atoms[0], atoms[1], kDefaultBudget,
                          EqualMethod::oracle),
           "the two atoms must be equivalent");
  });

  criterion(4, "normal-form-example", [&] {
    PositivePath p = path_from_word(sk, ex8.chamber(0), {1, 2, 1, 2, 1});
    NormalForm nf = deligne_normal_form(p);
    expect(nf.factors.size() == 2, "expected 2 factors");
    const Chamber& opp = antipode(ex8, ex8.chamber(0));
    expect(nf.factors[0].length() == 4, "first factor must have length 4");
    expect(is_atom(nf.factors[0]), "first factor must be an atom");
    expect(nf.factors[0].end() == opp.id, "first factor must reach ----");
    expect(nf.factors[1].word() == Word{1}, "second factor must be s1");
  });

  criterion(5, "atom-chamber-bijection", [&] {
    auto count_from_every_chamber = [](const Arrangement& arr, size_t want) {
      SkeletonGraph graph = build_skeleton(arr, arr.chamber(0));
      for (const auto& v : arr.chambers().chambers) {
        auto nfs = atom_chamber_bijection(graph, v);
        expect(nfs.size() == want, "wrong class count");
      }
    };
    count_from_every_chamber(ex8, 8);
    count_from_every_chamber(a2, 6);
    count_from_every_chamber(b2, 8);
    count_from_every_chamber(g2, 12);
  });

  criterion(6, "braid-exponents", [&] {
    BraidResult r = braid_relation(sk, ex8.chamber(0), 1, 2);
    expect(r.m == 4, "four-line closure must be m=4");
    expect(r.equivalent, "closure words must be equivalent");
    expect(2 <= r.m && r.m <= 8, "m must lie in [2,8]");
    SkeletonGraph ska2 = build_skeleton(a2, a2.chamber(0));
    expect(braid_relation(ska2, a2.chamber(0), 1, 2).m == 3, "a2 must be m=3");
    SkeletonGraph skg2 = build_skeleton(g2, g2.chamber(0));
    BraidResult rg = braid_relation(skg2, g2.chamber(0), 1, 2);
    expect(rg.m == 6, "g2 must be m=6");
    expect(rg.equivalent, "g2 closure words must be equivalent");
  });

  // The sweep data stays alive for criterion 9.
  SkeletonGraph ska2 = build_skeleton(a2, a2.chamber(0));
  std::vector<SweepEntry> sweep;
  bool sweep_complete = false;

  criterion(7, "oracle-sweep", [&] {
    auto t0 = std::chrono::steady_clock::now();
    for (const SkeletonGraph* graph : {&sk, &ska2}) {
      const auto& arr = graph->arrangement();
      std::vector<Word> words = all_words(graph->labels(), 5);
      for (const auto& v : arr.chambers().chambers) {
        size_t first = sweep.size();
        for (const auto& w : words) {
          PositivePath p = path_from_word(*graph, v, w);
          EquivClass cls = equiv_class(p);
          NormalForm nf = deligne_normal_form(p);
          sweep.push_back(SweepEntry{std::move(p), std::move(cls), std::move(nf)});
        }
        for (size_t x = first; x < sweep.size(); ++x) {
          for (size_t y = x + 1; y < sweep.size(); ++y) {
            const auto& px = sweep[x].path;
            const auto& py = sweep[y].path;
            if (px.end() != py.end() || px.length() != py.length()) continue;
            bool by_nf = nf_signature(sweep[x].nf) == nf_signature(sweep[y].nf);
            bool by_oracle = sweep[x].cls.contains(py.word());
            expect(by_nf == by_oracle,
                   "normal form and oracle disagree on " +
                       format_word(px.word()) + " vs " + format_word(py.word()));
          }
        }
      }
    }
    double dt = seconds_since(t0);
    expect(dt < 60.0, "sweep took " + std::to_string(dt) + "s");
    sweep_complete = true;
  });

  criterion(8, "gmatrix-roundtrip", [&] {
    IMat identity = IMat::Identity(2, 2);
    expect(g_matrix(sk, ex8.chamber(0)).rows == identity,
           "base g-matrix must be the identity");
    expect(g_matrix(sk, antipode(ex8, ex8.chamber(0))).rows == -identity,
           "antipodal g-matrix must be minus the identity");
    std::vector<IMat> mats;
    for (const auto& c : ex8.chambers().chambers) {
      mats.push_back(g_matrix(sk, c).rows);
    }
    Reconstruction rec = arrangement_from_g_matrices(2, mats);
    std::set<std::vector<Int>> got, want;
    for (const auto& h : rec.arrangement.hyperplanes()) {
      got.insert({h.normal.data(), h.normal.data() + h.normal.size()});
    }
    for (const auto& h : ex8.hyperplanes()) {
      want.insert({h.normal.data(), h.normal.data() + h.normal.size()});
    }
    expect(got == want, "reconstruction must reproduce the 4 normals");
    expect(rec.full_cover, "matching must cover every chamber");
    std::set<int> matched(rec.matrix_chamber.begin(), rec.matrix_chamber.end());
    expect(matched.size() == 8, "matching must be a bijection");
  });

  criterion(9, "factor-chaining", [&] {
    expect(sweep_complete, "sweep results unavailable");
    int checked = 0;
    for (const auto& entry : sweep) {
      const auto& factors = entry.nf.factors;
      for (size_t t = 1; t < factors.size(); ++t) {
        const SkeletonGraph& graph = factors[t].skeleton();
        int wall = factors[t - 1].arrows().back().wall;
        const Arrow* crossing = nullptr;
        for (int l = 1; l <= graph.labels(); ++l) {
          const Arrow& a = graph.arrow(factors[t].start(), l);
          if (a.wall == wall) {
            expect(crossing == nullptr, "two arrows cross the same wall");
            crossing = &a;
          }
        }
        expect(crossing != nullptr, "no arrow recrosses the previous wall");
        PositivePath step(&graph, factors[t].start(), {*crossing});
        expect(begins_with(factors[t], step),
               "factor does not begin with the chaining arrow");
        ++checked;
      }
    }
    expect(checked > 0, "no multi-factor normal forms were checked");
  });

  criterion(10, "labeling-determinism", [&] {
    for (const Arrangement* arr : {&ex8, &a2, &b2, &g2, &a3}) {
      SkeletonGraph plain = build_skeleton(*arr, arr->chamber(0));
      for (std::uint64_t seed : {1u, 2u, 3u}) {
        SkeletonGraph shuffled =
            build_skeleton(*arr, arr->chamber(0), std::nullopt, seed);
        expect(shuffled.arrows() == plain.arrows(),
               "arrows changed with traversal order");
        for (const auto& c : arr->chambers().chambers) {
          expect(shuffled.labeled_rays(c.id) == plain.labeled_rays(c.id),
                 "ray labels changed with traversal order");
        }
      }
    }
  });

  criterion(11, "weak-order-hasse", [&] {
    for (const SkeletonGraph* graph : {&sk, &ska2}) {
      const auto& arr = graph->arrangement();
      const Chamber& base = arr.chamber(graph->base());
      WeakOrder order = weak_order(arr, base);
      std::vector<std::pair<int, int>> away;
      for (const auto& a : graph->arrows()) {
        SeparationSet lo = separation(arr, base, arr.chamber(a.source));
        SeparationSet hi = separation(arr, base, arr.chamber(a.target));
        if (hi.size() == lo.size() + 1) away.emplace_back(a.source, a.target);
      }
      std::sort(away.begin(), away.end());
      expect(away == order.covers,
             "covers must match the away-from-base arrows");
    }
  });

  return failures;
}
