#include "deligne/groupoid.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace deligne {

Morphism::Morphism(const SkeletonGraph* sk, int start,
                   std::vector<Letter> letters)
    : sk_(sk), start_(start), letters_(std::move(letters)) {
  int cur = start_;
  for (const auto& l : letters_) {
    if (l.exponent == 1) {
      if (l.arrow.source != cur) throw Error("letters do not compose");
      cur = l.arrow.target;
    } else if (l.exponent == -1) {
      if (l.arrow.target != cur) throw Error("letters do not compose");
      cur = l.arrow.source;
    } else {
      throw Error("letter exponent must be +1 or -1");
    }
  }
}

int Morphism::end() const {
  int cur = start_;
  for (const auto& l : letters_) {
    cur = l.exponent == 1 ? l.arrow.target : l.arrow.source;
  }
  return cur;
}

bool Morphism::positive() const {
  return std::all_of(letters_.begin(), letters_.end(),
                     [](const Letter& l) { return l.exponent == 1; });
}

Morphism identity_at(const SkeletonGraph& sk, const Chamber& c) {
  return Morphism(&sk, c.id, {});
}

Morphism from_positive(const PositivePath& p) {
  std::vector<Letter> letters;
  letters.reserve(p.arrows().size());
  for (const auto& a : p.arrows()) letters.push_back(Letter{a, 1});
  return Morphism(&p.skeleton(), p.start(), std::move(letters));
}

PositivePath to_positive(const Morphism& m) {
  if (!m.positive()) throw Error("morphism has inverse letters");
  std::vector<Arrow> arrows;
  arrows.reserve(m.letters().size());
  for (const auto& l : m.letters()) arrows.push_back(l.arrow);
  return PositivePath(&m.skeleton(), m.start(), std::move(arrows));
}

Morphism compose(const Morphism& m1, const Morphism& m2) {
  if (m1.end() != m2.start()) throw EndpointMismatch();
  std::vector<Letter> letters = m1.letters();
  letters.insert(letters.end(), m2.letters().begin(), m2.letters().end());
  return Morphism(&m1.skeleton(), m1.start(), std::move(letters));
}

Morphism invert(const Morphism& m) {
  std::vector<Letter> letters(m.letters().rbegin(), m.letters().rend());
  for (auto& l : letters) l.exponent = -l.exponent;
  return Morphism(&m.skeleton(), m.end(), std::move(letters));
}

Morphism free_reduce(const Morphism& m) {
  std::vector<Letter> out;
  for (const auto& l : m.letters()) {
    if (!out.empty() && out.back().arrow == l.arrow &&
        out.back().exponent == -l.exponent) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return Morphism(&m.skeleton(), m.start(), std::move(out));
}

Morphism positive_loop(const SkeletonGraph& sk, const Chamber& v,
                       const Chamber& w) {
  if (v.id == w.id) return identity_at(sk, v);
  PositivePath there = enumerate_atoms(sk, v, w).front();
  PositivePath back = enumerate_atoms(sk, w, v).front();
  return compose(from_positive(there), from_positive(back));
}

namespace {

using LetterKey = std::vector<std::pair<int, int>>;  // (label, exponent)

LetterKey key_of(const Morphism& m) {
  LetterKey k;
  k.reserve(m.letters().size());
  for (const auto& l : m.letters()) k.emplace_back(l.arrow.label, l.exponent);
  return k;
}

// Rewrites reachable in one step: substitute any contiguous all-positive or
// all-negative atomic run by an equivalent atom, then free-reduce.
std::vector<Morphism> rewrite_neighbors(const Morphism& m) {
  const auto& sk = m.skeleton();
  const auto& arr = sk.arrangement();
  const auto& letters = m.letters();
  const int len = static_cast<int>(letters.size());
  std::vector<int> seq(len + 1);
  seq[0] = m.start();
  for (int t = 0; t < len; ++t) {
    seq[t + 1] = letters[t].exponent == 1 ? letters[t].arrow.target
                                          : letters[t].arrow.source;
  }

  std::vector<Morphism> out;
  auto splice = [&](int a, int b, const std::vector<Letter>& repl) {
    std::vector<Letter> next(letters.begin(), letters.begin() + a);
    next.insert(next.end(), repl.begin(), repl.end());
    next.insert(next.end(), letters.begin() + b, letters.end());
    out.push_back(free_reduce(Morphism(&sk, m.start(), std::move(next))));
  };

  for (int a = 0; a < len; ++a) {
    for (int b = a + 1; b <= len; ++b) {
      const int e = letters[a].exponent;
      if (letters[b - 1].exponent != e) break;
      bool uniform = true;
      for (int t = a; t < b; ++t) {
        if (letters[t].exponent != e) {
          uniform = false;
          break;
        }
      }
      if (!uniform) continue;
      if (e == 1) {
        if (b - a != separation(arr, arr.chamber(seq[a]), arr.chamber(seq[b]))
                         .size()) {
          continue;
        }
        for (const auto& alt :
             enumerate_atoms(sk, arr.chamber(seq[a]), arr.chamber(seq[b]))) {
          std::vector<Letter> repl;
          for (const auto& arrow : alt.arrows()) repl.push_back(Letter{arrow, 1});
          if (std::equal(repl.begin(), repl.end(), letters.begin() + a)) continue;
          splice(a, b, repl);
        }
      } else {
        // The run read backwards is a positive path seq[b] -> seq[a].
        if (b - a != separation(arr, arr.chamber(seq[b]), arr.chamber(seq[a]))
                         .size()) {
          continue;
        }
        for (const auto& alt :
             enumerate_atoms(sk, arr.chamber(seq[b]), arr.chamber(seq[a]))) {
          std::vector<Letter> repl;
          for (auto it = alt.arrows().rbegin(); it != alt.arrows().rend(); ++it) {
            repl.push_back(Letter{*it, -1});
          }
          if (std::equal(repl.begin(), repl.end(), letters.begin() + a)) continue;
          splice(a, b, repl);
        }
      }
    }
  }
  return out;
}

}  // namespace

Verdict equal_bounded(const Morphism& m1, const Morphism& m2,
                      std::size_t budget) {
  Morphism ra = free_reduce(m1);
  Morphism rb = free_reduce(m2);
  if (ra.start() != rb.start() || ra.end() != rb.end()) {
    return Verdict::unequal;
  }
  if (key_of(ra) == key_of(rb)) return Verdict::equal;
  if (ra.positive() && rb.positive()) {
    try {
      return equal_positive(to_positive(ra), to_positive(rb), budget,
                            EqualMethod::oracle)
                 ? Verdict::equal
                 : Verdict::unequal;
    } catch (const BudgetExceeded&) {
      return Verdict::inconclusive;
    }
  }

  // Meet-in-the-middle over atom substitutions. The move set has no
  // insertions, so exhaustion proves nothing and stays inconclusive.
  std::map<LetterKey, Morphism> seen_a{{key_of(ra), ra}};
  std::map<LetterKey, Morphism> seen_b{{key_of(rb), rb}};
  std::deque<const Morphism*> qa{&seen_a.begin()->second};
  std::deque<const Morphism*> qb{&seen_b.begin()->second};
  while (!qa.empty() || !qb.empty()) {
    bool from_a = !qa.empty() && (qb.empty() || seen_a.size() <= seen_b.size());
    auto& queue = from_a ? qa : qb;
    auto& mine = from_a ? seen_a : seen_b;
    auto& theirs = from_a ? seen_b : seen_a;
    const Morphism* cur = queue.front();
    queue.pop_front();
    for (const auto& next : rewrite_neighbors(*cur)) {
      LetterKey k = key_of(next);
      if (theirs.contains(k)) return Verdict::equal;
      auto [it, inserted] = mine.emplace(std::move(k), next);
      if (!inserted) continue;
      if (seen_a.size() + seen_b.size() > budget) return Verdict::inconclusive;
      queue.push_back(&it->second);
    }
  }
  return Verdict::inconclusive;
}

Morphism parse_morphism(const SkeletonGraph& sk, const Chamber& start,
                        const std::string& text) {
  std::vector<Letter> letters;
  int cur = start.id;
  if (!text.empty()) {
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, '.')) {
      bool inverse = !tok.empty() && tok.back() == '~';
      std::string core = inverse ? tok.substr(0, tok.size() - 1) : tok;
      if (core.size() < 2 || core[0] != 's') {
        throw Error("bad word token \"" + tok + "\"");
      }
      int label;
      size_t pos = 0;
      try {
        label = std::stoi(core.substr(1), &pos);
      } catch (const std::exception&) {
        throw Error("bad word token \"" + tok + "\"");
      }
      if (pos + 1 != core.size() || label < 1 || label > sk.labels()) {
        throw Error("bad word token \"" + tok + "\"");
      }
      if (inverse) {
        // The arrow into cur with this label is the reverse of the arrow out.
        const Arrow& a = sk.arrow(sk.arrow(cur, label).target, label);
        letters.push_back(Letter{a, -1});
        cur = a.source;
      } else {
        const Arrow& a = sk.arrow(cur, label);
        letters.push_back(Letter{a, 1});
        cur = a.target;
      }
    }
  }
  return Morphism(&sk, start.id, std::move(letters));
}

std::string format_morphism(const Morphism& m) {
  std::string out;
  for (size_t t = 0; t < m.letters().size(); ++t) {
    if (t) out += ".";
    out += "s" + std::to_string(m.letters()[t].arrow.label);
    if (m.letters()[t].exponent == -1) out += "~";
  }
  return out;
}

}  // namespace deligne
