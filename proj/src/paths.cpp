#include "deligne/paths.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace deligne {

PositivePath::PositivePath(const SkeletonGraph* sk, int start,
                           std::vector<Arrow> arrows)
    : sk_(sk), start_(start), arrows_(std::move(arrows)) {
  int cur = start_;
  for (const auto& a : arrows_) {
    if (a.source != cur) throw Error("arrows do not compose");
    cur = a.target;
  }
}

Word PositivePath::word() const {
  Word w;
  w.reserve(arrows_.size());
  for (const auto& a : arrows_) w.push_back(a.label);
  return w;
}

int PositivePath::chamber_at(int t) const {
  return t == 0 ? start_ : arrows_[t - 1].target;
}

PositivePath PositivePath::prefix(int len) const {
  return PositivePath(sk_, start_,
                      {arrows_.begin(), arrows_.begin() + len});
}

PositivePath PositivePath::suffix(int from) const {
  return PositivePath(sk_, chamber_at(from),
                      {arrows_.begin() + from, arrows_.end()});
}

PositivePath path_from_word(const SkeletonGraph& sk, const Chamber& start,
                            const Word& word) {
  std::vector<Arrow> arrows;
  arrows.reserve(word.size());
  int cur = start.id;
  for (int label : word) {
    if (label < 1 || label > sk.labels()) {
      throw Error("label out of range in word");
    }
    const Arrow& a = sk.arrow(cur, label);
    arrows.push_back(a);
    cur = a.target;
  }
  return PositivePath(&sk, start.id, std::move(arrows));
}

namespace {

int distance(const Arrangement& arr, int v, int w) {
  return separation(arr, arr.chamber(v), arr.chamber(w)).size();
}

}  // namespace

bool is_atom(const PositivePath& p) {
  const auto& arr = p.skeleton().arrangement();
  return p.length() == distance(arr, p.start(), p.end());
}

std::vector<PositivePath> enumerate_atoms(const SkeletonGraph& sk,
                                          const Chamber& v, const Chamber& w) {
  const auto& arr = sk.arrangement();
  std::vector<PositivePath> out;
  std::vector<Arrow> stack;
  // Minimal paths cross exactly the separating walls, so the DFS only takes
  // arrows whose wall still separates the current chamber from the target.
  auto dfs = [&](auto&& self, int cur) -> void {
    if (cur == w.id) {
      out.emplace_back(&sk, v.id, stack);
      return;
    }
    SeparationSet sep = separation(arr, arr.chamber(cur), w);
    for (int label = 1; label <= sk.labels(); ++label) {
      const Arrow& a = sk.arrow(cur, label);
      if (!sep.contains(a.wall)) continue;
      stack.push_back(a);
      self(self, a.target);
      stack.pop_back();
    }
  };
  dfs(dfs, v.id);
  return out;
}

EquivClass::EquivClass(const SkeletonGraph* sk, int start,
                       std::vector<Word> members)
    : sk_(sk), start_(start), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
}

bool EquivClass::contains(const Word& w) const {
  return std::binary_search(members_.begin(), members_.end(), w);
}

EquivClass equiv_class(const PositivePath& p, std::size_t budget) {
  const auto& sk = p.skeleton();
  const auto& arr = sk.arrangement();
  const int len = p.length();
  const Word w0 = p.word();

  auto chambers_of = [&](const Word& w) {
    std::vector<int> seq(w.size() + 1);
    seq[0] = p.start();
    for (size_t t = 0; t < w.size(); ++t) {
      seq[t + 1] = sk.arrow(seq[t], w[t]).target;
    }
    return seq;
  };

  std::set<Word> seen{w0};
  std::deque<Word> queue{w0};
  while (!queue.empty()) {
    Word w = std::move(queue.front());
    queue.pop_front();
    std::vector<int> seq = chambers_of(w);
    // Rewriting move: swap any contiguous atomic subpath for another atom
    // with the same endpoints.
    for (int a = 0; a < len; ++a) {
      for (int b = a + 2; b <= len; ++b) {
        if (b - a != distance(arr, seq[a], seq[b])) continue;
        for (const auto& alt :
             enumerate_atoms(sk, arr.chamber(seq[a]), arr.chamber(seq[b]))) {
          Word aw = alt.word();
          if (std::equal(aw.begin(), aw.end(), w.begin() + a)) continue;
          Word next(w.begin(), w.begin() + a);
          next.insert(next.end(), aw.begin(), aw.end());
          next.insert(next.end(), w.begin() + b, w.end());
          if (seen.insert(next).second) {
            if (seen.size() > budget) throw BudgetExceeded();
            queue.push_back(std::move(next));
          }
        }
      }
    }
  }
  return EquivClass(&sk, p.start(), {seen.begin(), seen.end()});
}

bool equal_positive(const PositivePath& p, const PositivePath& q,
                    std::size_t budget, EqualMethod method) {
  if (p.start() != q.start() || p.end() != q.end()) return false;
  if (p.length() != q.length()) return false;
  if (p.word() == q.word()) return true;
  if (method == EqualMethod::oracle) {
    return equiv_class(p, budget).contains(q.word());
  }
  NormalForm np = deligne_normal_form(p, budget);
  NormalForm nq = deligne_normal_form(q, budget);
  if (np.factors.size() != nq.factors.size()) return false;
  for (size_t t = 0; t < np.factors.size(); ++t) {
    // Atoms with equal endpoints are equivalent, so endpoints suffice.
    if (np.factors[t].start() != nq.factors[t].start()) return false;
    if (np.factors[t].end() != nq.factors[t].end()) return false;
  }
  return true;
}

bool begins_with(const PositivePath& p, const PositivePath& atom,
                 std::size_t budget) {
  if (p.start() != atom.start()) throw EndpointMismatch("paths start at different chambers");
  const int la = atom.length();
  if (la > p.length()) return false;
  EquivClass cls = equiv_class(p, budget);
  const auto& sk = p.skeleton();
  for (const auto& m : cls.members()) {
    int cur = p.start();
    for (int t = 0; t < la; ++t) cur = sk.arrow(cur, m[t]).target;
    if (cur == atom.end()) return true;
  }
  return false;
}

namespace {

// Targets of atomic prefixes over all class members, as (length, chamber).
std::vector<std::pair<int, int>> begin_pairs(const EquivClass& cls) {
  const auto& sk = cls.skeleton();
  const auto& arr = sk.arrangement();
  std::set<std::pair<int, int>> found;
  for (const auto& m : cls.members()) {
    int cur = cls.start();
    found.emplace(0, cur);
    for (size_t t = 0; t < m.size(); ++t) {
      cur = sk.arrow(cur, m[t]).target;
      int l = static_cast<int>(t) + 1;
      if (l == distance(arr, cls.start(), cur)) found.emplace(l, cur);
    }
  }
  return {found.begin(), found.end()};
}

}  // namespace

std::vector<PositivePath> begin_set(const PositivePath& p,
                                    std::size_t budget) {
  const auto& sk = p.skeleton();
  const auto& arr = sk.arrangement();
  std::vector<PositivePath> out;
  for (const auto& [len, target] : begin_pairs(equiv_class(p, budget))) {
    (void)len;
    out.push_back(
        enumerate_atoms(sk, arr.chamber(p.start()), arr.chamber(target))
            .front());
  }
  return out;
}

NormalForm deligne_normal_form(const PositivePath& p, std::size_t budget) {
  const auto& sk = p.skeleton();
  NormalForm nf;
  PositivePath rest = p;
  while (rest.length() > 0) {
    if (is_atom(rest)) {
      nf.factors.push_back(rest);
      break;
    }
    EquivClass cls = equiv_class(rest, budget);
    auto pairs = begin_pairs(cls);
    int lstar = 0;
    for (const auto& [l, c] : pairs) {
      (void)c;
      lstar = std::max(lstar, l);
    }
    std::vector<int> heads;
    for (const auto& [l, c] : pairs) {
      if (l == lstar) heads.push_back(c);
    }
    if (heads.size() != 1) {
      throw NonUniqueHead("maximal beginning atoms end at different chambers");
    }
    const int head = heads.front();

    // Witness: the least member that realizes the head and whose next arrow
    // recrosses the wall just crossed, so the following factor starts there.
    const Word* witness = nullptr;
    for (const auto& m : cls.members()) {
      int cur = rest.start();
      int last_wall = -1;
      bool ok = true;
      for (int t = 0; t < lstar; ++t) {
        const Arrow& a = sk.arrow(cur, m[t]);
        last_wall = a.wall;
        cur = a.target;
      }
      ok = cur == head && sk.arrow(cur, m[lstar]).wall == last_wall;
      if (ok) {
        witness = &m;
        break;
      }
    }
    if (!witness) throw Error("no chaining witness for the head factor");

    PositivePath member = path_from_word(sk, sk.arrangement().chamber(rest.start()), *witness);
    nf.factors.push_back(member.prefix(lstar));
    rest = member.suffix(lstar);
  }
  return nf;
}

std::string render_normal_form(const NormalForm& nf) {
  if (nf.factors.empty()) return "()";
  std::string out;
  for (size_t t = 0; t < nf.factors.size(); ++t) {
    if (t) out += "|";
    out += "(" + format_word(nf.factors[t].word()) + ")";
  }
  return out;
}

BraidResult braid_relation(const SkeletonGraph& sk, const Chamber& v, int i,
                           int j) {
  if (i == j) throw Error("braid labels must differ");
  const auto& arr = sk.arrangement();
  auto alternating = [](int first, int second, int m) {
    Word w(m);
    for (int t = 0; t < m; ++t) w[t] = (t % 2 == 0) ? first : second;
    return w;
  };
  for (int m = 2; m <= 2 * arr.size(); ++m) {
    Word wa = alternating(i, j, m);
    Word wb = alternating(j, i, m);
    PositivePath pa = path_from_word(sk, v, wa);
    PositivePath pb = path_from_word(sk, v, wb);
    if (pa.end() != pb.end() || !is_atom(pa) || !is_atom(pb)) continue;
    return BraidResult{m, wa, wb,
                       equal_positive(pa, pb, kDefaultBudget,
                                      EqualMethod::oracle)};
  }
  throw NoClosure("no common atomic closure for labels " + std::to_string(i) +
                  "," + std::to_string(j));
}

const Chamber& weak_order_join(const Arrangement& arr, const Chamber& base,
                               const Chamber& w1, const Chamber& w2) {
  SeparationSet want =
      separation(arr, base, w1).united(separation(arr, base, w2));
  const auto& cx = arr.chambers();
  std::vector<int> candidates;
  for (const auto& c : cx.chambers) {
    if (want.subset_of(separation(arr, base, c))) candidates.push_back(c.id);
  }
  if (candidates.empty()) throw NoJoin("no common upper bound");
  for (int cand : candidates) {
    SeparationSet s = separation(arr, base, arr.chamber(cand));
    bool minimal = true;
    for (int other : candidates) {
      if (!s.subset_of(separation(arr, base, arr.chamber(other)))) {
        minimal = false;
        break;
      }
    }
    if (minimal) return arr.chamber(cand);
  }
  throw NoJoin("upper bounds have no least element");
}

Word parse_word(const std::string& text) {
  Word w;
  if (text.empty()) return w;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, '.')) {
    if (tok.size() < 2 || tok[0] != 's') throw Error("bad word token \"" + tok + "\"");
    size_t pos = 0;
    int label;
    try {
      label = std::stoi(tok.substr(1), &pos);
    } catch (const std::exception&) {
      throw Error("bad word token \"" + tok + "\"");
    }
    if (pos + 1 != tok.size() || label < 1) throw Error("bad word token \"" + tok + "\"");
    w.push_back(label);
  }
  return w;
}

std::string format_word(const Word& w) {
  std::string out;
  for (size_t t = 0; t < w.size(); ++t) {
    if (t) out += ".";
    out += "s" + std::to_string(w[t]);
  }
  return out;
}

}  // namespace deligne
