#pragma once

#include "deligne/paths.hpp"

namespace deligne {

// Arrow traversed forwards (+1) or backwards (-1).
struct Letter {
  Arrow arrow;
  int exponent = 1;
  bool operator==(const Letter&) const = default;
};

// Word over arrows and their formal inverses, applied first-to-last.
class Morphism {
 public:
  Morphism(const SkeletonGraph* sk, int start, std::vector<Letter> letters);

  const SkeletonGraph& skeleton() const { return *sk_; }
  int start() const { return start_; }
  int end() const;
  int length() const { return static_cast<int>(letters_.size()); }
  const std::vector<Letter>& letters() const { return letters_; }
  bool positive() const;
  bool operator==(const Morphism& o) const {
    return start_ == o.start_ && letters_ == o.letters_;
  }

 private:
  const SkeletonGraph* sk_;
  int start_;
  std::vector<Letter> letters_;
};

Morphism identity_at(const SkeletonGraph& sk, const Chamber& c);
Morphism from_positive(const PositivePath& p);
// Positive part of a morphism with no inverse letters.
PositivePath to_positive(const Morphism& m);

Morphism compose(const Morphism& m1, const Morphism& m2);
Morphism invert(const Morphism& m);
Morphism free_reduce(const Morphism& m);

// Loop at v through w: least atom v->w followed by least atom w->v.
Morphism positive_loop(const SkeletonGraph& sk, const Chamber& v,
                       const Chamber& w);

enum class Verdict { equal, unequal, inconclusive };

// Bounded-search equality in the groupoid. Verdicts are never wrong;
// inconclusive means the budget ran out before a decision.
Verdict equal_bounded(const Morphism& m1, const Morphism& m2,
                      std::size_t budget = kDefaultBudget);

Morphism parse_morphism(const SkeletonGraph& sk, const Chamber& start,
                        const std::string& text);
std::string format_morphism(const Morphism& m);

}  // namespace deligne
