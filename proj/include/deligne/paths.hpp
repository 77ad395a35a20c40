#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "deligne/skeleton.hpp"

namespace deligne {

using Word = std::vector<int>;  // arrow labels in application order

inline constexpr std::size_t kDefaultBudget = 1'000'000;

// Composable sequence of skeleton arrows, applied first-to-last.
class PositivePath {
 public:
  PositivePath(const SkeletonGraph* sk, int start, std::vector<Arrow> arrows);

  const SkeletonGraph& skeleton() const { return *sk_; }
  int start() const { return start_; }
  int end() const { return arrows_.empty() ? start_ : arrows_.back().target; }
  int length() const { return static_cast<int>(arrows_.size()); }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  Word word() const;
  // Chamber visited after the first t arrows.
  int chamber_at(int t) const;
  PositivePath prefix(int len) const;
  PositivePath suffix(int from) const;

 private:
  const SkeletonGraph* sk_;
  int start_;
  std::vector<Arrow> arrows_;
};

PositivePath path_from_word(const SkeletonGraph& sk, const Chamber& start,
                            const Word& word);

bool is_atom(const PositivePath& p);

// All minimal positive paths v -> w, in lexicographic word order.
std::vector<PositivePath> enumerate_atoms(const SkeletonGraph& sk,
                                          const Chamber& v, const Chamber& w);

// Full equivalence class of a positive path, materialized by BFS rewriting.
// This is the ground-truth oracle for path equality.
class EquivClass {
 public:
  EquivClass(const SkeletonGraph* sk, int start, std::vector<Word> members);
  const SkeletonGraph& skeleton() const { return *sk_; }
  int start() const { return start_; }
  const std::vector<Word>& members() const { return members_; }
  const Word& canonical() const { return members_.front(); }
  bool contains(const Word& w) const;

 private:
  const SkeletonGraph* sk_;
  int start_;
  std::vector<Word> members_;  // sorted lexicographically
};

EquivClass equiv_class(const PositivePath& p,
                       std::size_t budget = kDefaultBudget);

enum class EqualMethod { normal_form, oracle };

bool equal_positive(const PositivePath& p, const PositivePath& q,
                    std::size_t budget = kDefaultBudget,
                    EqualMethod method = EqualMethod::normal_form);

bool begins_with(const PositivePath& p, const PositivePath& atom,
                 std::size_t budget = kDefaultBudget);

// One representative atom per class that p begins with, sorted by
// (length, target chamber id). Always contains the identity atom.
std::vector<PositivePath> begin_set(const PositivePath& p,
                                    std::size_t budget = kDefaultBudget);

struct NormalForm {
  std::vector<PositivePath> factors;  // composable atoms, applied first-to-last
};

NormalForm deligne_normal_form(const PositivePath& p,
                               std::size_t budget = kDefaultBudget);

std::string render_normal_form(const NormalForm& nf);

struct BraidResult {
  int m = 0;
  Word word_a;
  Word word_b;
  bool equivalent = false;
};

BraidResult braid_relation(const SkeletonGraph& sk, const Chamber& v, int i,
                           int j);

const Chamber& weak_order_join(const Arrangement& arr, const Chamber& base,
                               const Chamber& w1, const Chamber& w2);

Word parse_word(const std::string& text);
std::string format_word(const Word& w);

}  // namespace deligne
