#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "smt/root_system.hpp"

namespace smt {

/// The finite Weyl group of a root system, fully enumerated.
///
/// Elements are canonicalized by their integer matrix acting on the weight
/// lattice in fundamental-weight coordinates and referred to by dense ids,
/// ordered by (length, lexicographic canonical word). Everything except the
/// Bruhat caches is built eagerly in the constructor; instances are
/// immutable and shareable afterwards.
class WeylGroup {
 public:
  struct Options {
    long long max_order = 40320;    // refuse to enumerate beyond this
    long long table_bound = 5040;   // full Bruhat bit table up to this size
  };

  explicit WeylGroup(RootSystem rs) : WeylGroup(std::move(rs), Options{}) {}
  WeylGroup(RootSystem rs, Options opt);

  const RootSystem& roots() const { return rs_; }
  int rank() const { return rs_.rank(); }
  int size() const { return static_cast<int>(mats_.size()); }
  int identity() const { return 0; }
  int longest() const { return longest_; }

  int length(int w) const { return lengths_[w]; }
  const std::vector<int>& word(int w) const { return words_[w]; }
  const Eigen::MatrixXi& matrix(int w) const { return mats_[w]; }

  int mult_gen_right(int w, int i) const { return right_[w][i]; }
  int mult_gen_left(int i, int w) const { return left_[w][i]; }
  int mult(int u, int v) const;
  int inverse(int w) const { return inverse_[w]; }

  bool right_descent(int w, int i) const { return lengths_[right_[w][i]] < lengths_[w]; }
  bool left_descent(int w, int i) const { return lengths_[left_[w][i]] < lengths_[w]; }

  Weight apply(int w, const Weight& mu) const { return Weight(mats_[w] * mu.coords); }

  /// Element id of the reflection s_beta.
  int reflection_element(const Root& beta) const;

  /// Number of positive roots sent to negative roots; equals length(w).
  int inversion_count(int w) const;

  /// u <= v in Bruhat order.
  bool bruhat_leq(int u, int v) const;

  std::optional<int> find(const Eigen::MatrixXi& m) const;
  int element_of_word(const std::vector<int>& w) const;

  /// "s1.s2.s1" serialization; identity is "e". Letters are 1-based.
  std::string format(int w) const;
  int parse(const std::string& s) const;

 private:
  RootSystem rs_;
  Options opt_;
  std::vector<Eigen::MatrixXi> mats_;
  std::vector<int> lengths_;
  std::vector<std::vector<int>> words_;
  std::vector<std::vector<int>> right_;  // right_[w][i] = w * s_i
  std::vector<std::vector<int>> left_;   // left_[w][i]  = s_i * w
  std::vector<int> inverse_;
  int longest_ = 0;
  std::map<std::vector<int>, int> index_;  // flattened matrix -> id

  // Bruhat order: full bit table for small groups, memoized recursion beyond.
  bool has_table_ = false;
  std::size_t row_words_ = 0;
  std::vector<std::uint64_t> table_;
  mutable std::unordered_map<std::uint64_t, bool> bruhat_memo_;
  mutable std::mutex memo_mutex_;

  std::vector<int> key_of(const Eigen::MatrixXi& m) const;
  void build_bruhat_table();
  bool bruhat_leq_recursive(int u, int v) const;
};

/// The quotient W/W_Q by a parabolic subgroup, as the set of minimal-length
/// coset representatives with the induced Bruhat order. Coset ids are dense,
/// ordered by (length, canonical word) of the representative.
class CosetSpace {
 public:
  CosetSpace(const WeylGroup& W, std::vector<int> parabolic);

  const WeylGroup& group() const { return *W_; }
  const std::vector<int>& parabolic() const { return parabolic_; }
  int size() const { return static_cast<int>(reps_.size()); }

  int min_rep(int c) const { return reps_[c]; }
  int length(int c) const { return W_->length(reps_[c]); }
  int coset_of(int w) const { return project_[w]; }
  int identity_coset() const { return coset_of(W_->identity()); }
  int top_coset() const { return coset_of(W_->longest()); }

  bool leq(int a, int b) const { return W_->bruhat_leq(reps_[a], reps_[b]); }
  bool lt(int a, int b) const { return a != b && leq(a, b); }

  std::string format(int c) const { return W_->format(reps_[c]); }

 private:
  const WeylGroup* W_;
  std::vector<int> parabolic_;
  std::vector<int> reps_;     // coset id -> min rep element id
  std::vector<int> project_;  // element id -> coset id
};

/// Fine-to-coarse projection of cosets: W_Qfine must be contained in W_Qcoarse.
int project_coset(const CosetSpace& fine, const CosetSpace& coarse, int fine_coset);

/// All fine cosets lying over the given coarse coset.
std::vector<int> coset_lifts(const CosetSpace& fine, const CosetSpace& coarse, int coarse_coset);

}  // namespace smt
