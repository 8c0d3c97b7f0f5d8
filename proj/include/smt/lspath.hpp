#pragma once

#include <optional>
#include <span>
#include <vector>

#include "smt/rational.hpp"
#include "smt/weyl.hpp"

namespace smt {

enum class Ordering { Less, Equal, Greater, Incomparable };

/// A pair (decreasing coset chain, increasing rationals) of a given shape.
/// Cosets are ids in W/W_shape and must be strictly decreasing in the fixed
/// total order; cuts lie strictly inside (0,1), one fewer than cosets.
struct ConvexSubset {
  Weight shape;
  std::vector<int> cosets;
  std::vector<Rat> cuts;

  bool operator==(const ConvexSubset& o) const {
    return shape == o.shape && cosets == o.cosets && cuts == o.cuts;
  }
};

/// A ConvexSubset that passed the L-S conditions (strict Bruhat decrease and
/// the integrality condition on every segment). Only PathModel creates these.
struct LSPath : ConvexSubset {};

/// Sequence of indices into PathModel::paths() with e(pi_j) >= i(pi_{j+1}).
struct StandardSequence {
  std::vector<int> path_ids;
  bool operator==(const StandardSequence&) const = default;
};

/// All shape-λ path combinatorics: the coset space W/W_λ, the integrality
/// chain search, enumeration of B(λ), the two weighted lexicographic orders,
/// wedge products and standard sequences.
///
/// Everything is precomputed or memoized write-once; the model is read-only
/// after construction apart from the integrality caches.
class PathModel {
 public:
  PathModel(const WeylGroup& W, Weight lambda, long long path_bound = 2000000);

  const WeylGroup& group() const { return *W_; }
  const CosetSpace& cosets() const { return cosets_; }
  const Weight& shape() const { return lambda_; }
  long long path_bound() const { return path_bound_; }

  /// Fixed Bruhat-refining total order: by (length, canonical word).
  bool coset_total_greater(int a, int b) const;

  /// True iff some chain of reflections joining `from` down to `to` in
  /// W/W_λ has a·<x(λ), β∨> integral at every step.
  bool check_integrality(int from, int to, const Rat& a) const;

  /// B(λ), sorted decreasing in the total weighted-lex order.
  const std::vector<LSPath>& paths() const { return paths_; }
  int index_of(const ConvexSubset& p) const;

  bool is_convex_subset(const ConvexSubset& p) const;
  bool is_ls_path(const ConvexSubset& p) const;
  LSPath validated(const ConvexSubset& p) const;
  LSPath singleton(int coset) const;

  Weight weight(const ConvexSubset& p) const;
  int initial(const ConvexSubset& p) const { return p.cosets.front(); }
  int final(const ConvexSubset& p) const { return p.cosets.back(); }

  /// τ >= i(π) and e(π) >= κ, all in W/W_λ.
  bool is_standard_on(const LSPath& p, int tau, int kappa) const;

  Ordering cmp_lex(const ConvexSubset& a, const ConvexSubset& b, bool total = false) const;
  Ordering cmp_revlex(const ConvexSubset& a, const ConvexSubset& b, bool total = false) const;

  /// m-fold wedge product; result has shape m·λ over the same coset space.
  ConvexSubset wedge(std::span<const ConvexSubset> parts) const;
  ConvexSubset wedge(const ConvexSubset& a, const ConvexSubset& b) const;
  /// The merged coset sequence of the would-be wedge is strictly decreasing
  /// in the Bruhat order (the paper's "same support" condition).
  bool same_support(std::span<const ConvexSubset> parts) const;

  /// Inverse of the m-fold wedge on B(mλ); throws if `p` is not the wedge of
  /// a standard sequence of shape-λ paths (equivalently not in B(mλ)).
  std::vector<LSPath> unwedge(const ConvexSubset& p, int m) const;

  /// All standard sequences of length m with τ >= i and e >= κ
  /// (tau = -1 / kappa = -1 drop the respective constraint).
  std::vector<StandardSequence> standard_sequences(int m, int tau = -1, int kappa = -1) const;

  Weight sequence_weight(const StandardSequence& s) const;
  int sequence_initial(const StandardSequence& s) const;
  int sequence_final(const StandardSequence& s) const;

  struct PathStat {
    int i;
    int e;
    Weight wt;
  };
  const std::vector<PathStat>& stats() const { return stats_; }

  // Saturated subsets of B(λ), given as sets of path indices. The orders
  // used are the partial (Bruhat-based) weighted-lex orders.
  bool is_positive_saturated(const std::vector<int>& ids) const;
  bool is_negative_saturated(const std::vector<int>& ids) const;
  bool is_maximally_positive_saturated(const std::vector<int>& ids) const;
  std::vector<int> positive_closure(const std::vector<int>& ids) const;
  std::vector<int> negative_closure(const std::vector<int>& ids) const;

 private:
  const WeylGroup* W_;
  Weight lambda_;
  long long path_bound_;
  CosetSpace cosets_;
  int max_pairing_ = 0;                       // max <λ, β∨> over positive roots
  std::vector<std::vector<std::pair<int, int>>> covers_;  // x -> [(y, n)], covers below
  std::vector<Rat> candidate_cuts_;           // reduced p/q, q <= max_pairing_
  mutable std::vector<std::vector<char>> reach_;  // [q-1][x*C+y]: 0 unknown 1 yes 2 no
  std::vector<LSPath> paths_;
  std::vector<PathStat> stats_;

  bool reachable(int from, int to, long q) const;
  void enumerate();
  Ordering cmp_entries(const std::vector<int>& ca, const std::vector<Rat>& xa,
                       const std::vector<int>& cb, const std::vector<Rat>& xb,
                       bool total) const;
};

}  // namespace smt
