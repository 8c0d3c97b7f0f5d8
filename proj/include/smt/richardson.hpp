#pragma once

#include <optional>
#include <variant>

#include "smt/characters.hpp"
#include "smt/lspath.hpp"

namespace smt {

/// A Richardson variety X_tau^kappa given by a pair of cosets of a common
/// parabolic quotient (tau the Schubert index, kappa the opposite one).
struct RichardsonSpec {
  int tau = 0;
  int kappa = 0;
  bool operator==(const RichardsonSpec&) const = default;
  auto operator<=>(const RichardsonSpec&) const = default;
};

/// Finite union of Richardson varieties over a common quotient, stored by
/// its maximal components (empty and subsumed components pruned).
struct RichardsonUnion {
  std::vector<RichardsonSpec> comps;
  bool empty() const { return comps.empty(); }
  bool operator==(const RichardsonUnion&) const = default;
};

struct FiltrationEntry {
  int endpoint;  // e(pi), a coset
  Weight twist;  // -pi(1)
  bool operator==(const FiltrationEntry&) const = default;
};

// Pure coset-poset operations, shared by the regular and non-regular cases.
std::optional<int> richardson_dimension(const CosetSpace& Q, const RichardsonSpec& s);
RichardsonUnion make_union(const CosetSpace& Q, std::vector<RichardsonSpec> comps);
RichardsonUnion union_of(const CosetSpace& Q, const RichardsonUnion& a, const RichardsonUnion& b);
RichardsonUnion intersect(const CosetSpace& Q, const RichardsonUnion& a,
                          const RichardsonUnion& b);
RichardsonUnion boundary_plus(const CosetSpace& Q, const RichardsonSpec& s);
RichardsonUnion boundary_minus(const CosetSpace& Q, const RichardsonSpec& s);
/// All tau equal or all kappa equal (a single component is pointed).
bool is_pointed(const RichardsonUnion& u);

/// Standard monomial counting on (unions of) Richardson varieties for a
/// Q-regular shape: the PathModel's quotient is W/W_λ = W/W_Q.
class RichardsonModel {
 public:
  explicit RichardsonModel(const PathModel& pm) : pm_(&pm) {}

  const PathModel& path_model() const { return *pm_; }
  const CosetSpace& cosets() const { return pm_->cosets(); }

  std::optional<int> dimension(const RichardsonSpec& s) const {
    return richardson_dimension(cosets(), s);
  }

  /// Number of degree-m standard monomials on the union (m = 0 counts the
  /// constant on a nonempty union).
  long long count(const RichardsonUnion& u, int m) const;
  long long count(const RichardsonSpec& s, int m) const;
  FormalCharacter char_of(const RichardsonUnion& u, int m) const;
  FormalCharacter char_of(const RichardsonSpec& s, int m) const;

  /// Multiset {(e(pi), -pi(1))} over paths standard on X with i(pi) = tau.
  std::vector<FiltrationEntry> pieri_filtration(const RichardsonSpec& s) const;

  /// h_X(m) = h_{∂+X}(m) + Σ_entries h_{X_{e(π)}^κ}(m-1) for 1 <= m <= m_max.
  bool hilbert_recursion_check(const RichardsonSpec& s, int m_max) const;

  /// Saturated-set chain S_0 ⊂ S_1 ⊂ ... ⊂ S_N = {π : i(π)=τ}, obtained by
  /// deleting one total-order-minimal element at a time.
  std::vector<std::vector<int>> saturated_chain(int tau) const;

  /// Degree-m tables indexed by (initial, final) coset of the sequence.
  const std::vector<std::vector<long long>>& ie_counts(int m) const;
  const std::vector<std::vector<FormalCharacter>>& ie_chars(int m) const;

 private:
  const PathModel* pm_;
  mutable std::vector<std::vector<std::vector<long long>>> count_tables_;
  mutable std::vector<std::vector<std::vector<FormalCharacter>>> char_tables_;
};

/// Non-regular standard monomial theory: paths of shape λ on Richardson
/// varieties in G/Q with W_Q ⊆ W_λ, via defining chains in W/W_Q.
class NonRegularModel {
 public:
  NonRegularModel(const CosetSpace& Q, const PathModel& pm);

  const CosetSpace& Q() const { return *Q_; }
  const PathModel& path_model() const { return *pm_; }

  /// Lifts of a W/W_λ coset into W/W_Q.
  const std::vector<int>& lifts(int lambda_coset) const { return lifts_[lambda_coset]; }
  int project(int q_coset) const { return proj_[q_coset]; }

  /// Componentwise-maximal defining chain of pi on X_tau^kappa (greedy from
  /// the top), or nullopt when pi is not standard there.
  std::optional<std::vector<int>> max_defining_chain(const LSPath& pi, int tau, int kappa) const;
  std::optional<std::vector<int>> min_defining_chain(const LSPath& pi, int tau, int kappa) const;
  bool is_standard(const LSPath& pi, int tau, int kappa) const;

  /// Brute-force enumeration of every defining chain (test oracle).
  std::vector<std::vector<int>> all_defining_chains(const LSPath& pi, int tau, int kappa) const;

  struct LambdaBoundary {
    bool trivial_bundle = false;  // projection image is a point; no boundary
    RichardsonUnion boundary;     // pointed union over Q otherwise
  };
  LambdaBoundary lambda_boundary(const RichardsonSpec& s) const;

  /// Degree-m standard monomials of shape (λ,...,λ) on a pointed union,
  /// standardness via defining chains on at least one component.
  long long count_nonregular(const RichardsonUnion& pointed, int m) const;

  /// Standard monomials of shape (0, λ, mρ): p_π then m paths of the
  /// Q-regular shape of rho_pm (whose quotient must be W/W_Q).
  long long count_mixed_right(const RichardsonUnion& pointed, const PathModel& rho_pm,
                              int m) const;
  /// Mirrored shape (mρ, λ, 0).
  long long count_mixed_left(const RichardsonUnion& pointed, const PathModel& rho_pm,
                             int m) const;

  struct RecursionCheck {
    bool skipped = false;  // trivial line bundle
    bool ok = true;
  };
  /// Counting identity of the λ-boundary filtration, all terms as
  /// shape-(0,λ,mρ) standard monomial counts, for 1 <= m <= m_max.
  RecursionCheck filtration_recursion_check(const RichardsonSpec& s, const PathModel& rho_pm,
                                            int m_max) const;

  /// Maximal lift of lambda_coset below bound / minimal lift above bound.
  std::optional<int> max_lift_below(int lambda_coset, int bound) const;
  std::optional<int> min_lift_above(int lambda_coset, int bound) const;
  /// End of the maximal defining chain bounded above by tau only.
  std::optional<int> max_chain_end(const LSPath& pi, int tau) const;
  /// Top of the minimal defining chain bounded below by kappa only.
  std::optional<int> min_chain_top(const LSPath& pi, int kappa) const;

 private:
  const CosetSpace* Q_;
  const PathModel* pm_;
  std::vector<std::vector<int>> lifts_;  // lambda coset -> Q cosets above it
  std::vector<int> proj_;                // Q coset -> lambda coset
};

}  // namespace smt
