#pragma once

#include <map>

#include "smt/richardson.hpp"

namespace smt {

/// The Pieri–Chevalley data of [O_{X_τ}]·[L_λ] in T-equivariant K-theory:
/// row κ carries C_{τ,κ}^λ = Σ_{i(π)≤τ, e(π)=κ} e^{π(1)} and the count
/// a_{τ,κ}^λ = #{π : τ ≥ i(π), e(π) = κ}.
struct PieriChevalleyTable {
  int tau = 0;
  Weight lambda;
  std::map<int, FormalCharacter> rows;
  std::map<int, long long> counts;
};

PieriChevalleyTable pieri_chevalley(const PathModel& pm, int tau_coset);

/// Row-sum identity Σ_κ C_{τ,κ}^λ = Char V_τ(λ), the Demazure side computed
/// by divided-difference operators.
bool pittie_ram_sum_check(const PathModel& pm, int tau_coset);

/// Both counting identities of the diagonal degeneration at degree n, plus
/// their character refinements.
struct DegenerationResult {
  long long pairs = 0;        // # degree-n pairs with e(π̄1) ≥ i(π̄2)
  long long monomials_2n = 0; // # degree-2n standard monomials on X
  long long split = 0;        // Σ_σ (# on X_σ^κ with i = σ) · (# on X_τ^σ)
  bool counts_ok = false;
  bool chars_ok = false;
  bool ok() const { return counts_ok && chars_ok; }
};

DegenerationResult degeneration_check(const RichardsonModel& rm, const RichardsonSpec& s, int n);

}  // namespace smt
