#pragma once

#include <gmpxx.h>

#include "smt/formal_character.hpp"
#include "smt/lspath.hpp"
#include "smt/weyl.hpp"

namespace smt {

/// dim V(λ) by the Weyl dimension formula (exact).
mpz_class weyl_dim(const RootSystem& rs, const Weight& lambda);

/// Char V(λ) by the Weyl character formula: alternating sums over W divided
/// exactly in Z[Λ]. Independent of the path model.
FormalCharacter weyl_character(const WeylGroup& W, const Weight& lambda);

/// Image of a character under w.
FormalCharacter apply_weyl(const WeylGroup& W, int w, const FormalCharacter& f);

/// The divided-difference operator Λ_i f = (f - e^{-α_i} s_i f)/(1 - e^{-α_i}),
/// computed termwise by exact geometric-series summation.
FormalCharacter demazure_operator(const RootSystem& rs, int i, const FormalCharacter& f);

/// Char V_τ(λ): Demazure operators applied along a reduced word of τ to e^λ.
FormalCharacter demazure_character(const WeylGroup& W, int tau_element, const Weight& lambda);

/// Exact division in Z[Λ]; throws std::domain_error if not exact.
FormalCharacter divide_exact(FormalCharacter num, const FormalCharacter& den);

/// Σ_{π∈B(λ)} e^{π(1)}.
FormalCharacter char_from_paths(const PathModel& pm);

/// Σ over standard sequences of length m of e^{weight}.
FormalCharacter char_standard_sequences(const PathModel& pm, int m);

/// Σ_{π∈B(λ), i(π) ≤ τ} e^{π(1)} — the path-model side of the Demazure
/// character identity. τ is a coset of W/W_λ.
FormalCharacter demazure_char_from_paths(const PathModel& pm, int tau_coset);

}  // namespace smt
