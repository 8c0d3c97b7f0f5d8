#include "smt/characters.hpp"

#include <stdexcept>

namespace smt {

mpz_class weyl_dim(const RootSystem& rs, const Weight& lambda) {
  if (!lambda.dominant()) throw std::invalid_argument("weyl_dim: weight not dominant");
  Weight lr = lambda + rs.rho();
  mpz_class num = 1, den = 1;
  for (const Root& beta : rs.positive_roots()) {
    num *= rs.pair(lr, beta);
    den *= rs.pair(rs.rho(), beta);
  }
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0) throw std::logic_error("weyl_dim: non-integral quotient");
  return q;
}

FormalCharacter divide_exact(FormalCharacter num, const FormalCharacter& den) {
  if (den.empty()) throw std::domain_error("divide_exact: zero divisor");
  // Leading term under the lex order on weights (a total group order), so
  // leading terms are multiplicative and the division algorithm terminates
  // exactly when the division is exact.
  auto lead = [](const FormalCharacter& f) { return *f.terms().rbegin(); };
  const auto [dw, dc] = lead(den);
  FormalCharacter quot;
  long long guard = 0;
  while (!num.empty()) {
    if (++guard > 20000000) throw std::domain_error("divide_exact: division does not terminate");
    const auto [nw, nc] = lead(num);
    if (nc % dc != 0) throw std::domain_error("divide_exact: non-exact coefficient");
    Weight qw = nw - dw;
    long long qc = nc / dc;
    quot.add(qw, qc);
    num -= den.shifted(qw).scaled(qc);
  }
  return quot;
}

FormalCharacter weyl_character(const WeylGroup& W, const Weight& lambda) {
  if (!lambda.dominant()) throw std::invalid_argument("weyl_character: weight not dominant");
  const Weight rho = W.roots().rho();
  FormalCharacter num, den;
  for (int w = 0; w < W.size(); ++w) {
    long long sign = W.length(w) % 2 == 0 ? 1 : -1;
    num.add(W.apply(w, lambda + rho), sign);
    den.add(W.apply(w, rho), sign);
  }
  return divide_exact(std::move(num), den);
}

FormalCharacter apply_weyl(const WeylGroup& W, int w, const FormalCharacter& f) {
  FormalCharacter out;
  for (const auto& [mu, c] : f.terms()) out.add(W.apply(w, mu), c);
  return out;
}

FormalCharacter demazure_operator(const RootSystem& rs, int i, const FormalCharacter& f) {
  const Weight alpha_i = Weight(Eigen::VectorXi(rs.cartan().col(i)));
  FormalCharacter out;
  for (const auto& [mu, c] : f.terms()) {
    const int n = mu.coords[i];  // <mu, alpha_i^vee>
    if (n >= 0) {
      for (int k = 0; k <= n; ++k) out.add(mu - alpha_i * k, c);
    } else {
      for (int k = 1; k <= -n - 1; ++k) out.add(mu + alpha_i * k, -c);
    }
  }
  return out;
}

FormalCharacter demazure_character(const WeylGroup& W, int tau_element, const Weight& lambda) {
  if (!lambda.dominant()) throw std::invalid_argument("demazure_character: weight not dominant");
  FormalCharacter f = FormalCharacter::monomial(lambda);
  const auto& word = W.word(tau_element);
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    f = demazure_operator(W.roots(), *it, f);
  return f;
}

FormalCharacter char_from_paths(const PathModel& pm) {
  FormalCharacter f;
  for (const auto& st : pm.stats()) f.add(st.wt, 1);
  return f;
}

FormalCharacter char_standard_sequences(const PathModel& pm, int m) {
  if (m < 1) throw std::invalid_argument("char_standard_sequences: m >= 1 required");
  // DP over the final direction; multiplying characters adds weights.
  const int C = pm.cosets().size();
  std::vector<FormalCharacter> by_final(C);
  for (const auto& st : pm.stats()) by_final[st.e].add(st.wt, 1);
  for (int step = 1; step < m; ++step) {
    std::vector<FormalCharacter> next(C);
    for (int e = 0; e < C; ++e) {
      if (by_final[e].empty()) continue;
      for (std::size_t id = 0; id < pm.paths().size(); ++id) {
        const auto& st = pm.stats()[id];
        if (!pm.cosets().leq(st.i, e)) continue;
        next[st.e] += by_final[e].shifted(st.wt);
      }
    }
    by_final = std::move(next);
  }
  FormalCharacter total;
  for (const auto& f : by_final) total += f;
  return total;
}

FormalCharacter demazure_char_from_paths(const PathModel& pm, int tau_coset) {
  FormalCharacter f;
  for (const auto& st : pm.stats())
    if (pm.cosets().leq(st.i, tau_coset)) f.add(st.wt, 1);
  return f;
}

}  // namespace smt
