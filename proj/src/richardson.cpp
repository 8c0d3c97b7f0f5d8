#include "smt/richardson.hpp"

#include <algorithm>
#include <stdexcept>

namespace smt {

namespace {

std::vector<int> maximal_elements(const CosetSpace& Q, std::vector<int> cands) {
  std::vector<int> out;
  for (int c : cands) {
    bool dominated = false;
    for (int d : cands)
      if (d != c && Q.leq(c, d)) {
        dominated = true;
        break;
      }
    if (!dominated) out.push_back(c);
  }
  return out;
}

std::vector<int> minimal_elements(const CosetSpace& Q, std::vector<int> cands) {
  std::vector<int> out;
  for (int c : cands) {
    bool dominated = false;
    for (int d : cands)
      if (d != c && Q.leq(d, c)) {
        dominated = true;
        break;
      }
    if (!dominated) out.push_back(c);
  }
  return out;
}

}  // namespace

std::optional<int> richardson_dimension(const CosetSpace& Q, const RichardsonSpec& s) {
  if (!Q.leq(s.kappa, s.tau)) return std::nullopt;
  return Q.length(s.tau) - Q.length(s.kappa);
}

bool is_pointed(const RichardsonUnion& u) {
  if (u.comps.size() <= 1) return true;
  bool same_tau = true, same_kappa = true;
  for (const auto& c : u.comps) {
    same_tau &= c.tau == u.comps[0].tau;
    same_kappa &= c.kappa == u.comps[0].kappa;
  }
  return same_tau || same_kappa;
}

RichardsonUnion make_union(const CosetSpace& Q, std::vector<RichardsonSpec> comps) {
  std::vector<RichardsonSpec> live;
  for (const auto& c : comps)
    if (Q.leq(c.kappa, c.tau)) live.push_back(c);
  std::sort(live.begin(), live.end());
  live.erase(std::unique(live.begin(), live.end()), live.end());
  RichardsonUnion u;
  for (const auto& c : live) {
    bool subsumed = false;
    for (const auto& d : live)
      if (!(d == c) && Q.leq(c.tau, d.tau) && Q.leq(d.kappa, c.kappa)) {
        subsumed = true;
        break;
      }
    if (!subsumed) u.comps.push_back(c);
  }
  return u;
}

RichardsonUnion union_of(const CosetSpace& Q, const RichardsonUnion& a,
                         const RichardsonUnion& b) {
  std::vector<RichardsonSpec> comps = a.comps;
  comps.insert(comps.end(), b.comps.begin(), b.comps.end());
  return make_union(Q, std::move(comps));
}

RichardsonUnion intersect(const CosetSpace& Q, const RichardsonUnion& a,
                          const RichardsonUnion& b) {
  std::vector<RichardsonSpec> comps;
  for (const auto& x : a.comps)
    for (const auto& y : b.comps) {
      std::vector<int> lower, upper;
      for (int c = 0; c < Q.size(); ++c) {
        if (Q.leq(c, x.tau) && Q.leq(c, y.tau)) lower.push_back(c);
        if (Q.leq(x.kappa, c) && Q.leq(y.kappa, c)) upper.push_back(c);
      }
      for (int t : maximal_elements(Q, lower))
        for (int k : minimal_elements(Q, upper))
          if (Q.leq(k, t)) comps.push_back({t, k});
    }
  return make_union(Q, std::move(comps));
}

RichardsonUnion boundary_plus(const CosetSpace& Q, const RichardsonSpec& s) {
  std::vector<int> cands;
  for (int c = 0; c < Q.size(); ++c)
    if (Q.leq(s.kappa, c) && Q.lt(c, s.tau)) cands.push_back(c);
  std::vector<RichardsonSpec> comps;
  for (int c : maximal_elements(Q, cands)) comps.push_back({c, s.kappa});
  return make_union(Q, std::move(comps));
}

RichardsonUnion boundary_minus(const CosetSpace& Q, const RichardsonSpec& s) {
  std::vector<int> cands;
  for (int c = 0; c < Q.size(); ++c)
    if (Q.lt(s.kappa, c) && Q.leq(c, s.tau)) cands.push_back(c);
  std::vector<RichardsonSpec> comps;
  for (int c : minimal_elements(Q, cands)) comps.push_back({s.tau, c});
  return make_union(Q, std::move(comps));
}

const std::vector<std::vector<long long>>& RichardsonModel::ie_counts(int m) const {
  if (m < 1) throw std::invalid_argument("ie_counts needs m >= 1");
  if (static_cast<int>(count_tables_.size()) > m && !count_tables_[m].empty())
    return count_tables_[m];
  const int C = cosets().size();
  if (count_tables_.empty()) count_tables_.resize(2);
  if (count_tables_[1].empty()) {
    count_tables_[1].assign(C, std::vector<long long>(C, 0));
    for (const auto& st : pm_->stats()) ++count_tables_[1][st.i][st.e];
  }
  // extensions[y][y'] = # paths with i <= y and e = y'
  std::vector<std::vector<long long>> ext(C, std::vector<long long>(C, 0));
  for (const auto& st : pm_->stats())
    for (int y = 0; y < C; ++y)
      if (cosets().leq(st.i, y)) ++ext[y][st.e];
  for (int k = static_cast<int>(count_tables_.size()); k <= m; ++k) count_tables_.resize(m + 1);
  for (int k = 2; k <= m; ++k) {
    if (!count_tables_[k].empty()) continue;
    count_tables_[k].assign(C, std::vector<long long>(C, 0));
    for (int x = 0; x < C; ++x)
      for (int y = 0; y < C; ++y) {
        long long v = count_tables_[k - 1][x][y];
        if (!v) continue;
        for (int y2 = 0; y2 < C; ++y2)
          if (ext[y][y2]) count_tables_[k][x][y2] += v * ext[y][y2];
      }
  }
  return count_tables_[m];
}

const std::vector<std::vector<FormalCharacter>>& RichardsonModel::ie_chars(int m) const {
  if (m < 1) throw std::invalid_argument("ie_chars needs m >= 1");
  if (static_cast<int>(char_tables_.size()) > m && !char_tables_[m].empty())
    return char_tables_[m];
  const int C = cosets().size();
  if (char_tables_.empty()) char_tables_.resize(2);
  if (char_tables_[1].empty()) {
    char_tables_[1].assign(C, std::vector<FormalCharacter>(C));
    for (const auto& st : pm_->stats()) char_tables_[1][st.i][st.e].add(st.wt, 1);
  }
  for (int k = static_cast<int>(char_tables_.size()); k <= m; ++k) char_tables_.resize(m + 1);
  for (int k = 2; k <= m; ++k) {
    if (!char_tables_[k].empty()) continue;
    char_tables_[k].assign(C, std::vector<FormalCharacter>(C));
    for (int x = 0; x < C; ++x)
      for (int y = 0; y < C; ++y) {
        const FormalCharacter& v = char_tables_[k - 1][x][y];
        if (v.empty()) continue;
        for (const auto& st : pm_->stats())
          if (cosets().leq(st.i, y)) char_tables_[k][x][st.e] += v.shifted(st.wt);
      }
  }
  return char_tables_[m];
}

long long RichardsonModel::count(const RichardsonUnion& u, int m) const {
  if (u.empty()) return 0;
  if (m == 0) return 1;
  const auto& T = ie_counts(m);
  const int C = cosets().size();
  long long total = 0;
  for (int x = 0; x < C; ++x)
    for (int y = 0; y < C; ++y) {
      if (!T[x][y]) continue;
      for (const auto& comp : u.comps)
        if (cosets().leq(x, comp.tau) && cosets().leq(comp.kappa, y)) {
          total += T[x][y];
          break;
        }
    }
  return total;
}

long long RichardsonModel::count(const RichardsonSpec& s, int m) const {
  return count(make_union(cosets(), {s}), m);
}

FormalCharacter RichardsonModel::char_of(const RichardsonUnion& u, int m) const {
  FormalCharacter total;
  if (u.empty()) return total;
  if (m == 0) return FormalCharacter::one(pm_->group().rank());
  const auto& T = ie_chars(m);
  const int C = cosets().size();
  for (int x = 0; x < C; ++x)
    for (int y = 0; y < C; ++y) {
      if (T[x][y].empty()) continue;
      for (const auto& comp : u.comps)
        if (cosets().leq(x, comp.tau) && cosets().leq(comp.kappa, y)) {
          total += T[x][y];
          break;
        }
    }
  return total;
}

FormalCharacter RichardsonModel::char_of(const RichardsonSpec& s, int m) const {
  return char_of(make_union(cosets(), {s}), m);
}

std::vector<FiltrationEntry> RichardsonModel::pieri_filtration(const RichardsonSpec& s) const {
  if (!cosets().leq(s.kappa, s.tau))
    throw std::invalid_argument("pieri_filtration: empty Richardson variety");
  std::vector<FiltrationEntry> entries;
  for (const auto& st : pm_->stats())
    if (st.i == s.tau && cosets().leq(s.kappa, st.e))
      entries.push_back(FiltrationEntry{st.e, -st.wt});
  return entries;
}

bool RichardsonModel::hilbert_recursion_check(const RichardsonSpec& s, int m_max) const {
  RichardsonUnion u = make_union(cosets(), {s});
  RichardsonUnion bd = boundary_plus(cosets(), s);
  auto entries = pieri_filtration(s);
  for (int m = 1; m <= m_max; ++m) {
    long long lhs = count(u, m);
    long long rhs = count(bd, m);
    for (const auto& en : entries) rhs += count(RichardsonSpec{en.endpoint, s.kappa}, m - 1);
    if (lhs != rhs) return false;
  }
  return true;
}

std::vector<std::vector<int>> RichardsonModel::saturated_chain(int tau) const {
  // Paths are stored in decreasing total weighted-lex order, so the first j
  // members with i(π)=τ form the j-th set of the chain: each step deletes
  // the total-order-minimal remaining element.
  std::vector<int> members;
  for (int id = 0; id < static_cast<int>(pm_->paths().size()); ++id)
    if (pm_->stats()[id].i == tau) members.push_back(id);
  std::vector<std::vector<int>> chain;
  for (std::size_t j = 0; j <= members.size(); ++j)
    chain.emplace_back(members.begin(), members.begin() + j);
  return chain;
}

NonRegularModel::NonRegularModel(const CosetSpace& Q, const PathModel& pm)
    : Q_(&Q), pm_(&pm) {
  if (&Q.group() != &pm.group())
    throw std::invalid_argument("NonRegularModel: quotients over different groups");
  const auto& fine = Q.parabolic();
  const auto& coarse = pm.cosets().parabolic();
  for (int g : fine)
    if (std::find(coarse.begin(), coarse.end(), g) == coarse.end())
      throw std::invalid_argument("NonRegularModel: W_Q is not contained in W_lambda");
  proj_.resize(Q.size());
  lifts_.assign(pm.cosets().size(), {});
  for (int c = 0; c < Q.size(); ++c) {
    proj_[c] = project_coset(Q, pm.cosets(), c);
    lifts_[proj_[c]].push_back(c);
  }
}

std::optional<int> NonRegularModel::max_lift_below(int lambda_coset, int bound) const {
  std::vector<int> within;
  for (int x : lifts_[lambda_coset])
    if (Q_->leq(x, bound)) within.push_back(x);
  if (within.empty()) return std::nullopt;
  std::vector<int> maxima;
  for (int x : within) {
    bool dominated = false;
    for (int y : within)
      if (y != x && Q_->leq(x, y)) {
        dominated = true;
        break;
      }
    if (!dominated) maxima.push_back(x);
  }
  if (maxima.size() != 1) throw std::logic_error("Deodhar maximum is not unique");
  return maxima[0];
}

std::optional<int> NonRegularModel::min_lift_above(int lambda_coset, int bound) const {
  std::vector<int> within;
  for (int x : lifts_[lambda_coset])
    if (Q_->leq(bound, x)) within.push_back(x);
  if (within.empty()) return std::nullopt;
  std::vector<int> minima;
  for (int x : within) {
    bool dominated = false;
    for (int y : within)
      if (y != x && Q_->leq(y, x)) {
        dominated = true;
        break;
      }
    if (!dominated) minima.push_back(x);
  }
  if (minima.size() != 1) throw std::logic_error("Deodhar minimum is not unique");
  return minima[0];
}

std::optional<int> NonRegularModel::max_chain_end(const LSPath& pi, int tau) const {
  int x = tau;
  for (int c : pi.cosets) {
    auto nxt = max_lift_below(c, x);
    if (!nxt) return std::nullopt;
    x = *nxt;
  }
  return x;
}

std::optional<int> NonRegularModel::min_chain_top(const LSPath& pi, int kappa) const {
  int y = kappa;
  for (auto it = pi.cosets.rbegin(); it != pi.cosets.rend(); ++it) {
    auto nxt = min_lift_above(*it, y);
    if (!nxt) return std::nullopt;
    y = *nxt;
  }
  return y;
}

std::optional<std::vector<int>> NonRegularModel::max_defining_chain(const LSPath& pi, int tau,
                                                                    int kappa) const {
  std::vector<int> chain;
  int x = tau;
  for (int c : pi.cosets) {
    auto nxt = max_lift_below(c, x);
    if (!nxt) return std::nullopt;
    x = *nxt;
    chain.push_back(x);
  }
  if (!Q_->leq(kappa, chain.back())) return std::nullopt;
  return chain;
}

std::optional<std::vector<int>> NonRegularModel::min_defining_chain(const LSPath& pi, int tau,
                                                                    int kappa) const {
  std::vector<int> chain;
  int y = kappa;
  for (auto it = pi.cosets.rbegin(); it != pi.cosets.rend(); ++it) {
    auto nxt = min_lift_above(*it, y);
    if (!nxt) return std::nullopt;
    y = *nxt;
    chain.push_back(y);
  }
  std::reverse(chain.begin(), chain.end());
  if (!Q_->leq(chain.front(), tau)) return std::nullopt;
  return chain;
}

bool NonRegularModel::is_standard(const LSPath& pi, int tau, int kappa) const {
  return max_defining_chain(pi, tau, kappa).has_value();
}

std::vector<std::vector<int>> NonRegularModel::all_defining_chains(const LSPath& pi, int tau,
                                                                   int kappa) const {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, std::size_t pos, int bound) -> void {
    if (pos == pi.cosets.size()) {
      if (Q_->leq(kappa, bound)) out.push_back(cur);
      return;
    }
    for (int x : lifts_[pi.cosets[pos]]) {
      if (!Q_->leq(x, bound)) continue;
      cur.push_back(x);
      self(self, pos + 1, x);
      cur.pop_back();
    }
  };
  rec(rec, 0, tau);
  return out;
}

NonRegularModel::LambdaBoundary NonRegularModel::lambda_boundary(const RichardsonSpec& s) const {
  if (!Q_->leq(s.kappa, s.tau))
    throw std::invalid_argument("lambda_boundary: empty Richardson variety");
  LambdaBoundary out;
  const CosetSpace& L = pm_->cosets();
  int tbar = proj_[s.tau], kbar = proj_[s.kappa];
  if (tbar == kbar) {
    out.trivial_bundle = true;
    return out;
  }
  // Covers of tbar from below in W/W_lambda; pull each back as the Schubert
  // variety of the maximal lift and intersect with X_tau^kappa.
  std::vector<int> below;
  for (int c = 0; c < L.size(); ++c)
    if (L.lt(c, tbar)) below.push_back(c);
  RichardsonUnion base = make_union(*Q_, {s});
  std::vector<RichardsonSpec> comps;
  for (int cbar : below) {
    bool maximal = true;
    for (int dbar : below)
      if (dbar != cbar && L.leq(cbar, dbar)) {
        maximal = false;
        break;
      }
    if (!maximal) continue;
    int sigma_max = lifts_[cbar].back();
    for (int x : lifts_[cbar])
      if (!Q_->leq(x, sigma_max)) throw std::logic_error("fiber maximum is not unique");
    RichardsonUnion schubert = make_union(*Q_, {RichardsonSpec{sigma_max, Q_->identity_coset()}});
    RichardsonUnion inter = intersect(*Q_, base, schubert);
    comps.insert(comps.end(), inter.comps.begin(), inter.comps.end());
  }
  out.boundary = make_union(*Q_, std::move(comps));
  return out;
}

long long NonRegularModel::count_nonregular(const RichardsonUnion& u, int m) const {
  if (!is_pointed(u)) throw std::invalid_argument("count_nonregular: union is not pointed");
  if (u.empty()) return 0;
  if (m == 0) return 1;
  const auto& paths = pm_->paths();
  const auto& stats = pm_->stats();
  long long total = 0;
  std::vector<int> cur;
  auto standard_somewhere = [&]() {
    for (const auto& comp : u.comps) {
      int x = comp.tau;
      bool ok = true;
      for (int id : cur) {
        for (int c : paths[id].cosets) {
          auto nxt = max_lift_below(c, x);
          if (!nxt) {
            ok = false;
            break;
          }
          x = *nxt;
        }
        if (!ok) break;
      }
      if (ok && Q_->leq(comp.kappa, x)) return true;
    }
    return false;
  };
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) == m) {
      if (standard_somewhere()) ++total;
      return;
    }
    for (int id = 0; id < static_cast<int>(paths.size()); ++id) {
      // Necessary condition at the W/W_lambda level prunes the search.
      if (!cur.empty() &&
          !pm_->cosets().leq(stats[id].i, stats[cur.back()].e))
        continue;
      cur.push_back(id);
      self(self);
      cur.pop_back();
    }
  };
  rec(rec);
  return total;
}

long long NonRegularModel::count_mixed_right(const RichardsonUnion& u, const PathModel& rho_pm,
                                             int m) const {
  if (!is_pointed(u)) throw std::invalid_argument("count_mixed_right: union is not pointed");
  if (u.empty()) return 0;
  if (rho_pm.cosets().parabolic() != Q_->parabolic() || &rho_pm.group() != &Q_->group())
    throw std::invalid_argument("count_mixed_right: auxiliary shape is not Q-regular");
  if (m == 0) return count_nonregular(u, 1);

  RichardsonModel rho_model(rho_pm);
  const auto& T = rho_model.ie_counts(m);
  const int C = Q_->size();
  bool common_kappa = true;
  for (const auto& comp : u.comps) common_kappa &= comp.kappa == u.comps[0].kappa;

  long long total = 0;
  for (const auto& pi : pm_->paths()) {
    if (common_kappa) {
      int kappa = u.comps[0].kappa;
      std::vector<char> start_ok(C, 0);
      bool any = false;
      for (const auto& comp : u.comps) {
        auto M = max_chain_end(pi, comp.tau);
        if (!M) continue;
        any = true;
        for (int x = 0; x < C; ++x)
          if (Q_->leq(x, *M)) start_ok[x] = 1;
      }
      if (!any) continue;
      for (int x = 0; x < C; ++x) {
        if (!start_ok[x]) continue;
        for (int y = 0; y < C; ++y)
          if (T[x][y] && Q_->leq(kappa, y)) total += T[x][y];
      }
    } else {  // common tau
      int tau = u.comps[0].tau;
      auto M = max_chain_end(pi, tau);
      if (!M) continue;
      for (int x = 0; x < C; ++x) {
        if (!Q_->leq(x, *M)) continue;
        for (int y = 0; y < C; ++y) {
          if (!T[x][y]) continue;
          for (const auto& comp : u.comps)
            if (Q_->leq(comp.kappa, y)) {
              total += T[x][y];
              break;
            }
        }
      }
    }
  }
  return total;
}

long long NonRegularModel::count_mixed_left(const RichardsonUnion& u, const PathModel& rho_pm,
                                            int m) const {
  if (!is_pointed(u)) throw std::invalid_argument("count_mixed_left: union is not pointed");
  if (u.empty()) return 0;
  if (rho_pm.cosets().parabolic() != Q_->parabolic() || &rho_pm.group() != &Q_->group())
    throw std::invalid_argument("count_mixed_left: auxiliary shape is not Q-regular");
  if (m == 0) return count_nonregular(u, 1);

  RichardsonModel rho_model(rho_pm);
  const auto& T = rho_model.ie_counts(m);
  const int C = Q_->size();
  bool common_tau = true;
  for (const auto& comp : u.comps) common_tau &= comp.tau == u.comps[0].tau;

  long long total = 0;
  for (const auto& pi : pm_->paths()) {
    if (common_tau) {
      int tau = u.comps[0].tau;
      std::vector<char> end_ok(C, 0);
      bool any = false;
      for (const auto& comp : u.comps) {
        auto K = min_chain_top(pi, comp.kappa);
        if (!K) continue;
        any = true;
        for (int y = 0; y < C; ++y)
          if (Q_->leq(*K, y)) end_ok[y] = 1;
      }
      if (!any) continue;
      for (int x = 0; x < C; ++x) {
        if (!Q_->leq(x, tau)) continue;
        for (int y = 0; y < C; ++y)
          if (T[x][y] && end_ok[y]) total += T[x][y];
      }
    } else {  // common kappa
      int kappa = u.comps[0].kappa;
      auto K = min_chain_top(pi, kappa);
      if (!K) continue;
      for (int y = 0; y < C; ++y) {
        if (!Q_->leq(*K, y)) continue;
        for (int x = 0; x < C; ++x) {
          if (!T[x][y]) continue;
          for (const auto& comp : u.comps)
            if (Q_->leq(x, comp.tau)) {
              total += T[x][y];
              break;
            }
        }
      }
    }
  }
  return total;
}

NonRegularModel::RecursionCheck NonRegularModel::filtration_recursion_check(
    const RichardsonSpec& s, const PathModel& rho_pm, int m_max) const {
  LambdaBoundary lb = lambda_boundary(s);
  RecursionCheck rc;
  if (lb.trivial_bundle) {
    rc.skipped = true;
    return rc;
  }
  RichardsonUnion base = make_union(*Q_, {s});
  RichardsonModel rho_model(rho_pm);

  // S: paths standard on X_tau^kappa whose initial direction is tau mod W_λ,
  // each contributing the Richardson variety of its maximal chain end.
  std::vector<int> sub_ends;
  for (const auto& pi : pm_->paths()) {
    if (pm_->initial(pi) != proj_[s.tau]) continue;
    auto chain = max_defining_chain(pi, s.tau, s.kappa);
    if (chain) sub_ends.push_back(chain->back());
  }

  for (int m = 1; m <= m_max; ++m) {
    long long lhs = count_mixed_right(base, rho_pm, m);
    long long rhs = count_mixed_right(lb.boundary, rho_pm, m);
    for (int end : sub_ends) rhs += rho_model.count(RichardsonSpec{end, s.kappa}, m);
    if (lhs != rhs) {
      rc.ok = false;
      return rc;
    }
  }
  return rc;
}

}  // namespace smt
