#include "smt/lspath.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace smt {

namespace {

// Interleaved entries of a path for the weighted-lex comparisons:
// cosets c_0, c_1, ..., with one cut value after each coset and the
// sentinel value 1 after the last one.
struct Entries {
  std::vector<int> cosets;
  std::vector<Rat> cuts;
};

Entries lex_entries(const ConvexSubset& p) {
  Entries e;
  e.cosets = p.cosets;
  e.cuts = p.cuts;
  e.cuts.push_back(Rat(1));
  return e;
}

Entries revlex_entries(const ConvexSubset& p) {
  Entries e;
  e.cosets.assign(p.cosets.rbegin(), p.cosets.rend());
  for (auto it = p.cuts.rbegin(); it != p.cuts.rend(); ++it) e.cuts.push_back(Rat(1) - *it);
  e.cuts.push_back(Rat(1));  // 1 - a_0
  return e;
}

std::vector<int> shape_stabilizer(const WeylGroup& W, const Weight& lambda) {
  if (lambda.rank() != W.rank()) throw std::invalid_argument("shape rank mismatch");
  if (!lambda.dominant()) throw std::invalid_argument("shape must be dominant");
  std::vector<int> stab;
  for (int i = 0; i < W.rank(); ++i)
    if (lambda.coords[i] == 0) stab.push_back(i);
  return stab;
}

}  // namespace

PathModel::PathModel(const WeylGroup& W, Weight lambda, long long path_bound)
    : W_(&W),
      lambda_(std::move(lambda)),
      path_bound_(path_bound),
      cosets_(W, shape_stabilizer(W, lambda_)) {
  const RootSystem& rs = W.roots();
  for (const Root& beta : rs.positive_roots())
    max_pairing_ = std::max(max_pairing_, rs.pair(lambda_, beta));

  // Labeled cover edges of the Bruhat order on W/W_λ: x -> (y, n) with
  // l(y) = l(x) - 1, y the class of s_beta x, n = |<x(λ), β∨>|. On a
  // descending step the pairing is negative; only divisibility matters.
  const int C = cosets_.size();
  covers_.assign(C, {});
  for (int x = 0; x < C; ++x) {
    int rep = cosets_.min_rep(x);
    Weight xlam = W.apply(rep, lambda_);
    for (const Root& beta : rs.positive_roots()) {
      int refl = W.reflection_element(beta);
      int y = cosets_.coset_of(W.mult(refl, rep));
      if (cosets_.length(y) != cosets_.length(x) - 1) continue;
      int n = -rs.pair(xlam, beta);
      if (n <= 0) throw std::logic_error("descending cover step with nonnegative pairing");
      auto& edges = covers_[x];
      if (std::find(edges.begin(), edges.end(), std::make_pair(y, n)) == edges.end())
        edges.emplace_back(y, n);
    }
    std::sort(covers_[x].begin(), covers_[x].end());
  }

  for (int q = 2; q <= max_pairing_; ++q)
    for (int p = 1; p < q; ++p)
      if (std::gcd(p, q) == 1) candidate_cuts_.push_back(Rat(p, q));
  std::sort(candidate_cuts_.begin(), candidate_cuts_.end());

  reach_.assign(std::max(max_pairing_, 1), {});
  enumerate();
}

bool PathModel::coset_total_greater(int a, int b) const {
  // Coset ids are ordered by (length, canonical word), which refines Bruhat.
  return a > b;
}

bool PathModel::reachable(int from, int to, long q) const {
  if (from == to) return true;
  if (q > max_pairing_) return false;
  if (cosets_.length(to) >= cosets_.length(from)) return false;
  auto& memo = reach_[q - 1];
  if (memo.empty()) memo.assign(static_cast<std::size_t>(cosets_.size()) * cosets_.size(), 0);
  char& cell = memo[static_cast<std::size_t>(from) * cosets_.size() + to];
  if (cell) return cell == 1;
  bool ok = false;
  for (const auto& [y, n] : covers_[from]) {
    if (n % q != 0) continue;
    if (reachable(y, to, q)) {
      ok = true;
      break;
    }
  }
  cell = ok ? 1 : 2;
  return ok;
}

bool PathModel::check_integrality(int from, int to, const Rat& a) const {
  mpz_class den = a.den();
  if (!den.fits_slong_p()) return from == to;
  return reachable(from, to, den.get_si());
}

void PathModel::enumerate() {
  const int C = cosets_.size();
  std::vector<int> chain;
  std::vector<Rat> cuts;

  auto record = [&] {
    if (static_cast<long long>(paths_.size()) >= path_bound_)
      throw BoundExceeded("path enumeration exceeds bound " + std::to_string(path_bound_));
    LSPath p;
    p.shape = lambda_;
    p.cosets = chain;
    p.cuts = cuts;
    paths_.push_back(std::move(p));
  };

  // Depth-first extension. Every prefix of an L-S path is an L-S path, so
  // every node of the search tree is recorded.
  auto extend = [&](auto&& self, int min_cut_idx) -> void {
    int x = chain.back();
    for (int ci = min_cut_idx; ci < static_cast<int>(candidate_cuts_.size()); ++ci) {
      const Rat& a = candidate_cuts_[ci];
      for (int y = 0; y < C; ++y) {
        if (!cosets_.lt(y, x)) continue;
        if (!check_integrality(x, y, a)) continue;
        chain.push_back(y);
        cuts.push_back(a);
        record();
        self(self, ci + 1);
        chain.pop_back();
        cuts.pop_back();
      }
    }
  };

  for (int c = 0; c < C; ++c) {
    chain.assign(1, c);
    cuts.clear();
    record();
    extend(extend, 0);
  }

  std::sort(paths_.begin(), paths_.end(), [&](const LSPath& a, const LSPath& b) {
    return cmp_lex(a, b, /*total=*/true) == Ordering::Greater;
  });

  stats_.reserve(paths_.size());
  for (const LSPath& p : paths_)
    stats_.push_back(PathStat{initial(p), final(p), weight(p)});
}

int PathModel::index_of(const ConvexSubset& p) const {
  for (int i = 0; i < static_cast<int>(paths_.size()); ++i)
    if (paths_[i] == p) return i;
  return -1;
}

bool PathModel::is_convex_subset(const ConvexSubset& p) const {
  if (p.cosets.empty()) return false;
  if (p.cuts.size() + 1 != p.cosets.size()) return false;
  for (int c : p.cosets)
    if (c < 0 || c >= cosets_.size()) return false;
  for (std::size_t i = 0; i + 1 < p.cosets.size(); ++i)
    if (!coset_total_greater(p.cosets[i], p.cosets[i + 1])) return false;
  for (std::size_t i = 0; i < p.cuts.size(); ++i) {
    if (!(p.cuts[i] > Rat(0) && p.cuts[i] < Rat(1))) return false;
    if (i && !(p.cuts[i - 1] < p.cuts[i])) return false;
  }
  return true;
}

bool PathModel::is_ls_path(const ConvexSubset& p) const {
  if (p.shape != lambda_) return false;
  if (!is_convex_subset(p)) return false;
  for (std::size_t i = 0; i + 1 < p.cosets.size(); ++i) {
    if (!cosets_.lt(p.cosets[i + 1], p.cosets[i])) return false;
    if (!check_integrality(p.cosets[i], p.cosets[i + 1], p.cuts[i])) return false;
  }
  return true;
}

LSPath PathModel::validated(const ConvexSubset& p) const {
  if (!is_ls_path(p)) throw std::invalid_argument("not an L-S path of this shape");
  LSPath out;
  static_cast<ConvexSubset&>(out) = p;
  return out;
}

LSPath PathModel::singleton(int coset) const {
  LSPath p;
  p.shape = lambda_;
  p.cosets = {coset};
  return p;
}

Weight PathModel::weight(const ConvexSubset& p) const {
  const int n = W_->rank();
  RatVector acc = RatVector::Constant(n, Rat(0));
  for (std::size_t i = 0; i < p.cosets.size(); ++i) {
    Rat lo = i == 0 ? Rat(0) : p.cuts[i - 1];
    Rat hi = i == p.cuts.size() ? Rat(1) : p.cuts[i];
    Rat x = hi - lo;
    Weight tl = W_->apply(cosets_.min_rep(p.cosets[i]), lambda_);
    for (int k = 0; k < n; ++k) acc[k] += x * Rat(tl.coords[k]);
  }
  Eigen::VectorXi out(n);
  for (int k = 0; k < n; ++k) out[k] = static_cast<int>(acc[k].to_long());
  return Weight(std::move(out));
}

bool PathModel::is_standard_on(const LSPath& p, int tau, int kappa) const {
  return cosets_.leq(initial(p), tau) && cosets_.leq(kappa, final(p));
}

Ordering PathModel::cmp_entries(const std::vector<int>& ca, const std::vector<Rat>& xa,
                                const std::vector<int>& cb, const std::vector<Rat>& xb,
                                bool total) const {
  for (std::size_t k = 0;; ++k) {
    if (k >= ca.size() && k >= cb.size()) return Ordering::Equal;
    if (k >= ca.size() || k >= cb.size())
      throw std::logic_error("path comparison ran past the sentinel");
    if (ca[k] != cb[k]) {
      if (total) return coset_total_greater(ca[k], cb[k]) ? Ordering::Greater : Ordering::Less;
      if (cosets_.leq(cb[k], ca[k])) return Ordering::Greater;
      if (cosets_.leq(ca[k], cb[k])) return Ordering::Less;
      return Ordering::Incomparable;
    }
    if (xa[k] != xb[k]) return xa[k] > xb[k] ? Ordering::Greater : Ordering::Less;
    if (xa[k] == Rat(1)) return Ordering::Equal;  // both exhausted
  }
}

Ordering PathModel::cmp_lex(const ConvexSubset& a, const ConvexSubset& b, bool total) const {
  Entries ea = lex_entries(a), eb = lex_entries(b);
  return cmp_entries(ea.cosets, ea.cuts, eb.cosets, eb.cuts, total);
}

Ordering PathModel::cmp_revlex(const ConvexSubset& a, const ConvexSubset& b, bool total) const {
  Entries ea = revlex_entries(a), eb = revlex_entries(b);
  return cmp_entries(ea.cosets, ea.cuts, eb.cosets, eb.cuts, total);
}

ConvexSubset PathModel::wedge(std::span<const ConvexSubset> parts) const {
  const int m = static_cast<int>(parts.size());
  if (m == 0) throw std::invalid_argument("wedge of zero paths");
  for (const auto& p : parts)
    if (p.shape != lambda_ || !is_convex_subset(p))
      throw std::invalid_argument("wedge parts must be convex subsets of the model shape");

  std::vector<int> merged;
  for (const auto& p : parts) merged.insert(merged.end(), p.cosets.begin(), p.cosets.end());
  std::sort(merged.begin(), merged.end(), std::greater<int>());
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());

  auto weight_in = [&](const ConvexSubset& p, int c) -> Rat {
    for (std::size_t i = 0; i < p.cosets.size(); ++i) {
      if (p.cosets[i] != c) continue;
      Rat lo = i == 0 ? Rat(0) : p.cuts[i - 1];
      Rat hi = i == p.cuts.size() ? Rat(1) : p.cuts[i];
      return hi - lo;
    }
    return Rat(0);
  };

  ConvexSubset out;
  out.shape = lambda_ * m;
  out.cosets = merged;
  Rat acc(0);
  for (std::size_t i = 0; i + 1 < merged.size(); ++i) {
    for (const auto& p : parts) acc += weight_in(p, merged[i]);
    out.cuts.push_back(acc / Rat(m));
  }
  return out;
}

ConvexSubset PathModel::wedge(const ConvexSubset& a, const ConvexSubset& b) const {
  std::vector<ConvexSubset> parts{a, b};
  return wedge(parts);
}

bool PathModel::same_support(std::span<const ConvexSubset> parts) const {
  std::vector<int> merged;
  for (const auto& p : parts) merged.insert(merged.end(), p.cosets.begin(), p.cosets.end());
  std::sort(merged.begin(), merged.end(), std::greater<int>());
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  for (std::size_t i = 0; i + 1 < merged.size(); ++i)
    if (!cosets_.lt(merged[i + 1], merged[i])) return false;
  return true;
}

std::vector<LSPath> PathModel::unwedge(const ConvexSubset& p, int m) const {
  if (m < 1) throw std::invalid_argument("unwedge needs m >= 1");
  if (p.shape != lambda_ * m) throw std::invalid_argument("unwedge: shape is not m*lambda");
  {
    ConvexSubset q = p;
    q.shape = lambda_;  // convexity does not depend on the shape scale
    if (!is_convex_subset(q)) throw std::invalid_argument("unwedge: not a convex subset");
  }

  // Cumulative cut positions c_0 = 0 < c_1 < ... < c_N = 1.
  std::vector<Rat> c;
  c.push_back(Rat(0));
  for (const Rat& t : p.cuts) c.push_back(t);
  c.push_back(Rat(1));

  std::vector<LSPath> parts;
  for (int k = 1; k <= m; ++k) {
    Rat lo(k - 1, m), hi(k, m);
    ConvexSubset part;
    part.shape = lambda_;
    for (std::size_t l = 0; l + 1 < c.size(); ++l) {
      if (c[l] < hi && c[l + 1] > lo) {  // block overlaps the window interior
        part.cosets.push_back(p.cosets[l]);
        if (c[l + 1] < hi) part.cuts.push_back((c[l + 1] - lo) * Rat(m));
      }
    }
    if (!is_ls_path(part))
      throw std::invalid_argument("unwedge: window " + std::to_string(k) +
                                  " is not an L-S path of the base shape");
    parts.push_back(validated(part));
  }
  for (int k = 0; k + 1 < m; ++k)
    if (!cosets_.leq(initial(parts[k + 1]), final(parts[k])))
      throw std::invalid_argument("unwedge: resulting sequence is not standard");
  std::vector<ConvexSubset> raw(parts.begin(), parts.end());
  if (!(wedge(raw) == p)) throw std::invalid_argument("unwedge: wedge does not reproduce input");
  return parts;
}

std::vector<StandardSequence> PathModel::standard_sequences(int m, int tau, int kappa) const {
  if (m < 0) throw std::invalid_argument("sequence length must be >= 0");
  std::vector<StandardSequence> out;
  if (m == 0) {
    out.push_back(StandardSequence{});
    return out;
  }
  std::vector<int> cur;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) == m) {
      if (kappa < 0 || cosets_.leq(kappa, stats_[cur.back()].e)) {
        if (static_cast<long long>(out.size()) >= path_bound_)
          throw BoundExceeded("standard sequence enumeration exceeds bound");
        out.push_back(StandardSequence{cur});
      }
      return;
    }
    for (int id = 0; id < static_cast<int>(paths_.size()); ++id) {
      if (cur.empty()) {
        if (tau >= 0 && !cosets_.leq(stats_[id].i, tau)) continue;
      } else if (!cosets_.leq(stats_[id].i, stats_[cur.back()].e)) {
        continue;
      }
      cur.push_back(id);
      self(self);
      cur.pop_back();
    }
  };
  rec(rec);
  return out;
}

Weight PathModel::sequence_weight(const StandardSequence& s) const {
  Weight w = Weight::zero(W_->rank());
  for (int id : s.path_ids) w = w + stats_[id].wt;
  return w;
}

int PathModel::sequence_initial(const StandardSequence& s) const {
  return stats_[s.path_ids.front()].i;
}

int PathModel::sequence_final(const StandardSequence& s) const {
  return stats_[s.path_ids.back()].e;
}

bool PathModel::is_positive_saturated(const std::vector<int>& ids) const {
  std::vector<char> in(paths_.size(), 0);
  for (int id : ids) in[id] = 1;
  for (int hi : ids)
    for (int lo : ids) {
      if (hi == lo) continue;
      for (int eta = 0; eta < static_cast<int>(paths_.size()); ++eta) {
        if (in[eta]) continue;
        if (cmp_lex(paths_[hi], paths_[eta]) == Ordering::Greater &&
            cmp_lex(paths_[eta], paths_[lo]) == Ordering::Greater)
          return false;
      }
    }
  return true;
}

bool PathModel::is_negative_saturated(const std::vector<int>& ids) const {
  std::vector<char> in(paths_.size(), 0);
  for (int id : ids) in[id] = 1;
  for (int hi : ids)
    for (int lo : ids) {
      if (hi == lo) continue;
      for (int eta = 0; eta < static_cast<int>(paths_.size()); ++eta) {
        if (in[eta]) continue;
        if (cmp_revlex(paths_[hi], paths_[eta]) == Ordering::Greater &&
            cmp_revlex(paths_[eta], paths_[lo]) == Ordering::Greater)
          return false;
      }
    }
  return true;
}

bool PathModel::is_maximally_positive_saturated(const std::vector<int>& ids) const {
  std::vector<char> in(paths_.size(), 0);
  for (int id : ids) in[id] = 1;
  for (int lo : ids)
    for (int eta = 0; eta < static_cast<int>(paths_.size()); ++eta)
      if (!in[eta] && cmp_lex(paths_[eta], paths_[lo]) == Ordering::Greater) return false;
  return true;
}

std::vector<int> PathModel::positive_closure(const std::vector<int>& ids) const {
  std::vector<int> out;
  for (int eta = 0; eta < static_cast<int>(paths_.size()); ++eta)
    for (int id : ids) {
      Ordering o = cmp_lex(paths_[eta], paths_[id]);
      if (o == Ordering::Greater || o == Ordering::Equal) {
        out.push_back(eta);
        break;
      }
    }
  return out;
}

std::vector<int> PathModel::negative_closure(const std::vector<int>& ids) const {
  std::vector<int> out;
  for (int eta = 0; eta < static_cast<int>(paths_.size()); ++eta)
    for (int id : ids) {
      Ordering o = cmp_revlex(paths_[id], paths_[eta]);
      if (o == Ordering::Greater || o == Ordering::Equal) {
        out.push_back(eta);
        break;
      }
    }
  return out;
}

}  // namespace smt
