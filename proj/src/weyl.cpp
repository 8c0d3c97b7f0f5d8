#include "smt/weyl.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>
#include <sstream>

namespace smt {

std::vector<int> WeylGroup::key_of(const Eigen::MatrixXi& m) const {
  return std::vector<int>(m.data(), m.data() + m.size());
}

WeylGroup::WeylGroup(RootSystem rs, Options opt) : rs_(std::move(rs)), opt_(opt) {
  const long long order = rs_.weyl_order();
  if (order > opt_.max_order)
    throw BoundExceeded("Weyl group order " + std::to_string(order) + " exceeds bound " +
                        std::to_string(opt_.max_order));
  const int n = rs_.rank();

  // Closure under right multiplication by simple reflections.
  std::vector<Eigen::MatrixXi> mats;
  std::vector<int> lengths;
  std::map<std::vector<int>, int> index;
  mats.push_back(Eigen::MatrixXi::Identity(n, n));
  lengths.push_back(0);
  index[key_of(mats[0])] = 0;
  std::vector<std::vector<int>> right;
  for (std::size_t head = 0; head < mats.size(); ++head) {
    right.emplace_back(n, -1);
    for (int i = 0; i < n; ++i) {
      Eigen::MatrixXi prod = mats[head] * rs_.simple_reflection(i);
      auto key = key_of(prod);
      auto it = index.find(key);
      int id;
      if (it == index.end()) {
        id = static_cast<int>(mats.size());
        index.emplace(std::move(key), id);
        mats.push_back(std::move(prod));
        lengths.push_back(lengths[head] + 1);
      } else {
        id = it->second;
      }
      right[head][i] = id;
    }
  }
  const int N = static_cast<int>(mats.size());
  if (N != order)
    throw std::logic_error("Weyl enumeration produced " + std::to_string(N) +
                           " elements, expected " + std::to_string(order));

  std::vector<std::vector<int>> left(N, std::vector<int>(n));
  for (int w = 0; w < N; ++w)
    for (int i = 0; i < n; ++i)
      left[w][i] = index.at(key_of(rs_.simple_reflection(i) * mats[w]));

  // Canonical words: lexicographically least reduced word, by greedy
  // selection of the smallest left descent. Elements are BFS-ordered, so
  // s_i * w with smaller length is already resolved.
  std::vector<std::vector<int>> words(N);
  {
    std::vector<int> by_length(N);
    std::iota(by_length.begin(), by_length.end(), 0);
    std::stable_sort(by_length.begin(), by_length.end(),
                     [&](int a, int b) { return lengths[a] < lengths[b]; });
    for (int w : by_length) {
      if (w == 0) continue;
      for (int i = 0; i < n; ++i) {
        int sw = left[w][i];
        if (lengths[sw] < lengths[w]) {
          words[w].reserve(lengths[w]);
          words[w].push_back(i);
          words[w].insert(words[w].end(), words[sw].begin(), words[sw].end());
          break;
        }
      }
    }
  }

  // Renumber by (length, canonical word).
  std::vector<int> perm(N);
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    if (lengths[a] != lengths[b]) return lengths[a] < lengths[b];
    return words[a] < words[b];
  });
  std::vector<int> newid(N);
  for (int pos = 0; pos < N; ++pos) newid[perm[pos]] = pos;

  mats_.resize(N);
  lengths_.resize(N);
  words_.resize(N);
  right_.assign(N, std::vector<int>(n));
  left_.assign(N, std::vector<int>(n));
  for (int old = 0; old < N; ++old) {
    int id = newid[old];
    mats_[id] = std::move(mats[old]);
    lengths_[id] = lengths[old];
    words_[id] = std::move(words[old]);
    for (int i = 0; i < n; ++i) {
      right_[id][i] = newid[right[old][i]];
      left_[id][i] = newid[left[old][i]];
    }
  }
  index_.clear();
  for (int id = 0; id < N; ++id) index_[key_of(mats_[id])] = id;

  inverse_.resize(N);
  for (int id = 0; id < N; ++id) {
    std::vector<int> rev(words_[id].rbegin(), words_[id].rend());
    inverse_[id] = element_of_word(rev);
  }
  longest_ = N - 1;
  if (lengths_[longest_] != rs_.num_positive_roots() ||
      (N > 1 && lengths_[N - 2] == lengths_[longest_]))
    throw std::logic_error("longest element is not unique/maximal");

  if (N <= opt_.table_bound) build_bruhat_table();
}

int WeylGroup::mult(int u, int v) const {
  int r = u;
  for (int i : words_[v]) r = right_[r][i];
  return r;
}

int WeylGroup::element_of_word(const std::vector<int>& w) const {
  int r = 0;
  for (int i : w) {
    if (i < 0 || i >= rank()) throw std::invalid_argument("reflection index out of range");
    r = right_[r][i];
  }
  return r;
}

std::optional<int> WeylGroup::find(const Eigen::MatrixXi& m) const {
  auto it = index_.find(key_of(m));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int WeylGroup::reflection_element(const Root& beta) const {
  auto id = find(rs_.reflection(beta));
  if (!id) throw std::logic_error("reflection matrix not found in group");
  return *id;
}

int WeylGroup::inversion_count(int w) const {
  int count = 0;
  for (const Root& beta : rs_.positive_roots()) {
    Eigen::VectorXi img = mats_[w] * beta.fund;
    int idx = rs_.signed_root_index(img);
    if (idx == 0) throw std::logic_error("root image is not a root");
    if (idx < 0) ++count;
  }
  return count;
}

void WeylGroup::build_bruhat_table() {
  const int N = size();
  row_words_ = static_cast<std::size_t>((N + 63) / 64);
  table_.assign(row_words_ * N, 0);
  auto set_bit = [&](int v, int u) {
    table_[row_words_ * v + u / 64] |= (std::uint64_t{1} << (u % 64));
  };
  auto get_bit = [&](int v, int u) {
    return (table_[row_words_ * v + u / 64] >> (u % 64)) & 1u;
  };
  set_bit(0, 0);
  // Ids are sorted by length, so row sv is complete before row v needs it.
  for (int v = 1; v < N; ++v) {
    int s = words_[v][0];
    int sv = left_[v][s];
    for (int u = 0; u < N; ++u) {
      if (lengths_[u] > lengths_[v]) continue;
      int su = left_[u][s];
      int probe = lengths_[su] < lengths_[u] ? su : u;
      if (get_bit(sv, probe)) set_bit(v, u);
    }
  }
  has_table_ = true;
}

bool WeylGroup::bruhat_leq_recursive(int u, int v) const {
  if (u == v || u == 0) return true;
  if (lengths_[u] >= lengths_[v]) return false;
  std::uint64_t key = static_cast<std::uint64_t>(u) * size() + v;
  {
    std::lock_guard<std::mutex> lock(memo_mutex_);
    auto it = bruhat_memo_.find(key);
    if (it != bruhat_memo_.end()) return it->second;
  }
  int s = words_[v][0];
  int sv = left_[v][s];
  int su = left_[u][s];
  bool r = lengths_[su] < lengths_[u] ? bruhat_leq_recursive(su, sv)
                                      : bruhat_leq_recursive(u, sv);
  std::lock_guard<std::mutex> lock(memo_mutex_);
  bruhat_memo_.emplace(key, r);
  return r;
}

bool WeylGroup::bruhat_leq(int u, int v) const {
  if (has_table_)
    return (table_[row_words_ * v + u / 64] >> (u % 64)) & 1u;
  return bruhat_leq_recursive(u, v);
}

std::string WeylGroup::format(int w) const {
  if (w == 0) return "e";
  std::string out;
  for (std::size_t k = 0; k < words_[w].size(); ++k) {
    if (k) out += '.';
    out += 's';
    out += std::to_string(words_[w][k] + 1);
  }
  return out;
}

int WeylGroup::parse(const std::string& s) const {
  if (s == "e" || s.empty()) return 0;
  std::vector<int> word;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, '.')) {
    if (tok.size() < 2 || tok[0] != 's')
      throw std::invalid_argument("bad Weyl word token '" + tok + "'");
    int idx = std::stoi(tok.substr(1));
    if (idx < 1 || idx > rank())
      throw std::invalid_argument("reflection index out of range in '" + s + "'");
    word.push_back(idx - 1);
  }
  return element_of_word(word);
}

CosetSpace::CosetSpace(const WeylGroup& W, std::vector<int> parabolic) : W_(&W) {
  std::sort(parabolic.begin(), parabolic.end());
  parabolic.erase(std::unique(parabolic.begin(), parabolic.end()), parabolic.end());
  for (int i : parabolic)
    if (i < 0 || i >= W.rank())
      throw std::invalid_argument("parabolic generator index out of range");
  parabolic_ = std::move(parabolic);

  const int N = W.size();
  project_.assign(N, -1);
  std::vector<int> rep_of(N);
  std::map<int, int> coset_id;  // min rep element id -> coset id
  for (int w = 0; w < N; ++w) {
    int x = w;
    bool moved = true;
    while (moved) {
      moved = false;
      for (int i : parabolic_) {
        if (W.right_descent(x, i)) {
          x = W.mult_gen_right(x, i);
          moved = true;
        }
      }
    }
    rep_of[w] = x;
    coset_id.emplace(x, 0);
  }
  reps_.reserve(coset_id.size());
  for (auto& [rep, id] : coset_id) {
    id = static_cast<int>(reps_.size());
    reps_.push_back(rep);  // element ids are (length, word)-sorted already
  }
  for (int w = 0; w < N; ++w) project_[w] = coset_id.at(rep_of[w]);
}

int project_coset(const CosetSpace& fine, const CosetSpace& coarse, int fine_coset) {
  return coarse.coset_of(fine.min_rep(fine_coset));
}

std::vector<int> coset_lifts(const CosetSpace& fine, const CosetSpace& coarse,
                             int coarse_coset) {
  std::vector<int> out;
  for (int c = 0; c < fine.size(); ++c)
    if (project_coset(fine, coarse, c) == coarse_coset) out.push_back(c);
  return out;
}

}  // namespace smt
