#include "smt/root_system.hpp"

#include <algorithm>
#include <set>

namespace smt {

namespace {

// Bourbaki Cartan matrices, convention cartan(i,j) = <alpha_j, alpha_i^vee>.
Eigen::MatrixXi cartan_matrix(char family, int n) {
  Eigen::MatrixXi c = Eigen::MatrixXi::Zero(n, n);
  for (int i = 0; i < n; ++i) c(i, i) = 2;
  auto chain = [&](int a, int b) { c(a, b) = -1; c(b, a) = -1; };
  switch (family) {
    case 'A':
      if (n < 1) throw std::invalid_argument("type A needs rank >= 1");
      for (int i = 0; i + 1 < n; ++i) chain(i, i + 1);
      break;
    case 'B':
      if (n < 2) throw std::invalid_argument("type B needs rank >= 2");
      for (int i = 0; i + 1 < n; ++i) chain(i, i + 1);
      c(n - 1, n - 2) = -2;  // alpha_n short
      break;
    case 'C':
      if (n < 2) throw std::invalid_argument("type C needs rank >= 2");
      for (int i = 0; i + 1 < n; ++i) chain(i, i + 1);
      c(n - 2, n - 1) = -2;  // alpha_n long
      break;
    case 'D':
      if (n < 3) throw std::invalid_argument("type D needs rank >= 3");
      for (int i = 0; i + 1 < n - 1; ++i) chain(i, i + 1);
      chain(n - 3, n - 1);
      break;
    case 'E':
      if (n < 6 || n > 8) throw std::invalid_argument("type E needs rank 6..8");
      // Bourbaki numbering: chain 1-3-4-5-...-n, node 2 attached to node 4.
      chain(0, 2);
      for (int i = 2; i + 1 < n; ++i) chain(i, i + 1);
      chain(1, 3);
      break;
    case 'F':
      if (n != 4) throw std::invalid_argument("type F needs rank 4");
      chain(0, 1);
      chain(1, 2);
      chain(2, 3);
      c(2, 1) = -2;  // alpha_3, alpha_4 short
      break;
    case 'G':
      if (n != 2) throw std::invalid_argument("type G needs rank 2");
      chain(0, 1);
      c(1, 0) = -3;  // alpha_2 short
      break;
    default:
      throw std::invalid_argument(std::string("unknown family '") + family + "'");
  }
  return c;
}

long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

RootSystem::RootSystem(char family, int rank)
    : family_(family), rank_(rank), cartan_(cartan_matrix(family, rank)) {
  simple_refl_.reserve(rank_);
  for (int i = 0; i < rank_; ++i) {
    // s_i(mu) = mu - <mu, alpha_i^vee> alpha_i; alpha_i has fundamental
    // coordinates given by column i of the Cartan matrix.
    Eigen::MatrixXi m = Eigen::MatrixXi::Identity(rank_, rank_);
    m.col(i) -= cartan_.col(i);
    simple_refl_.push_back(std::move(m));
  }
  generate_roots();
}

void RootSystem::generate_roots() {
  const int n = rank_;
  std::set<std::vector<int>> seen;
  std::vector<Root> queue;
  for (int i = 0; i < n; ++i) {
    Root r;
    r.alpha = Eigen::VectorXi::Zero(n);
    r.alpha[i] = 1;
    r.coroot = Eigen::VectorXi::Zero(n);
    r.coroot[i] = 1;
    r.fund = cartan_.col(i);
    queue.push_back(r);
    seen.insert(std::vector<int>(r.alpha.data(), r.alpha.data() + n));
  }
  for (std::size_t k = 0; k < queue.size(); ++k) {
    const Root r = queue[k];
    for (int j = 0; j < n; ++j) {
      // s_j on alpha-coordinates and on coroot coordinates.
      int pr = cartan_.row(j).dot(r.alpha);    // <beta, alpha_j^vee>
      int pc = cartan_.col(j).dot(r.coroot);   // <alpha_j, beta^vee>
      Root img;
      img.alpha = r.alpha;
      img.alpha[j] -= pr;
      img.coroot = r.coroot;
      img.coroot[j] -= pc;
      img.fund = simple_refl_[j] * r.fund;
      if ((img.alpha.array() >= 0).all()) {
        std::vector<int> key(img.alpha.data(), img.alpha.data() + n);
        if (seen.insert(key).second) queue.push_back(img);
      }
    }
  }
  std::sort(queue.begin(), queue.end(), [n](const Root& a, const Root& b) {
    int ha = a.alpha.sum(), hb = b.alpha.sum();
    if (ha != hb) return ha < hb;
    return std::lexicographical_compare(a.alpha.data(), a.alpha.data() + n,
                                        b.alpha.data(), b.alpha.data() + n);
  });
  positive_ = std::move(queue);
  for (int idx = 0; idx < static_cast<int>(positive_.size()); ++idx) {
    const auto& f = positive_[idx].fund;
    root_lookup_[std::vector<int>(f.data(), f.data() + n)] = idx + 1;
    Eigen::VectorXi neg = -f;
    root_lookup_[std::vector<int>(neg.data(), neg.data() + n)] = -(idx + 1);
  }
}

long long RootSystem::weyl_order() const {
  const int n = rank_;
  switch (family_) {
    case 'A': return factorial(n + 1);
    case 'B':
    case 'C': return factorial(n) << n;
    case 'D': return factorial(n) << (n - 1);
    case 'E':
      if (n == 6) return 51840;
      if (n == 7) return 2903040;
      return 696729600;
    case 'F': return 1152;
    case 'G': return 12;
  }
  throw std::logic_error("unreachable");
}

Eigen::MatrixXi RootSystem::reflection(const Root& beta) const {
  // s_beta(mu) = mu - <mu, beta^vee> beta.
  Eigen::MatrixXi m = Eigen::MatrixXi::Identity(rank_, rank_);
  m -= beta.fund * beta.coroot.transpose();
  return m;
}

Weight RootSystem::fundamental_weight(int i) const {
  Eigen::VectorXi c = Eigen::VectorXi::Zero(rank_);
  c[i] = 1;
  return Weight(std::move(c));
}

Weight RootSystem::rho() const { return Weight(Eigen::VectorXi::Ones(rank_)); }

Weight RootSystem::weight(const std::vector<int>& coords) const {
  if (static_cast<int>(coords.size()) != rank_)
    throw std::invalid_argument("weight coordinate count != rank");
  return Weight(coords);
}

int RootSystem::signed_root_index(const Eigen::VectorXi& fund) const {
  std::vector<int> key(fund.data(), fund.data() + fund.size());
  auto it = root_lookup_.find(key);
  return it == root_lookup_.end() ? 0 : it->second;
}

}  // namespace smt
