#pragma once

#include <Eigen/Core>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace smt {

/// Error for configured enumeration limits (group size, path counts).
class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Element of the weight lattice in fundamental-weight coordinates:
/// coords[i] = pairing with the i-th simple coroot.
struct Weight {
  Eigen::VectorXi coords;

  Weight() = default;
  explicit Weight(Eigen::VectorXi c) : coords(std::move(c)) {}
  explicit Weight(const std::vector<int>& c)
      : coords(Eigen::Map<const Eigen::VectorXi>(c.data(), static_cast<int>(c.size()))) {}
  static Weight zero(int rank) { return Weight(Eigen::VectorXi::Zero(rank)); }

  int rank() const { return static_cast<int>(coords.size()); }
  bool is_zero() const { return coords.isZero(); }
  bool dominant() const { return (coords.array() >= 0).all(); }

  Weight operator+(const Weight& o) const { return Weight(Eigen::VectorXi(coords + o.coords)); }
  Weight operator-(const Weight& o) const { return Weight(Eigen::VectorXi(coords - o.coords)); }
  Weight operator-() const { return Weight(Eigen::VectorXi(-coords)); }
  Weight operator*(int k) const { return Weight(Eigen::VectorXi(coords * k)); }

  bool operator==(const Weight& o) const { return coords == o.coords; }
  bool operator!=(const Weight& o) const { return !(*this == o); }
  /// Lexicographic order, used for canonical (deterministic) containers.
  bool operator<(const Weight& o) const {
    const int n = rank();
    for (int i = 0; i < n; ++i)
      if (coords[i] != o.coords[i]) return coords[i] < o.coords[i];
    return false;
  }

  std::vector<int> to_vector() const {
    return std::vector<int>(coords.data(), coords.data() + coords.size());
  }
};

/// A root together with its coroot, in all three coordinate systems used here.
struct Root {
  Eigen::VectorXi alpha;   // coordinates in the simple-root basis
  Eigen::VectorXi coroot;  // coroot coordinates in the simple-coroot basis
  Eigen::VectorXi fund;    // coordinates in the fundamental-weight basis
};

/// Cartan data of a simple type: Cartan matrix plus the closed list of
/// positive roots (with coroots), generated by reflection closure from the
/// simple roots.
///
/// Convention: cartan(i, j) = <alpha_j, alpha_i^vee>.
class RootSystem {
 public:
  RootSystem(char family, int rank);

  char family() const { return family_; }
  int rank() const { return rank_; }
  const Eigen::MatrixXi& cartan() const { return cartan_; }
  const std::vector<Root>& positive_roots() const { return positive_; }
  int num_positive_roots() const { return static_cast<int>(positive_.size()); }

  /// |W|, from the classical order formula (no enumeration).
  long long weyl_order() const;

  /// Action of the simple reflection s_i on fundamental-weight coordinates.
  const Eigen::MatrixXi& simple_reflection(int i) const { return simple_refl_[i]; }
  /// Action of s_beta on fundamental-weight coordinates.
  Eigen::MatrixXi reflection(const Root& beta) const;

  /// <mu, beta^vee>.
  int pair(const Weight& mu, const Root& beta) const {
    return beta.coroot.dot(mu.coords);
  }

  Weight fundamental_weight(int i) const;
  Weight rho() const;
  Weight weight(const std::vector<int>& coords) const;

  /// Looks up a vector of fundamental-weight coordinates among the roots.
  /// Returns +`(idx+1)` for positive_roots()[idx], -(idx+1) for its negative,
  /// and 0 if not a root.
  int signed_root_index(const Eigen::VectorXi& fund) const;

 private:
  char family_;
  int rank_;
  Eigen::MatrixXi cartan_;
  std::vector<Root> positive_;
  std::vector<Eigen::MatrixXi> simple_refl_;
  std::map<std::vector<int>, int> root_lookup_;

  void generate_roots();
};

}  // namespace smt
