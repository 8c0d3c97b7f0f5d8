#pragma once

#include <map>

#include "smt/root_system.hpp"

namespace smt {

/// Element of the group algebra Z[Λ]: a finite integer-valued map on the
/// weight lattice. Zero-coefficient terms are never stored.
class FormalCharacter {
 public:
  FormalCharacter() = default;

  static FormalCharacter monomial(const Weight& w, long long c = 1) {
    FormalCharacter f;
    f.add(w, c);
    return f;
  }
  static FormalCharacter one(int rank) { return monomial(Weight::zero(rank)); }

  void add(const Weight& w, long long c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted && (it->second += c) == 0) terms_.erase(it);
  }

  FormalCharacter& operator+=(const FormalCharacter& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
  }
  FormalCharacter& operator-=(const FormalCharacter& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
  }
  friend FormalCharacter operator+(FormalCharacter a, const FormalCharacter& b) { return a += b; }
  friend FormalCharacter operator-(FormalCharacter a, const FormalCharacter& b) { return a -= b; }

  friend FormalCharacter operator*(const FormalCharacter& a, const FormalCharacter& b) {
    FormalCharacter r;
    for (const auto& [wa, ca] : a.terms_)
      for (const auto& [wb, cb] : b.terms_) r.add(wa + wb, ca * cb);
    return r;
  }
  FormalCharacter& operator*=(const FormalCharacter& o) { return *this = *this * o; }

  FormalCharacter scaled(long long k) const {
    FormalCharacter r;
    if (k != 0)
      for (const auto& [w, c] : terms_) r.terms_.emplace(w, c * k);
    return r;
  }
  /// Multiplication by e^shift.
  FormalCharacter shifted(const Weight& shift) const {
    FormalCharacter r;
    for (const auto& [w, c] : terms_) r.terms_.emplace(w + shift, c);
    return r;
  }

  bool operator==(const FormalCharacter& o) const { return terms_ == o.terms_; }
  bool operator!=(const FormalCharacter& o) const { return !(*this == o); }

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  long long coeff(const Weight& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? 0 : it->second;
  }
  /// Evaluation at e^mu -> 1 (total coefficient mass).
  long long mass() const {
    long long m = 0;
    for (const auto& [w, c] : terms_) m += c;
    return m;
  }
  bool all_nonnegative() const {
    for (const auto& [w, c] : terms_)
      if (c < 0) return false;
    return true;
  }

  const std::map<Weight, long long>& terms() const { return terms_; }

 private:
  std::map<Weight, long long> terms_;  // lex order on weights; canonical form
};

}  // namespace smt
