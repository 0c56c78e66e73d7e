#pragma once

// Finite crystallographic root systems in integer coordinates.
//
// Four coordinate systems are in play, each carried by its own strong type:
//   RootVec      simple-root basis        (alpha_1 .. alpha_n)
//   CorootVec    simple-coroot basis      (alpha_1^v .. alpha_n^v)
//   WeightVec    fundamental-weight basis (omega_1 .. omega_n)
//   CoweightVec  fundamental-coweight basis
//
// Cartan convention: a(s,t) = <alpha_t, alpha_s^v>, so that
//   s(alpha_t) = alpha_t - a(s,t) alpha_s   and   alpha_s = sum_t a(t,s) omega_t.
//
// Letters (simple reflections) are 1-based throughout the public API;
// coordinate vectors are 0-based std::vector-like containers.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace clusterkit {

using Int = std::int64_t;

template <class Tag>
class CoordVec {
public:
  CoordVec() = default;
  explicit CoordVec(std::size_t n) : c_(n, 0) {}
  explicit CoordVec(std::vector<Int> c) : c_(std::move(c)) {}
  CoordVec(std::initializer_list<Int> c) : c_(c) {}

  std::size_t size() const { return c_.size(); }
  Int operator[](std::size_t i) const { return c_[i]; }
  Int& operator[](std::size_t i) { return c_[i]; }
  const std::vector<Int>& coords() const { return c_; }
  auto begin() const { return c_.begin(); }
  auto end() const { return c_.end(); }

  bool is_zero() const {
    for (Int x : c_)
      if (x != 0) return false;
    return true;
  }
  bool is_nonnegative() const {
    for (Int x : c_)
      if (x < 0) return false;
    return true;
  }
  bool is_nonpositive() const {
    for (Int x : c_)
      if (x > 0) return false;
    return true;
  }
  bool is_sign_coherent() const { return is_nonnegative() || is_nonpositive(); }

  CoordVec& operator+=(const CoordVec& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  CoordVec& operator-=(const CoordVec& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  friend CoordVec operator+(CoordVec a, const CoordVec& b) { return a += b; }
  friend CoordVec operator-(CoordVec a, const CoordVec& b) { return a -= b; }
  friend CoordVec operator-(CoordVec a) {
    for (Int& x : a.c_) x = -x;
    return a;
  }
  friend CoordVec operator*(Int k, CoordVec a) {
    for (Int& x : a.c_) x *= k;
    return a;
  }

  friend bool operator==(const CoordVec&, const CoordVec&) = default;
  friend auto operator<=>(const CoordVec&, const CoordVec&) = default;

private:
  std::vector<Int> c_;
};

struct RootTag {};
struct CorootTag {};
struct WeightTag {};
struct CoweightTag {};

using RootVec = CoordVec<RootTag>;
using CorootVec = CoordVec<CorootTag>;
using WeightVec = CoordVec<WeightTag>;
using CoweightVec = CoordVec<CoweightTag>;

template <class Tag>
Int height(const CoordVec<Tag>& v) {
  Int h = 0;
  for (Int x : v) h += x;
  return h;
}

/// Integer Cartan matrix of a finite crystallographic type. The constructor
/// validates every finite-type invariant and throws InvalidTypeError otherwise.
class CartanMatrix {
public:
  explicit CartanMatrix(std::vector<std::vector<Int>> entries, std::string label = {});

  int rank() const { return static_cast<int>(a_.size()); }
  /// 0-based entry a(s,t).
  Int operator()(int s, int t) const { return a_[s][t]; }
  const std::vector<std::vector<Int>>& entries() const { return a_; }
  /// Label such as "B3"; empty for matrices built from raw entries.
  const std::string& label() const { return label_; }
  /// Positive integers d_s with d_s a(s,t) = d_t a(t,s), gcd-normalised.
  const std::vector<Int>& symmetrizer() const { return d_; }

  /// The Cartan matrix of the dual (coroot) system.
  CartanMatrix transpose() const;

  bool commute(int s, int t) const { return a_[s - 1][t - 1] == 0; }

  friend bool operator==(const CartanMatrix& x, const CartanMatrix& y) { return x.a_ == y.a_; }

private:
  std::vector<std::vector<Int>> a_;
  std::vector<Int> d_;
  std::string label_;
};

/// Standard tables with Bourbaki node numbering. For non-simply-laced types
/// the double/triple bond is written as
///   B_n: a(n,n-1) = -2   C_n: a(n-1,n) = -2   F_4: a(3,2) = -2   G_2: a(2,1) = -3.
CartanMatrix cartan_of_type(char family, int rank);

/// Parses "A2", "E6", "b3" (case-insensitive family letter followed by rank).
CartanMatrix cartan_of_type(const std::string& type_label);

/// Positive roots by a reflection closure started at the simple roots,
/// ordered by height and then reverse-lexicographically (so alpha_1 first).
std::vector<RootVec> positive_roots(const CartanMatrix& cartan);

/// A Cartan matrix together with its positive roots and the inverse needed to
/// go from weight to root coordinates. Immutable after construction.
class RootSystem {
public:
  explicit RootSystem(CartanMatrix cartan);

  const CartanMatrix& cartan() const { return cartan_; }
  int rank() const { return cartan_.rank(); }
  /// N = |Phi^+|.
  std::size_t num_positive_roots() const { return positive_.size(); }
  const std::vector<RootVec>& positive_roots() const { return positive_; }
  bool is_positive_root(const RootVec& v) const;
  bool is_root(const RootVec& v) const;

  RootVec simple_root(int s) const;
  CorootVec simple_coroot(int s) const;
  WeightVec fundamental_weight(int s) const;
  CoweightVec fundamental_coweight(int s) const;

  RootVec reflect(int s, const RootVec& v) const;
  CorootVec reflect(int s, const CorootVec& v) const;
  WeightVec reflect(int s, const WeightVec& v) const;
  CoweightVec reflect(int s, const CoweightVec& v) const;

  /// Reflection s_beta for an arbitrary root beta with coroot beta_vee:
  /// v -> v - <v, beta_vee> beta (and the dual formula on coroots/coweights).
  RootVec reflect_in(const RootVec& beta, const CorootVec& beta_vee, const RootVec& v) const;
  CorootVec reflect_in(const RootVec& beta, const CorootVec& beta_vee, const CorootVec& v) const;
  WeightVec reflect_in(const RootVec& beta, const CorootVec& beta_vee, const WeightVec& v) const;
  CoweightVec reflect_in(const RootVec& beta, const CorootVec& beta_vee, const CoweightVec& v) const;

  WeightVec root_to_weight_coords(const RootVec& v) const;
  CoweightVec coroot_to_coweight_coords(const CorootVec& v) const;
  /// Delta-coordinates of w1 - w2; throws LatticeError if it leaves the root lattice.
  RootVec weight_diff_to_root_coords(const WeightVec& w1, const WeightVec& w2) const;

  /// sum_{s,t} y[s] x[t] a(s,t)
  Int pair(const RootVec& x, const CorootVec& y) const;
  /// Dual-basis pairings.
  Int pair(const WeightVec& w, const CorootVec& y) const;
  Int pair(const RootVec& x, const CoweightVec& z) const;

  /// beta^v = 2 beta / (beta, beta) expressed in simple coroots.
  CorootVec coroot_of(const RootVec& beta) const;

private:
  void check_letter(int s) const;

  CartanMatrix cartan_;
  std::vector<RootVec> positive_;
  // A^{-1} = inv_num_ / inv_den_
  std::vector<std::vector<Int>> inv_num_;
  Int inv_den_ = 1;
};

}  // namespace clusterkit
