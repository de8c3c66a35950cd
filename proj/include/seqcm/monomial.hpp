#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "seqcm/graph.hpp"

namespace seqcm {

using Exponent = std::uint32_t;

/// Variable subsets of a polynomial ring, one bit per variable.
using VarMask = std::uint32_t;

/// Largest ambient variable count for the bitmask-based routines.
inline constexpr int kMaxVariables = 32;

/// x^a for an exponent vector a over a fixed number of variables.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<Exponent> exponents) : exps_(std::move(exponents)) {}
  static Monomial unit(int n) { return Monomial(std::vector<Exponent>(n, 0)); }
  static Monomial variable(int n, int i);
  /// Squarefree monomial with support `m`.
  static Monomial from_mask(int n, VarMask m);

  int num_vars() const { return static_cast<int>(exps_.size()); }
  const std::vector<Exponent>& exponents() const { return exps_; }
  Exponent operator[](int i) const { return exps_[i]; }

  bool is_unit() const;
  bool is_squarefree() const;
  Exponent degree() const;
  bool divides(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  /// a / gcd(a, b).
  friend Monomial quotient(const Monomial& a, const Monomial& b);

  /// "x0^2*x3", or "1" for the unit monomial.
  std::string to_string() const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exps_;
};

VarMask support(const Monomial& m);
Monomial radical_of_monomial(const Monomial& m);

/// Monomial ideal in n variables, stored by its minimal generators sorted in
/// decreasing lexicographic exponent order. The unit ideal is a flag, never
/// a generator.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  /// Minimalizes `gens`. Any unit generator (or is_unit_ideal) gives (1).
  MonomialIdeal(int n, std::vector<Monomial> gens);
  static MonomialIdeal unit(int n);
  /// Ideal generated by the squarefree monomials with the given supports.
  static MonomialIdeal from_masks(int n, const std::vector<VarMask>& masks);

  int num_vars() const { return n_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  bool is_unit() const { return unit_; }
  bool is_proper() const { return !unit_; }
  bool is_squarefree() const { return squarefree_; }
  bool contains(const Monomial& m) const;

  /// Supports of the generators of a squarefree ideal, sorted ascending.
  /// Throws std::logic_error for non-squarefree or unit ideals.
  std::vector<VarMask> squarefree_masks() const;

  /// Sum with another ideal in the same ring.
  MonomialIdeal operator+(const MonomialIdeal& other) const;

  /// "(x0*x1, x1^2)", "(1)" for the unit ideal, "(0)" without generators.
  std::string to_string() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;
  friend auto operator<=>(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  int n_ = 0;
  bool unit_ = false;
  bool squarefree_ = true;
  std::vector<Monomial> gens_;
};

MonomialIdeal weighted_edge_ideal(const Graph& g, const WeightFunction& w);
MonomialIdeal edge_ideal(const Graph& g);
MonomialIdeal radical(const MonomialIdeal& ideal);

/// I : u, generated by f / gcd(f, u) over the generators f of I.
MonomialIdeal colon_by_monomial(const MonomialIdeal& ideal, const Monomial& u);

/// sqrt(I : u), generated by sqrt(f / gcd(f, u)). Unit ideal when u is in I.
MonomialIdeal radical_colon(const MonomialIdeal& ideal, const Monomial& u);

/// D_i: the largest exponent of x_i among the generators.
std::vector<Exponent> exponent_bound(const MonomialIdeal& ideal);

enum class LatticeScan {
  /// Skip exponents a_i that lie strictly below every positive exponent of
  /// x_i among the generators; such a_i give the same radical as a_i = 0.
  kReduced,
  /// Every point of prod {0..D_i}.
  kFull,
};

struct AssociatedRadical {
  MonomialIdeal radical;
  /// First lattice point u (in scan order) with sqrt(I : u) = radical.
  Monomial witness;
};

/// Every distinct sqrt(I : u) for monomials u not in I.
///
/// Since sqrt(I : x^a) only depends on min(a_i, D_i), the box prod {0..D_i}
/// covers every monomial. Points are visited as an odometer with x0 varying
/// fastest; results are returned in order of first appearance.
std::vector<AssociatedRadical> enumerate_associated_radicals(
    const MonomialIdeal& ideal, LatticeScan scan = LatticeScan::kReduced);

/// Associated primes, as variable sets P with I : u = (x_i : i in P) for some
/// monomial u, sorted by (size, mask).
std::vector<VarMask> associated_primes(const MonomialIdeal& ideal);

/// Minimal primes of sqrt(I): minimal transversals of the generator supports.
std::vector<VarMask> minimal_primes(const MonomialIdeal& ideal);

/// All associated primes have the same height.
bool is_unmixed(const MonomialIdeal& ideal);
/// All minimal primes have the same height.
bool is_unmixed_radical(const MonomialIdeal& ideal);
/// Krull dimension of S/I; -1 for the unit ideal.
int krull_dim(const MonomialIdeal& ideal);

struct PolarVariable {
  int variable;  // original variable index
  int slot;      // 1-based copy number
};

struct Polarization {
  MonomialIdeal ideal;
  /// variables[k] names new variable k; ordered variable-major, slot-minor.
  std::vector<PolarVariable> variables;
};

/// Replaces x_i^a in each generator by x_{i,1} ... x_{i,a}. Variables that
/// occur in no generator receive no copies.
Polarization polarize(const MonomialIdeal& ideal);

}  // namespace seqcm
