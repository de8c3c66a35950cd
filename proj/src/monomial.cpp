#include "seqcm/monomial.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>
#include <unordered_map>

namespace seqcm {

namespace {

void require_same_ring(const Monomial& a, const Monomial& b) {
  if (a.num_vars() != b.num_vars()) {
    throw std::invalid_argument("monomials live in rings of different size");
  }
}

void require_mask_range(int n) {
  if (n > kMaxVariables) {
    throw std::invalid_argument("operation supports at most " + std::to_string(kMaxVariables) +
                                " variables, got " + std::to_string(n));
  }
}

// Keeps only inclusion-minimal masks; output sorted ascending.
std::vector<VarMask> minimal_masks(std::vector<VarMask> masks) {
  std::sort(masks.begin(), masks.end(), [](VarMask a, VarMask b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  std::vector<VarMask> kept;
  for (VarMask m : masks) {
    bool redundant = false;
    for (VarMask k : kept) {
      if ((k & m) == k) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(m);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

struct MaskVectorHash {
  std::size_t operator()(const std::vector<VarMask>& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (VarMask m : v) {
      h ^= m + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace

Monomial Monomial::variable(int n, int i) {
  if (i < 0 || i >= n) throw std::invalid_argument("variable index out of range");
  std::vector<Exponent> e(n, 0);
  e[i] = 1;
  return Monomial(std::move(e));
}

Monomial Monomial::from_mask(int n, VarMask m) {
  std::vector<Exponent> e(n, 0);
  for (; m != 0; m &= m - 1) {
    const int i = std::countr_zero(m);
    if (i >= n) throw std::invalid_argument("mask exceeds ring size");
    e[i] = 1;
  }
  return Monomial(std::move(e));
}

bool Monomial::is_unit() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::is_squarefree() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e <= 1; });
}

Exponent Monomial::degree() const {
  Exponent d = 0;
  for (Exponent e : exps_) d += e;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  require_same_ring(*this, other);
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  require_same_ring(a, b);
  std::vector<Exponent> e(a.exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = a.exps_[i] + b.exps_[i];
  return Monomial(std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  require_same_ring(a, b);
  std::vector<Exponent> e(a.exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(a.exps_[i], b.exps_[i]);
  return Monomial(std::move(e));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_ring(a, b);
  std::vector<Exponent> e(a.exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.exps_[i], b.exps_[i]);
  return Monomial(std::move(e));
}

Monomial quotient(const Monomial& a, const Monomial& b) {
  require_same_ring(a, b);
  std::vector<Exponent> e(a.exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    e[i] = a.exps_[i] > b.exps_[i] ? a.exps_[i] - b.exps_[i] : 0;
  }
  return Monomial(std::move(e));
}

std::string Monomial::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i);
    if (exps_[i] > 1) out += '^' + std::to_string(exps_[i]);
  }
  return out.empty() ? "1" : out;
}

VarMask support(const Monomial& m) {
  require_mask_range(m.num_vars());
  VarMask s = 0;
  for (int i = 0; i < m.num_vars(); ++i) {
    if (m[i] > 0) s |= VarMask{1} << i;
  }
  return s;
}

Monomial radical_of_monomial(const Monomial& m) {
  std::vector<Exponent> e(m.exponents());
  for (Exponent& x : e) x = std::min<Exponent>(x, 1);
  return Monomial(std::move(e));
}

MonomialIdeal::MonomialIdeal(int n, std::vector<Monomial> gens) : n_(n) {
  for (const Monomial& g : gens) {
    if (g.num_vars() != n) throw std::invalid_argument("generator does not match ring size");
    if (g.is_unit()) {
      unit_ = true;
      return;
    }
  }
  // Sort by degree so a divisor is always seen before its multiples.
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    const auto da = a.degree(), db = b.degree();
    return da != db ? da < db : a < b;
  });
  for (Monomial& g : gens) {
    bool redundant = false;
    for (const Monomial& k : gens_) {
      if (k.divides(g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) gens_.push_back(std::move(g));
  }
  // Canonical order: lexicographic, largest first (x0 > x1 > ...).
  std::sort(gens_.begin(), gens_.end(), std::greater<>());
  squarefree_ =
      std::all_of(gens_.begin(), gens_.end(), [](const Monomial& m) { return m.is_squarefree(); });
}

MonomialIdeal MonomialIdeal::unit(int n) {
  MonomialIdeal out;
  out.n_ = n;
  out.unit_ = true;
  return out;
}

MonomialIdeal MonomialIdeal::from_masks(int n, const std::vector<VarMask>& masks) {
  std::vector<Monomial> gens;
  gens.reserve(masks.size());
  for (VarMask m : masks) gens.push_back(Monomial::from_mask(n, m));
  return MonomialIdeal(n, std::move(gens));
}

bool MonomialIdeal::contains(const Monomial& m) const {
  if (m.num_vars() != n_) throw std::invalid_argument("monomial does not match ring size");
  if (unit_) return true;
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

std::vector<VarMask> MonomialIdeal::squarefree_masks() const {
  if (unit_) throw std::logic_error("unit ideal has no squarefree generator masks");
  if (!squarefree_) throw std::logic_error("ideal is not squarefree: " + to_string());
  std::vector<VarMask> out;
  out.reserve(gens_.size());
  for (const Monomial& g : gens_) out.push_back(support(g));
  std::sort(out.begin(), out.end());
  return out;
}

MonomialIdeal MonomialIdeal::operator+(const MonomialIdeal& other) const {
  if (other.n_ != n_) throw std::invalid_argument("ideals live in rings of different size");
  if (unit_ || other.unit_) return unit(n_);
  std::vector<Monomial> gens = gens_;
  gens.insert(gens.end(), other.gens_.begin(), other.gens_.end());
  return MonomialIdeal(n_, std::move(gens));
}

std::string MonomialIdeal::to_string() const {
  if (unit_) return "(1)";
  if (gens_.empty()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ", ";
    out += gens_[i].to_string();
  }
  return out + ")";
}

MonomialIdeal weighted_edge_ideal(const Graph& g, const WeightFunction& w) {
  if (!w.matches(g)) throw std::invalid_argument("weight function is not defined on E(G)");
  const int n = g.num_vertices();
  std::vector<Monomial> gens;
  for (std::size_t k = 0; k < g.edges().size(); ++k) {
    std::vector<Exponent> e(n, 0);
    e[g.edges()[k].u] = w[k];
    e[g.edges()[k].v] = w[k];
    gens.emplace_back(std::move(e));
  }
  MonomialIdeal ideal(n, gens);
  // Distinct edges have distinct supports, so no generator is dropped.
  if (static_cast<int>(ideal.generators().size()) != g.num_edges()) {
    throw std::logic_error("weighted edge generators were not minimal");
  }
  return ideal;
}

MonomialIdeal edge_ideal(const Graph& g) {
  return weighted_edge_ideal(g, WeightFunction::constant(g, 1));
}

MonomialIdeal radical(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) return ideal;
  std::vector<Monomial> gens;
  for (const Monomial& f : ideal.generators()) gens.push_back(radical_of_monomial(f));
  return MonomialIdeal(ideal.num_vars(), std::move(gens));
}

MonomialIdeal colon_by_monomial(const MonomialIdeal& ideal, const Monomial& u) {
  if (u.num_vars() != ideal.num_vars()) {
    throw std::invalid_argument("monomial does not match ring size");
  }
  if (ideal.is_unit()) return ideal;
  std::vector<Monomial> gens;
  for (const Monomial& f : ideal.generators()) gens.push_back(quotient(f, u));
  return MonomialIdeal(ideal.num_vars(), std::move(gens));
}

MonomialIdeal radical_colon(const MonomialIdeal& ideal, const Monomial& u) {
  if (u.num_vars() != ideal.num_vars()) {
    throw std::invalid_argument("monomial does not match ring size");
  }
  if (ideal.is_unit()) return ideal;
  std::vector<Monomial> gens;
  for (const Monomial& f : ideal.generators()) {
    gens.push_back(radical_of_monomial(quotient(f, u)));
  }
  return MonomialIdeal(ideal.num_vars(), std::move(gens));
}

std::vector<Exponent> exponent_bound(const MonomialIdeal& ideal) {
  std::vector<Exponent> d(ideal.num_vars(), 0);
  for (const Monomial& f : ideal.generators()) {
    for (int i = 0; i < ideal.num_vars(); ++i) d[i] = std::max(d[i], f[i]);
  }
  return d;
}

namespace {

// Odometer over per-variable value lists; x0 varies fastest.
class LatticeWalker {
 public:
  explicit LatticeWalker(std::vector<std::vector<Exponent>> values)
      : values_(std::move(values)), pos_(values_.size(), 0), point_(values_.size(), 0) {
    for (std::size_t i = 0; i < values_.size(); ++i) point_[i] = values_[i].front();
  }

  const std::vector<Exponent>& point() const { return point_; }

  bool advance() {
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (++pos_[i] < values_[i].size()) {
        point_[i] = values_[i][pos_[i]];
        return true;
      }
      pos_[i] = 0;
      point_[i] = values_[i][0];
    }
    return false;
  }

 private:
  std::vector<std::vector<Exponent>> values_;
  std::vector<std::size_t> pos_;
  std::vector<Exponent> point_;
};

std::vector<std::vector<Exponent>> lattice_values(const MonomialIdeal& ideal, LatticeScan scan) {
  const int n = ideal.num_vars();
  const auto bound = exponent_bound(ideal);
  std::vector<std::vector<Exponent>> values(n);
  for (int i = 0; i < n; ++i) {
    Exponent lowest = 0;
    for (const Monomial& f : ideal.generators()) {
      if (f[i] > 0 && (lowest == 0 || f[i] < lowest)) lowest = f[i];
    }
    values[i].push_back(0);
    const Exponent start = (scan == LatticeScan::kReduced && lowest > 0) ? lowest : 1;
    for (Exponent a = start; a <= bound[i]; ++a) values[i].push_back(a);
  }
  return values;
}

}  // namespace

std::vector<AssociatedRadical> enumerate_associated_radicals(const MonomialIdeal& ideal,
                                                             LatticeScan scan) {
  if (!ideal.is_proper()) throw std::invalid_argument("associated radicals need a proper ideal");
  const int n = ideal.num_vars();
  require_mask_range(n);
  const auto& gens = ideal.generators();
  const std::size_t r = gens.size();

  // Flattened generator exponents for the inner loop.
  std::vector<Exponent> g(r * n);
  for (std::size_t j = 0; j < r; ++j)
    for (int i = 0; i < n; ++i) g[j * n + i] = gens[j][i];

  std::unordered_map<std::vector<VarMask>, std::size_t, MaskVectorHash> index;
  std::vector<AssociatedRadical> out;
  std::vector<VarMask> masks(r);

  LatticeWalker walker(lattice_values(ideal, scan));
  do {
    const auto& a = walker.point();
    bool member = false;
    for (std::size_t j = 0; j < r; ++j) {
      VarMask m = 0;
      const Exponent* row = &g[j * n];
      for (int i = 0; i < n; ++i) {
        if (row[i] > a[i]) m |= VarMask{1} << i;
      }
      if (m == 0) {
        member = true;
        break;
      }
      masks[j] = m;
    }
    if (member) continue;
    auto key = minimal_masks(masks);
    if (index.find(key) != index.end()) continue;
    index.emplace(key, out.size());
    out.push_back({MonomialIdeal::from_masks(n, key), Monomial(a)});
  } while (walker.advance());
  return out;
}

std::vector<VarMask> associated_primes(const MonomialIdeal& ideal) {
  if (!ideal.is_proper()) throw std::invalid_argument("associated primes need a proper ideal");
  const int n = ideal.num_vars();
  require_mask_range(n);
  const auto& gens = ideal.generators();
  if (gens.empty()) return {0};

  std::vector<VarMask> primes;
  std::vector<Exponent> q(n);
  LatticeWalker walker(lattice_values(ideal, LatticeScan::kFull));
  std::vector<std::vector<Exponent>> quotients(gens.size());
  do {
    const auto& a = walker.point();
    bool member = false;
    VarMask linear = 0;  // variables that appear as degree-one quotients
    for (std::size_t j = 0; j < gens.size() && !member; ++j) {
      auto& qj = quotients[j];
      qj.assign(n, 0);
      Exponent deg = 0;
      int last = -1;
      for (int i = 0; i < n; ++i) {
        qj[i] = gens[j][i] > a[i] ? gens[j][i] - a[i] : 0;
        deg += qj[i];
        if (qj[i]) last = i;
      }
      if (deg == 0) member = true;
      if (deg == 1) linear |= VarMask{1} << last;
    }
    if (member) continue;
    // I : u is prime iff every quotient is divisible by one of the linear ones.
    bool prime = true;
    for (const auto& qj : quotients) {
      bool hit = false;
      for (int i = 0; i < n && !hit; ++i) hit = qj[i] && ((linear >> i) & 1u);
      if (!hit) {
        prime = false;
        break;
      }
    }
    if (prime && std::find(primes.begin(), primes.end(), linear) == primes.end()) {
      primes.push_back(linear);
    }
  } while (walker.advance());
  std::sort(primes.begin(), primes.end(), [](VarMask a, VarMask b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  return primes;
}

std::vector<VarMask> minimal_primes(const MonomialIdeal& ideal) {
  if (!ideal.is_proper()) throw std::invalid_argument("minimal primes need a proper ideal");
  require_mask_range(ideal.num_vars());
  std::vector<VarMask> supports;
  for (const Monomial& f : ideal.generators()) supports.push_back(support(f));
  supports = minimal_masks(supports);

  std::vector<VarMask> covers;
  std::function<void(VarMask)> branch = [&](VarMask cover) {
    for (VarMask s : supports) {
      if ((s & cover) == 0) {
        for (VarMask c = s; c != 0; c &= c - 1) branch(cover | (c & -c));
        return;
      }
    }
    covers.push_back(cover);
  };
  branch(0);
  covers = minimal_masks(covers);
  std::sort(covers.begin(), covers.end(), [](VarMask a, VarMask b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  return covers;
}

bool is_unmixed(const MonomialIdeal& ideal) {
  const auto primes = associated_primes(ideal);
  const int h = std::popcount(primes.front());
  return std::all_of(primes.begin(), primes.end(),
                     [h](VarMask p) { return std::popcount(p) == h; });
}

bool is_unmixed_radical(const MonomialIdeal& ideal) {
  const auto primes = minimal_primes(ideal);
  const int h = std::popcount(primes.front());
  return std::all_of(primes.begin(), primes.end(),
                     [h](VarMask p) { return std::popcount(p) == h; });
}

int krull_dim(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) return -1;
  const auto primes = minimal_primes(ideal);
  return ideal.num_vars() - std::popcount(primes.front());
}

Polarization polarize(const MonomialIdeal& ideal) {
  const int n = ideal.num_vars();
  const auto bound = exponent_bound(ideal);
  Polarization out;
  std::vector<int> offset(n, 0);
  for (int i = 0; i < n; ++i) {
    offset[i] = static_cast<int>(out.variables.size());
    for (Exponent s = 1; s <= bound[i]; ++s) out.variables.push_back({i, static_cast<int>(s)});
  }
  const int wide = static_cast<int>(out.variables.size());
  if (ideal.is_unit()) {
    out.ideal = MonomialIdeal::unit(wide);
    return out;
  }
  std::vector<Monomial> gens;
  for (const Monomial& f : ideal.generators()) {
    std::vector<Exponent> e(wide, 0);
    for (int i = 0; i < n; ++i)
      for (Exponent s = 0; s < f[i]; ++s) e[offset[i] + s] = 1;
    gens.emplace_back(std::move(e));
  }
  out.ideal = MonomialIdeal(wide, std::move(gens));
  return out;
}

}  // namespace seqcm
