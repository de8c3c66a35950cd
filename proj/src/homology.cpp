#include <gmpxx.h>

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "seqcm/complex.hpp"

namespace seqcm {

namespace {

struct Overflow {};

// Fraction-free elimination over Z in 64-bit arithmetic; throws Overflow
// when an intermediate value does not fit.
struct CheckedInt {
  using Value = std::int64_t;
  static Value from(std::int64_t v) { return v; }
  static bool is_zero(const Value& v) { return v == 0; }
  static Value mul(Value a, Value b) {
    Value r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static Value sub(Value a, Value b) {
    Value r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static Value gcd(Value a, Value b) { return std::gcd(a, b); }
  static Value div(Value a, Value b) { return a / b; }
  static bool negative(const Value& v) { return v < 0; }
  static Value neg(Value v) {
    if (v == INT64_MIN) throw Overflow{};
    return -v;
  }
};

struct BigInt {
  using Value = mpz_class;
  static Value from(std::int64_t v) { return mpz_class(static_cast<long>(v)); }
  static bool is_zero(const Value& v) { return sgn(v) == 0; }
  static Value mul(const Value& a, const Value& b) { return a * b; }
  static Value sub(const Value& a, const Value& b) { return a - b; }
  static Value gcd(const Value& a, const Value& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
  }
  static Value div(const Value& a, const Value& b) { return a / b; }
  static bool negative(const Value& v) { return sgn(v) < 0; }
  static Value neg(const Value& v) { return -v; }
};

template <typename Arith>
using SparseColumn = std::vector<std::pair<int, typename Arith::Value>>;

// col <- scale_col * col - scale_pivot * pivot, both sorted by row.
template <typename Arith>
SparseColumn<Arith> combine(const SparseColumn<Arith>& col, const typename Arith::Value& scale_col,
                            const SparseColumn<Arith>& pivot,
                            const typename Arith::Value& scale_pivot) {
  SparseColumn<Arith> out;
  out.reserve(col.size() + pivot.size());
  std::size_t i = 0, j = 0;
  while (i < col.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < col.size() && col[i].first < pivot[j].first)) {
      out.emplace_back(col[i].first, Arith::mul(scale_col, col[i].second));
      ++i;
    } else if (i == col.size() || pivot[j].first < col[i].first) {
      out.emplace_back(pivot[j].first,
                       Arith::sub(Arith::from(0), Arith::mul(scale_pivot, pivot[j].second)));
      ++j;
    } else {
      auto v = Arith::sub(Arith::mul(scale_col, col[i].second),
                          Arith::mul(scale_pivot, pivot[j].second));
      if (!Arith::is_zero(v)) out.emplace_back(col[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

template <typename Arith>
void remove_content(SparseColumn<Arith>& col) {
  if (col.empty()) return;
  typename Arith::Value g = Arith::from(0);
  for (const auto& [row, v] : col) g = Arith::gcd(g, v);
  if (Arith::negative(col.back().second)) g = Arith::neg(g);
  for (auto& [row, v] : col) v = Arith::div(v, g);
}

// Rank over Q by fraction-free column reduction: a column is reduced against
// the stored column owning its lowest nonzero row until it vanishes or owns a
// new row. Integer scalings keep every step inside Z.
template <typename Arith>
std::size_t integer_rank(const std::vector<std::vector<std::pair<int, std::int64_t>>>& columns) {
  std::unordered_map<int, SparseColumn<Arith>> owner;
  std::size_t rank = 0;
  for (const auto& raw : columns) {
    SparseColumn<Arith> col;
    for (const auto& [row, v] : raw) {
      if (v != 0) col.emplace_back(row, Arith::from(v));
    }
    std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    while (!col.empty()) {
      auto it = owner.find(col.back().first);
      if (it == owner.end()) break;
      const auto& piv = it->second;
      col = combine<Arith>(col, piv.back().second, piv, col.back().second);
      remove_content<Arith>(col);
    }
    if (!col.empty()) {
      const int low = col.back().first;
      owner.emplace(low, std::move(col));
      ++rank;
    }
  }
  return rank;
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

std::size_t modular_rank(const std::vector<std::vector<std::pair<int, std::int64_t>>>& columns,
                         std::uint64_t p) {
  using Column = std::vector<std::pair<int, std::uint64_t>>;
  std::unordered_map<int, Column> owner;  // stored with pivot entry 1
  std::size_t rank = 0;
  auto reduce = [p](std::int64_t v) {
    const std::int64_t m = v % static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(m < 0 ? m + static_cast<std::int64_t>(p) : m);
  };
  for (const auto& raw : columns) {
    Column col;
    for (const auto& [row, v] : raw) {
      const auto r = reduce(v);
      if (r) col.emplace_back(row, r);
    }
    std::sort(col.begin(), col.end());
    while (!col.empty()) {
      auto it = owner.find(col.back().first);
      if (it == owner.end()) break;
      const Column& piv = it->second;
      const std::uint64_t factor = col.back().second;
      Column next;
      next.reserve(col.size() + piv.size());
      std::size_t i = 0, j = 0;
      while (i < col.size() || j < piv.size()) {
        if (j == piv.size() || (i < col.size() && col[i].first < piv[j].first)) {
          next.push_back(col[i++]);
        } else {
          const std::uint64_t sub = factor * piv[j].second % p;
          if (i < col.size() && col[i].first == piv[j].first) {
            const std::uint64_t v = (col[i].second + p - sub) % p;
            if (v) next.emplace_back(col[i].first, v);
            ++i;
          } else {
            next.emplace_back(piv[j].first, (p - sub) % p);
          }
          ++j;
        }
      }
      col = std::move(next);
    }
    if (!col.empty()) {
      const std::uint64_t inv = pow_mod(col.back().second, p - 2, p);
      for (auto& [row, v] : col) v = v * inv % p;
      const int low = col.back().first;
      owner.emplace(low, std::move(col));
      ++rank;
    }
  }
  return rank;
}

}  // namespace

std::size_t matrix_rank(std::vector<std::vector<std::pair<int, std::int64_t>>> columns,
                        FieldSpec field) {
  if (!field.is_rational()) return modular_rank(columns, field.characteristic);
  try {
    return integer_rank<CheckedInt>(columns);
  } catch (const Overflow&) {
    return integer_rank<BigInt>(columns);
  }
}

BettiVector reduced_betti(const SimplicialComplex& complex, FieldSpec field) {
  if (complex.is_void()) throw std::invalid_argument("reduced homology of the void complex");
  const SimplicialComplex compact = complex.compacted();
  const auto faces = compact.faces_by_dimension();
  const int dim = compact.dimension();

  // rank_of[d + 1] = rank of the boundary map from d-faces to (d-1)-faces.
  std::vector<std::size_t> rank_of(dim + 3, 0);
  if (dim >= 0) rank_of[1] = faces[1].empty() ? 0 : 1;  // vertices -> {∅}
  for (int d = 1; d <= dim; ++d) {
    const auto& rows = faces[d];
    std::unordered_map<FaceMask, int> row_index;
    row_index.reserve(rows.size() * 2);
    for (std::size_t r = 0; r < rows.size(); ++r) row_index.emplace(rows[r], static_cast<int>(r));
    std::vector<std::vector<std::pair<int, std::int64_t>>> columns;
    columns.reserve(faces[d + 1].size());
    for (FaceMask f : faces[d + 1]) {
      std::vector<std::pair<int, std::int64_t>> col;
      int position = 0;
      for (FaceMask c = f; c != 0; c &= c - 1, ++position) {
        const FaceMask without = f & ~(c & (~c + 1));
        col.emplace_back(row_index.at(without), position % 2 == 0 ? 1 : -1);
      }
      columns.push_back(std::move(col));
    }
    rank_of[d + 1] = matrix_rank(std::move(columns), field);
  }

  BettiVector out;
  out.ranks.resize(dim + 2);
  for (int i = -1; i <= dim; ++i) {
    const std::size_t chains = faces[i + 1].size();
    const std::size_t boundary_rank = rank_of[i + 1];
    const std::size_t incoming = rank_of[i + 2];
    out.ranks[i + 1] = chains - boundary_rank - incoming;
  }
  return out;
}

}  // namespace seqcm
