#include "burau/representation.hpp"

#include <map>
#include <tuple>

#include "burau/error.hpp"

namespace burau {

namespace {

void check_strands(int strands) {
  if (strands != 3 && strands != 4)
    throw PreconditionError("Burau representation is implemented for 3 and 4 strands, not " +
                            std::to_string(strands));
}

const LaurentPoly kT = LaurentPoly::var(1);

}  // namespace

LaurentMatrix burau_generator(int strands, int index, bool inverted) {
  check_strands(strands);
  if (index < 1 || index >= strands) throw PreconditionError("generator index out of range");
  const int n = strands - 1;
  LaurentMatrix m = LaurentMatrix::identity(n);
  // Row index-1 carries the nontrivial block: (t, -t, 1) centred on the
  // diagonal, truncated at the matrix boundary.
  const int r = index - 1;
  if (r - 1 >= 0) m.at(r, r - 1) = kT;
  m.at(r, r) = -kT;
  if (r + 1 < n) m.at(r, r + 1) = LaurentPoly(1L);
  return inverted ? m.inverse() : m;
}

LaurentMatrix burau(const BraidWord& w) {
  const int strands = w.strands();
  check_strands(strands);
  std::map<std::pair<int, bool>, LaurentMatrix> cache;
  auto gen = [&](int index, bool inv) -> const LaurentMatrix& {
    auto key = std::make_pair(index, inv);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, burau_generator(strands, index, inv)).first;
    return it->second;
  };
  LaurentMatrix m = LaurentMatrix::identity(strands - 1);
  for (const auto& l : w.letters()) {
    const LaurentMatrix& g = gen(l.index, l.power < 0);
    for (int k = 0; k < std::abs(l.power); ++k) m = m * g;
  }
  return m;
}

LaurentMatrix iota() { return LaurentMatrix::diagonal({LaurentPoly(1L), LaurentPoly(-1L)}); }

ConjugatedGenerators conjugated_generators() {
  // iota is an involution, so iota^-1 = iota.
  LaurentMatrix i = iota();
  return {i * burau(named_word("a2", 3)) * i, i * burau(named_word("a1", 3)) * i};
}

// ------------------------------------------------------------ Squier form

namespace {

using Row = std::vector<Rational>;

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<Row>& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
    std::size_t p = row;
    while (p < a.size() && a[p][col] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[row]);
    Rational inv = 1 / a[row][col];
    for (auto& v : a[row]) v *= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (std::size_t c = col; c < cols; ++c) a[r][c] -= f * a[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

struct Unknown {
  int i, j, exponent;
};

std::optional<SquierForm> solve_window(int strands, int window) {
  const int n = strands - 1;
  std::vector<Unknown> unknowns;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (std::abs(i - j) <= 1)
        for (int e = 0; e <= window; ++e) unknowns.push_back({i, j, e});

  std::vector<LaurentMatrix> gens_s;
  for (int g = 1; g < strands; ++g) gens_s.push_back(burau_generator(strands, g).substitute_power(2));

  // Equation rows keyed by (generator, entry row, entry col, s-degree).
  std::map<std::tuple<int, int, int, int>, std::size_t> row_of;
  std::vector<std::map<std::size_t, Rational>> sparse_rows;
  for (std::size_t u = 0; u < unknowns.size(); ++u) {
    const auto& un = unknowns[u];
    LaurentMatrix e(n);
    e.at(un.i, un.j) = LaurentPoly::var(un.exponent);
    for (std::size_t g = 0; g < gens_s.size(); ++g) {
      LaurentMatrix d = gens_s[g].star() * e * gens_s[g] - e;
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
          for (const auto& [deg, c] : d.at(p, q).terms()) {
            auto key = std::make_tuple(static_cast<int>(g), p, q, deg);
            auto [it, inserted] = row_of.try_emplace(key, sparse_rows.size());
            if (inserted) sparse_rows.emplace_back();
            sparse_rows[it->second][u] += Rational(c);
          }
    }
  }
  const std::size_t cols = unknowns.size();
  std::vector<Row> a(sparse_rows.size(), Row(cols, Rational(0)));
  for (std::size_t r = 0; r < sparse_rows.size(); ++r)
    for (const auto& [c, v] : sparse_rows[r]) a[r][c] = v;
  auto pivots = rref(a, cols);
  if (pivots.size() == cols) return std::nullopt;

  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  const int dimension = static_cast<int>(cols - pivots.size());

  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Row v(cols, Rational(0));
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][f];
    // Clear denominators, make primitive with the first nonzero positive.
    Integer l = 1;
    for (const auto& x : v) l = lcm(l, Integer(x.get_den()));
    std::vector<Integer> iv;
    for (const auto& x : v) iv.emplace_back(x * l);
    Integer g = 0;
    for (const auto& x : iv) g = gcd(g, x);
    for (const auto& x : iv)
      if (x != 0) {
        if (x < 0) g = -g;
        break;
      }
    LaurentMatrix j(n);
    for (std::size_t u = 0; u < cols; ++u) {
      if (iv[u] == 0) continue;
      j.at(unknowns[u].i, unknowns[u].j) += LaurentPoly::monomial(iv[u] / g, unknowns[u].exponent);
    }
    if (j.det().is_zero()) continue;
    SquierForm form;
    form.strands = strands;
    form.j_s = j;
    form.window = window;
    form.solution_dimension = dimension;
    return form;
  }
  return std::nullopt;
}

}  // namespace

SquierForm derive_squier_form(int strands) {
  check_strands(strands);
  constexpr int kMaxWindow = 8;
  for (int w = 0; w <= kMaxWindow; ++w) {
    auto form = solve_window(strands, w);
    if (!form) continue;
    for (int g = 1; g < strands; ++g)
      if (!satisfies_squier_relation(*form, burau_generator(strands, g)))
        throw InvariantError("derived Squier form fails verification");
    return *form;
  }
  throw InvariantError("no Squier form found on the tridiagonal ansatz");
}

const SquierForm& squier_form(int strands) {
  check_strands(strands);
  static const SquierForm f3 = derive_squier_form(3);
  static const SquierForm f4 = derive_squier_form(4);
  return strands == 3 ? f3 : f4;
}

bool satisfies_squier_relation(const SquierForm& form, const LaurentMatrix& rho_t) {
  LaurentMatrix r = rho_t.substitute_power(2);
  return r.star() * form.j_s * r == form.j_s;
}

bool duality_holds(const LaurentMatrix& rho_t, const SquierForm& form, DualityOrder order) {
  LaurentMatrix m = rho_t.substitute_power(2);
  LaurentMatrix jt = form.j_s.transpose();
  LaurentMatrix inv_t = m.inverse().transpose();
  if (order == DualityOrder::FromSquierRelation) return jt * m.bar() == inv_t * jt;
  return m.bar() * jt == jt * inv_t;
}

bool verify_duality(const BraidWord& w, DualityOrder order) {
  return duality_holds(burau(w), squier_form(w.strands()), order);
}

RealMatrix specialize(const LaurentMatrix& m, const Scalar& t0) {
  if (t0.is_zero()) throw PreconditionError("zero specialization: rho(sigma_i) has determinant -t");
  RealMatrix out(m.size());
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j) out.at(i, j) = m.at(i, j).evaluate(t0);
  return out;
}

}  // namespace burau
