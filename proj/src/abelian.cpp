#include "epilab/abelian.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>
#include <tuple>

namespace epilab {

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
std::int64_t lcm64(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

XGcd xgcd(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
    std::tie(old_t, t) = std::make_pair(t, old_t - q * t);
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

std::string format_elem(const Elem& x) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < x.size(); ++i) os << (i ? "," : "") << x[i];
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------- IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, BigInt(0)) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw AlgebraError("matrix dimension mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const BigInt& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

bool IntMatrix::operator==(const IntMatrix& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && (*this)(i, j) != 0) return false;
  return true;
}

BigInt IntMatrix::determinant() const {
  if (rows_ != cols_) throw AlgebraError("determinant of non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix a = *this;
  BigInt sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = v;
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}
void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}
void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const BigInt& k) {
  if (k == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += k * (*this)(src, j);
}
void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const BigInt& k) {
  if (k == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += k * (*this)(i, src);
}
void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
}
void IntMatrix::negate_col(std::size_t c) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, c) = -(*this)(i, c);
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
    os << "]\n";
  }
  return os;
}

// ---------------------------------------------------------------- Smith form

namespace {

struct SmithWork {
  IntMatrix a, u, v, vinv;
  bool track_u;

  void swap_rows(std::size_t i, std::size_t j) {
    a.swap_rows(i, j);
    if (track_u) u.swap_rows(i, j);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    a.swap_cols(i, j);
    v.swap_cols(i, j);
    vinv.swap_rows(i, j);
  }
  void add_row(std::size_t dst, std::size_t src, const BigInt& k) {
    a.add_row_multiple(dst, src, k);
    if (track_u) u.add_row_multiple(dst, src, k);
  }
  // col[dst] += k col[src]; the inverse picks up row[src] -= k row[dst]
  void add_col(std::size_t dst, std::size_t src, const BigInt& k) {
    a.add_col_multiple(dst, src, k);
    v.add_col_multiple(dst, src, k);
    vinv.add_row_multiple(src, dst, -k);
  }
  void negate_row(std::size_t r) {
    a.negate_row(r);
    if (track_u) u.negate_row(r);
  }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m, bool track_u) {
  const std::size_t rows = m.rows(), cols = m.cols();
  SmithWork w{m, IntMatrix::identity(track_u ? rows : 0), IntMatrix::identity(cols),
              IntMatrix::identity(cols), track_u};
  IntMatrix& a = w.a;
  const std::size_t n = std::min(rows, cols);

  for (std::size_t t = 0; t < n; ++t) {
    // global minimal pivot in the trailing block
    std::size_t pi = rows, pj = cols;
    BigInt best;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a(i, j) != 0 && (pi == rows || abs(a(i, j)) < best)) {
          best = abs(a(i, j));
          pi = i;
          pj = j;
        }
    if (pi == rows) break;
    w.swap_rows(t, pi);
    w.swap_cols(t, pj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        BigInt q;
        mpz_tdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        w.add_row(i, t, -q);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        BigInt q;
        mpz_tdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        w.add_col(j, t, -q);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) {
        // remainders are smaller than the pivot; bring the smallest in
        std::size_t bi = t, bj = t;
        BigInt b = abs(a(t, t));
        for (std::size_t i = t + 1; i < rows; ++i)
          if (a(i, t) != 0 && abs(a(i, t)) < b) b = abs(a(i, t)), bi = i, bj = t;
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a(t, j) != 0 && abs(a(t, j)) < b) b = abs(a(t, j)), bi = t, bj = j;
        w.swap_rows(t, bi);
        w.swap_cols(t, bj);
        continue;
      }
      // divisibility of the trailing block
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      w.add_row(t, bad, 1);
    }
    if (a(t, t) < 0) w.negate_row(t);
  }
  return SmithForm{std::move(w.u), std::move(w.a), std::move(w.v), std::move(w.vinv)};
}

// ---------------------------------------------------------------- FpGroup

FpGroup::FpGroup(std::vector<std::int64_t> invariant_factors) : d_(std::move(invariant_factors)) {
  for (std::size_t i = 0; i < d_.size(); ++i) {
    if (d_[i] < 2) throw AlgebraError("invariant factors must be >= 2 (units pruned, 0 forbidden)");
    if (i > 0 && d_[i] % d_[i - 1] != 0)
      throw AlgebraError("invariant factors must form a divisibility chain");
  }
}

BigInt FpGroup::order() const {
  BigInt o = 1;
  for (auto d : d_) o *= static_cast<long>(d);
  return o;
}

Elem FpGroup::basis(std::size_t i) const {
  Elem e = zero();
  e.at(i) = 1;
  return e;
}

bool FpGroup::valid(const Elem& x) const {
  if (x.size() != d_.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] < 0 || x[i] >= d_[i]) return false;
  return true;
}

void FpGroup::check(const Elem& x) const {
  if (x.size() != d_.size())
    throw AlgebraError("element " + format_elem(x) + " has " + std::to_string(x.size()) +
                       " coordinates, group " + describe(*this) + " needs " +
                       std::to_string(d_.size()));
}

Elem FpGroup::reduce(Elem x) const {
  check(x);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = mod_floor(x[i], d_[i]);
  return x;
}

Elem FpGroup::add(const Elem& a, const Elem& b) const {
  Elem r(d_.size());
  for (std::size_t i = 0; i < d_.size(); ++i) r[i] = mod_floor(a[i] + b[i], d_[i]);
  return r;
}
Elem FpGroup::sub(const Elem& a, const Elem& b) const {
  Elem r(d_.size());
  for (std::size_t i = 0; i < d_.size(); ++i) r[i] = mod_floor(a[i] - b[i], d_[i]);
  return r;
}
Elem FpGroup::neg(const Elem& a) const {
  Elem r(d_.size());
  for (std::size_t i = 0; i < d_.size(); ++i) r[i] = mod_floor(-a[i], d_[i]);
  return r;
}
Elem FpGroup::scale(std::int64_t k, const Elem& a) const {
  Elem r(d_.size());
  for (std::size_t i = 0; i < d_.size(); ++i)
    r[i] = mod_floor(mod_floor(k, d_[i]) * a[i], d_[i]);
  return r;
}
bool FpGroup::is_zero(const Elem& a) const {
  return std::all_of(a.begin(), a.end(), [](std::int64_t v) { return v == 0; });
}
std::int64_t FpGroup::element_order(const Elem& a) const {
  std::int64_t o = 1;
  for (std::size_t i = 0; i < d_.size(); ++i) o = std::lcm(o, d_[i] / std::gcd(d_[i], a[i]));
  return o;
}

std::uint64_t FpGroup::small_order() const {
  std::uint64_t o = 1;
  for (auto d : d_) {
    o *= static_cast<std::uint64_t>(d);
    if (o > (std::uint64_t{1} << 40)) throw AlgebraError("group too large to enumerate");
  }
  return o;
}

Elem FpGroup::element_at(std::uint64_t index) const {
  Elem x(d_.size());
  for (std::size_t i = d_.size(); i-- > 0;) {
    x[i] = static_cast<std::int64_t>(index % static_cast<std::uint64_t>(d_[i]));
    index /= static_cast<std::uint64_t>(d_[i]);
  }
  return x;
}

std::uint64_t FpGroup::index_of(const Elem& x) const {
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < d_.size(); ++i)
    idx = idx * static_cast<std::uint64_t>(d_[i]) + static_cast<std::uint64_t>(x[i]);
  return idx;
}

std::vector<Elem> FpGroup::elements() const {
  const std::uint64_t n = small_order();
  std::vector<Elem> out;
  out.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(element_at(i));
  return out;
}

std::ostream& operator<<(std::ostream& os, const FpGroup& g) { return os << describe(g); }

std::string describe(const FpGroup& g) {
  if (g.is_trivial()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < g.rank(); ++i) os << (i ? " + " : "") << "Z/" << g.invariants()[i];
  return os.str();
}

// ---------------------------------------------------------------- CoordMap

CoordMap::CoordMap(std::vector<Elem> rows, std::vector<std::int64_t> dst_moduli)
    : rows_(std::move(rows)), dst_(std::move(dst_moduli)) {
  for (auto& r : rows_) {
    if (r.size() != dst_.size()) throw AlgebraError("coordinate map row has wrong width");
    for (std::size_t j = 0; j < r.size(); ++j) r[j] = mod_floor(r[j], dst_[j]);
  }
}

Elem CoordMap::apply(const Elem& x) const {
  if (x.size() != rows_.size())
    throw AlgebraError("coordinate map expects " + std::to_string(rows_.size()) +
                       " coordinates, got " + std::to_string(x.size()));
  Elem y(dst_.size(), 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      y[j] = mod_floor(y[j] + mod_floor(x[i], dst_[j]) * rows_[i][j], dst_[j]);
  }
  return y;
}

CoordMap CoordMap::then(const CoordMap& next) const {
  std::vector<Elem> rows;
  rows.reserve(rows_.size());
  for (const auto& r : rows_) rows.push_back(next.apply(r));
  return CoordMap(std::move(rows), next.dst_);
}

// ---------------------------------------------------------------- Subgroup

Subgroup::Subgroup(std::vector<std::int64_t> moduli, const std::vector<Elem>& gens)
    : m_(std::move(moduli)) {
  for (auto v : m_)
    if (v < 1) throw AlgebraError("cyclic moduli must be positive");
  echelonize(gens);
}

void Subgroup::echelonize(std::vector<Elem> work) {
  const std::size_t k = m_.size();
  for (auto& w : work) {
    if (w.size() != k) throw AlgebraError("subgroup generator has wrong width");
    for (std::size_t j = 0; j < k; ++j) w[j] = mod_floor(w[j], m_[j]);
  }
  auto reduce_tail = [&](Elem& v, std::size_t from) {
    for (std::size_t j = from; j < k; ++j) v[j] = mod_floor(v[j], m_[j]);
  };
  rows_.assign(k, Elem());
  for (std::size_t i = 0; i < k; ++i) {
    Elem pivot(k, 0);
    pivot[i] = m_[i];
    std::vector<Elem> rest;
    rest.reserve(work.size());
    for (auto& w : work) {
      if (w[i] % m_[i] != 0) {
        auto [g, a, b] = xgcd(pivot[i], w[i]);
        const std::int64_t wi = w[i] / g, pi = pivot[i] / g;
        Elem np(k, 0), nw(k, 0);
        for (std::size_t j = i + 1; j < k; ++j) {
          const std::int64_t mj = m_[j];
          np[j] = mod_floor(mod_floor(a, mj) * pivot[j] + mod_floor(b, mj) * w[j], mj);
          nw[j] = mod_floor(mod_floor(wi, mj) * pivot[j] - mod_floor(pi, mj) * w[j], mj);
        }
        np[i] = g;
        pivot = std::move(np);
        w = std::move(nw);
      } else {
        w[i] = 0;
      }
      reduce_tail(w, i + 1);
      if (std::any_of(w.begin() + static_cast<std::ptrdiff_t>(i + 1), w.end(),
                      [](std::int64_t v) { return v != 0; }))
        rest.push_back(std::move(w));
    }
    rows_[i] = std::move(pivot);
    work = std::move(rest);
  }
  // Hermite reduction above pivots
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      const std::int64_t h = rows_[j][j];
      const std::int64_t q = rows_[i][j] / h;
      if (q == 0) continue;
      for (std::size_t c = j; c < k; ++c)
        rows_[i][c] = mod_floor(rows_[i][c] - q * rows_[j][c], m_[c]);
    }
}

std::vector<Elem> Subgroup::generators() const {
  std::vector<Elem> out;
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (rows_[i][i] != m_[i]) out.push_back(rows_[i]);
  return out;
}

bool Subgroup::contains(const Elem& x) const {
  const std::size_t k = m_.size();
  if (x.size() != k) throw AlgebraError("membership test: element has wrong width");
  Elem y(k);
  for (std::size_t j = 0; j < k; ++j) y[j] = mod_floor(x[j], m_[j]);
  for (std::size_t i = 0; i < k; ++i) {
    if (y[i] == 0) continue;
    const std::int64_t h = rows_[i][i];
    if (y[i] % h != 0) return false;
    const std::int64_t q = y[i] / h;
    for (std::size_t c = i; c < k; ++c) y[c] = mod_floor(y[c] - q * rows_[i][c], m_[c]);
  }
  return true;
}

bool Subgroup::contains(const Subgroup& other) const {
  for (const auto& g : other.generators())
    if (!contains(g)) return false;
  return true;
}

BigInt Subgroup::order() const {
  BigInt o = 1;
  for (std::size_t i = 0; i < m_.size(); ++i) o *= static_cast<long>(m_[i] / rows_[i][i]);
  return o;
}

BigInt Subgroup::index() const {
  BigInt o = 1;
  for (std::size_t i = 0; i < m_.size(); ++i) o *= static_cast<long>(rows_[i][i]);
  return o;
}

bool Subgroup::is_trivial() const {
  for (std::size_t i = 0; i < m_.size(); ++i)
    if (rows_[i][i] != m_[i]) return false;
  return true;
}

bool Subgroup::is_whole() const {
  for (std::size_t i = 0; i < m_.size(); ++i)
    if (rows_[i][i] != 1) return false;
  return true;
}

Subgroup Subgroup::joined(const std::vector<Elem>& more) const {
  Subgroup s = *this;
  s.insert(more);
  return s;
}

bool Subgroup::insert(const std::vector<Elem>& more) {
  std::vector<Elem> fresh;
  for (const auto& x : more)
    if (!contains(x)) fresh.push_back(x);
  if (fresh.empty()) return false;
  auto work = generators();
  work.insert(work.end(), fresh.begin(), fresh.end());
  echelonize(std::move(work));
  return true;
}

std::vector<Elem> Subgroup::elements() const {
  const std::size_t k = m_.size();
  std::vector<std::int64_t> range(k);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    range[i] = m_[i] / rows_[i][i];
    total *= static_cast<std::uint64_t>(range[i]);
    if (total > (std::uint64_t{1} << 32)) throw AlgebraError("subgroup too large to enumerate");
  }
  std::vector<Elem> out;
  out.reserve(total);
  std::vector<std::int64_t> c(k, 0);
  for (std::uint64_t n = 0; n < total; ++n) {
    Elem x(k, 0);
    for (std::size_t i = 0; i < k; ++i)
      if (c[i] != 0)
        for (std::size_t j = i; j < k; ++j) x[j] = mod_floor(x[j] + c[i] * rows_[i][j], m_[j]);
    out.push_back(std::move(x));
    for (std::size_t i = k; i-- > 0;) {
      if (++c[i] < range[i]) break;
      c[i] = 0;
    }
  }
  return out;
}

// ---------------------------------------------------------------- presentations

Presentation present(std::vector<std::int64_t> raw_moduli, const std::vector<Elem>& relations) {
  Subgroup rel(raw_moduli, relations);
  const std::size_t k = raw_moduli.size();
  IntMatrix m(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) m(i, j) = static_cast<long>(rel.pivots()[i][j]);
  SmithForm snf = smith_normal_form(m, false);

  std::vector<std::size_t> kept;
  std::vector<std::int64_t> inv;
  for (std::size_t j = 0; j < k; ++j) {
    const BigInt& d = snf.D(j, j);
    if (d == 0) throw AlgebraError("presentation is not finite");
    if (d != 1) {
      kept.push_back(j);
      inv.push_back(d.get_si());
    }
  }
  std::vector<Elem> proj_rows(k, Elem(kept.size()));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t t = 0; t < kept.size(); ++t) {
      BigInt r;
      mpz_fdiv_r_ui(r.get_mpz_t(), snf.V(i, kept[t]).get_mpz_t(), static_cast<unsigned long>(inv[t]));
      proj_rows[i][t] = r.get_si();
    }
  std::vector<Elem> lift_rows(kept.size(), Elem(k));
  for (std::size_t t = 0; t < kept.size(); ++t)
    for (std::size_t i = 0; i < k; ++i) {
      BigInt r;
      mpz_fdiv_r_ui(r.get_mpz_t(), snf.V_inverse(kept[t], i).get_mpz_t(),
                    static_cast<unsigned long>(raw_moduli[i]));
      lift_rows[t][i] = r.get_si();
    }
  FpGroup g(inv);
  CoordMap proj(std::move(proj_rows), inv);
  CoordMap lift(std::move(lift_rows), raw_moduli);
  return Presentation{std::move(g), std::move(raw_moduli), std::move(rel), std::move(proj),
                      std::move(lift)};
}

Presentation quotient_presentation(const FpGroup& ambient, const std::vector<Elem>& relations) {
  for (const auto& r : relations) {
    ambient.check(r);
    if (!ambient.valid(r))
      throw AlgebraError("relation " + format_elem(r) + " has coordinates out of range for " +
                         describe(ambient));
  }
  return present(ambient.invariants(), relations);
}

Elem SubgroupPresentation::embed(const Elem& x) const {
  const Elem c = pres.section(x);
  Elem y(ambient_moduli.size(), 0);
  for (std::size_t t = 0; t < c.size(); ++t)
    for (std::size_t j = 0; j < y.size(); ++j)
      y[j] = mod_floor(y[j] + c[t] * generators[t][j], ambient_moduli[j]);
  return y;
}

Elem SubgroupPresentation::coordinates(const Elem& y) const {
  const std::size_t k = ambient_moduli.size();
  Elem v(k);
  for (std::size_t j = 0; j < k; ++j) v[j] = mod_floor(y.at(j), ambient_moduli[j]);
  Elem c(generators.size(), 0);
  for (std::size_t t = 0; t < generators.size(); ++t) {
    const std::size_t col = columns[t];
    const std::int64_t h = generators[t][col];
    if (v[col] % h != 0) throw AlgebraError("element " + format_elem(y) + " is not in the subgroup");
    c[t] = v[col] / h;
    for (std::size_t j = col; j < k; ++j) v[j] = mod_floor(v[j] - c[t] * generators[t][j], ambient_moduli[j]);
  }
  for (std::size_t j = 0; j < k; ++j)
    if (v[j] != 0) throw AlgebraError("element " + format_elem(y) + " is not in the subgroup");
  return pres.project(c);
}

SubgroupPresentation present_subgroup(const Subgroup& h) {
  const auto& m = h.moduli();
  const auto& rows = h.pivots();
  const std::size_t k = m.size();
  std::vector<std::size_t> cols;
  for (std::size_t i = 0; i < k; ++i)
    if (rows[i][i] != m[i]) cols.push_back(i);
  const std::size_t n = cols.size();

  std::vector<std::int64_t> raw(n);
  std::vector<Elem> rels;
  for (std::size_t a = 0; a < n; ++a) {
    const std::size_t i = cols[a];
    std::int64_t ord = 1;
    for (std::size_t j = 0; j < k; ++j) ord = std::lcm(ord, m[j] / std::gcd(m[j], rows[i][j]));
    raw[a] = ord;
    const std::int64_t step = m[i] / rows[i][i];
    Elem v(k);
    for (std::size_t j = 0; j < k; ++j) v[j] = mod_floor(step * rows[i][j], m[j]);
    Elem rel(n, 0);
    rel[a] = step;
    for (std::size_t b = a + 1; b < n; ++b) {
      const std::size_t j = cols[b];
      if (v[j] == 0) continue;
      const std::int64_t c = v[j] / rows[j][j];
      for (std::size_t col = j; col < k; ++col) v[col] = mod_floor(v[col] - c * rows[j][col], m[col]);
      rel[b] = -c;
    }
    rels.push_back(std::move(rel));
  }
  SubgroupPresentation out;
  for (auto i : cols) out.generators.push_back(rows[i]);
  out.columns = cols;
  out.ambient_moduli = m;
  out.pres = present(std::move(raw), rels);
  return out;
}

// ---------------------------------------------------------------- tensor over Z

Elem TensorOverZ::pure_raw(const Elem& x, const Elem& y) const {
  Elem t(raw_moduli.size(), 0);
  for (std::size_t s = 0; s < pairs.size(); ++s) {
    auto [i, j] = pairs[s];
    t[s] = mod_floor(mod_floor(x[i], raw_moduli[s]) * mod_floor(y[j], raw_moduli[s]), raw_moduli[s]);
  }
  return t;
}

TensorOverZ tensor_over_z(const FpGroup& a, const FpGroup& b) {
  TensorOverZ t;
  t.slot.assign(a.rank(), std::vector<std::ptrdiff_t>(b.rank(), -1));
  for (std::size_t i = 0; i < a.rank(); ++i)
    for (std::size_t j = 0; j < b.rank(); ++j) {
      const std::int64_t g = std::gcd(a.invariants()[i], b.invariants()[j]);
      if (g == 1) continue;
      t.slot[i][j] = static_cast<std::ptrdiff_t>(t.pairs.size());
      t.pairs.emplace_back(i, j);
      t.raw_moduli.push_back(g);
    }
  t.pres = present(t.raw_moduli, {});
  return t;
}

EnumeratedSubgroup subgroup_closure(const FpGroup& ambient, const std::vector<Elem>& gens) {
  for (const auto& g : gens) ambient.check(g);
  EnumeratedSubgroup s{Subgroup(ambient, gens), {}};
  s.elements = s.lattice.elements();
  std::sort(s.elements.begin(), s.elements.end());
  return s;
}

}  // namespace epilab
