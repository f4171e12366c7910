#include "jsuper/linsolve.hpp"

#include <stdexcept>

namespace jsuper {

namespace {

// scale a rational vector to a primitive integer vector; returns the factor
// s with  integer = s * rational  (s > 0)
std::pair<std::vector<BigInt>, Rat> to_primitive(const QVec& v) {
  BigInt lcm(1);
  for (const Rat& r : v)
    if (!r.is_zero()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), r.den().get_mpz_t());
  std::vector<BigInt> w(v.size());
  BigInt content(0);
  for (size_t i = 0; i < v.size(); ++i) {
    w[i] = v[i].num() * (lcm / v[i].den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), w[i].get_mpz_t());
  }
  if (sgn(content) == 0) return {std::move(w), Rat(1)};
  for (auto& x : w) x /= content;
  return {std::move(w), Rat(lcm, content)};
}

void make_primitive(std::vector<BigInt>& w, QVec& combo) {
  BigInt content(0);
  for (const auto& x : w) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
  if (sgn(content) == 0 || content == 1) return;
  for (auto& x : w) x /= content;
  Rat inv(BigInt(1), content);
  for (auto& c : combo) c *= inv;
}

int pivot_of(const std::vector<BigInt>& w) {
  for (size_t i = 0; i < w.size(); ++i)
    if (sgn(w[i]) != 0) return static_cast<int>(i);
  return -1;
}

}  // namespace

bool RowSpan::insert(const QVec& v) {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("row length mismatch");
  auto [w, scale] = to_primitive(v);
  // candidate combo over the current raws plus the candidate itself (last
  // slot); nothing is committed until independence is known
  QVec combo(static_cast<size_t>(raw_count_) + 1, Rat(0));
  combo.back() = scale;  // w = scale * v

  // eliminate against existing pivots, fraction-free
  for (const Row& row : rows_) {
    if (sgn(w[static_cast<size_t>(row.pivot)]) == 0) continue;
    BigInt f = w[static_cast<size_t>(row.pivot)];
    BigInt p = row.a[static_cast<size_t>(row.pivot)];
    for (size_t i = 0; i < w.size(); ++i) w[i] = p * w[i] - f * row.a[i];
    for (size_t i = 0; i + 1 < combo.size(); ++i)
      combo[i] = Rat(p, BigInt(1)) * combo[i] - Rat(f, BigInt(1)) * row.combo[i];
    combo.back() *= Rat(p, BigInt(1));
    make_primitive(w, combo);
  }

  int piv = pivot_of(w);
  if (piv < 0) return false;
  if (sgn(w[static_cast<size_t>(piv)]) < 0) {
    for (auto& x : w) x = -x;
    for (auto& c : combo) c = -c;
  }

  ++raw_count_;
  for (auto& row : rows_) row.combo.push_back(Rat(0));

  // back-substitute to keep the span fully reduced
  for (Row& row : rows_) {
    if (sgn(row.a[static_cast<size_t>(piv)]) == 0) continue;
    BigInt f = row.a[static_cast<size_t>(piv)];
    BigInt p = w[static_cast<size_t>(piv)];
    for (size_t i = 0; i < row.a.size(); ++i) row.a[i] = p * row.a[i] - f * w[i];
    for (size_t i = 0; i < row.combo.size(); ++i)
      row.combo[i] = Rat(p, BigInt(1)) * row.combo[i] - Rat(f, BigInt(1)) * combo[i];
    make_primitive(row.a, row.combo);
  }

  rows_.push_back(Row{std::move(w), std::move(combo), piv});
  return true;
}

std::pair<QVec, QVec> RowSpan::reduce(const QVec& v) const {
  QVec rem = v;
  QVec coeffs(rows_.size(), Rat(0));
  for (size_t k = 0; k < rows_.size(); ++k) {
    const Row& row = rows_[k];
    const Rat& lead = rem[static_cast<size_t>(row.pivot)];
    if (lead.is_zero()) continue;
    Rat f = lead / Rat(row.a[static_cast<size_t>(row.pivot)], BigInt(1));
    for (size_t i = 0; i < rem.size(); ++i)
      rem[i] -= f * Rat(row.a[i], BigInt(1));
    coeffs[k] = f;
  }
  return {std::move(rem), std::move(coeffs)};
}

bool RowSpan::contains(const QVec& v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("row length mismatch");
  auto [rem, coeffs] = reduce(v);
  for (const Rat& r : rem)
    if (!r.is_zero()) return false;
  return true;
}

std::optional<QVec> RowSpan::express(const QVec& v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("row length mismatch");
  auto [rem, coeffs] = reduce(v);
  for (const Rat& r : rem)
    if (!r.is_zero()) return std::nullopt;
  QVec out(static_cast<size_t>(raw_count_), Rat(0));
  for (size_t k = 0; k < rows_.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    for (size_t i = 0; i < rows_[k].combo.size(); ++i)
      out[i] += coeffs[k] * rows_[k].combo[i];
  }
  return out;
}

std::optional<QVec> RowSpan::orthogonal_witness(const QVec& v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("row length mismatch");
  std::vector<bool> is_pivot(static_cast<size_t>(cols_), false);
  for (const Row& row : rows_) is_pivot[static_cast<size_t>(row.pivot)] = true;

  // null-space basis vector for each free column; the rows are fully
  // reduced, so y_j = 1, y_{pivot(r)} = -r[j]/r[pivot]
  for (int j = 0; j < cols_; ++j) {
    if (is_pivot[static_cast<size_t>(j)]) continue;
    QVec y(static_cast<size_t>(cols_), Rat(0));
    y[static_cast<size_t>(j)] = Rat(1);
    for (const Row& row : rows_)
      y[static_cast<size_t>(row.pivot)] =
          -Rat(row.a[static_cast<size_t>(j)], row.a[static_cast<size_t>(row.pivot)]);
    Rat dot(0);
    for (int i = 0; i < cols_; ++i) dot += y[static_cast<size_t>(i)] * v[static_cast<size_t>(i)];
    if (!dot.is_zero()) return y;
  }
  return std::nullopt;
}

LinearSolveResult solve_linear(const std::vector<QVec>& columns, const QVec& rhs) {
  size_t m = rhs.size();
  RowSpan span(static_cast<int>(m));
  std::vector<size_t> raw_to_col;
  for (size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != m) throw std::invalid_argument("column length mismatch");
    if (span.insert(columns[j])) raw_to_col.push_back(j);
  }

  LinearSolveResult res;
  if (auto combo = span.express(rhs)) {
    res.feasible = true;
    res.solution.assign(columns.size(), Rat(0));
    for (size_t k = 0; k < raw_to_col.size(); ++k) res.solution[raw_to_col[k]] = (*combo)[k];
    return res;
  }
  auto y = span.orthogonal_witness(rhs);
  if (!y) throw std::logic_error("rhs neither in span nor separated from it");
  res.farkas = std::move(*y);
  return res;
}

}  // namespace jsuper
