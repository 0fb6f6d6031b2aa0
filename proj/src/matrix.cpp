#include "matwb/matrix.hpp"

#include "matwb/parallel.hpp"

#include <algorithm>

namespace matwb {

LabeledMatrix::LabeledMatrix(PartialField field, std::vector<std::string> rowLabels,
                             std::vector<std::string> colLabels,
                             std::vector<std::vector<RatFun>> entries)
    : field_(field), rows_(std::move(rowLabels)), cols_(std::move(colLabels)) {
  buildIndex();
  if (entries.size() != rows_.size()) inputError("entry row count does not match row labels");
  entries_.reserve(rows_.size() * cols_.size());
  for (auto& row : entries) {
    if (row.size() != cols_.size()) inputError("entry column count does not match column labels");
    for (auto& e : row) entries_.push_back(fCanon(e));
  }
}

void LabeledMatrix::buildIndex() {
  for (size_t i = 0; i < rows_.size(); ++i)
    if (!rowPos_.emplace(rows_[i], i).second) inputError("duplicate row label: " + rows_[i]);
  for (size_t j = 0; j < cols_.size(); ++j) {
    if (rowPos_.count(cols_[j])) inputError("row and column labels must be disjoint: " + cols_[j]);
    if (!colPos_.emplace(cols_[j], j).second) inputError("duplicate column label: " + cols_[j]);
  }
}

LabeledMatrix LabeledMatrix::fromStrings(PartialField field, std::vector<std::string> rowLabels,
                                         std::vector<std::string> colLabels,
                                         const std::vector<std::vector<std::string>>& entries) {
  std::vector<std::vector<RatFun>> parsed;
  parsed.reserve(entries.size());
  for (const auto& row : entries) {
    std::vector<RatFun> r;
    r.reserve(row.size());
    for (const auto& text : row) r.push_back(RatFun::parse(text));
    parsed.push_back(std::move(r));
  }
  return LabeledMatrix(field, std::move(rowLabels), std::move(colLabels), std::move(parsed));
}

LabeledMatrix LabeledMatrix::identity(PartialField field, const std::vector<std::string>& labels) {
  std::vector<std::string> cols;
  for (const auto& l : labels) cols.push_back(l + "'");
  std::vector<std::vector<RatFun>> e(labels.size(), std::vector<RatFun>(labels.size(), RatFun(0)));
  for (size_t i = 0; i < labels.size(); ++i) e[i][i] = RatFun(1);
  return LabeledMatrix(field, labels, cols, std::move(e));
}

size_t LabeledMatrix::rowIndex(const std::string& label) const {
  auto it = rowPos_.find(label);
  if (it == rowPos_.end()) inputError("unknown row label: " + label);
  return it->second;
}

size_t LabeledMatrix::colIndex(const std::string& label) const {
  auto it = colPos_.find(label);
  if (it == colPos_.end()) inputError("unknown column label: " + label);
  return it->second;
}

RatFun LabeledMatrix::fCanon(const RatFun& x) const {
  switch (field_.kind) {
    case FieldKind::NearRegular:
      return x;
    case FieldKind::Regular:
      if (!x.isConstant()) inputError("regular partial field carries constants only: " + x.str());
      return x;
    case FieldKind::FiniteField: {
      if (!x.isConstant()) inputError("finite field carries constants only: " + x.str());
      long p = static_cast<long>(field_.p);
      Int dn = x.den().coeff(0) % p;
      if (dn == 0) inputError("entry denominator vanishes modulo the field characteristic");
      if (dn < 0) dn += p;
      Int nm = x.num().coeff(0) % p;
      if (nm < 0) nm += p;
      unsigned long v = (nm.get_ui() * modInverse(dn.get_ui(), field_.p)) % field_.p;
      return RatFun(static_cast<long>(v));
    }
  }
  return x;
}

RatFun LabeledMatrix::fAdd(const RatFun& x, const RatFun& y) const { return fCanon(x + y); }
RatFun LabeledMatrix::fSub(const RatFun& x, const RatFun& y) const { return fCanon(x - y); }
RatFun LabeledMatrix::fMul(const RatFun& x, const RatFun& y) const { return fCanon(x * y); }
RatFun LabeledMatrix::fNeg(const RatFun& x) const { return fCanon(-x); }

RatFun LabeledMatrix::fInv(const RatFun& x) const {
  if (x.isZero()) inputError("division by zero");
  if (field_.kind == FieldKind::FiniteField)
    return RatFun(static_cast<long>(modInverse(x.num().coeff(0).get_ui(), field_.p)));
  return x.inverse();
}

LabeledMatrix LabeledMatrix::submatrix(const std::vector<std::string>& rowSubset,
                                       const std::vector<std::string>& colSubset) const {
  std::vector<bool> rkeep(rows_.size(), false), ckeep(cols_.size(), false);
  for (const auto& l : rowSubset) rkeep[rowIndex(l)] = true;
  for (const auto& l : colSubset) ckeep[colIndex(l)] = true;
  LabeledMatrix r;
  r.field_ = field_;
  for (size_t i = 0; i < rows_.size(); ++i)
    if (rkeep[i]) r.rows_.push_back(rows_[i]);
  for (size_t j = 0; j < cols_.size(); ++j)
    if (ckeep[j]) r.cols_.push_back(cols_[j]);
  for (size_t i = 0; i < rows_.size(); ++i) {
    if (!rkeep[i]) continue;
    for (size_t j = 0; j < cols_.size(); ++j)
      if (ckeep[j]) r.entries_.push_back(at(i, j));
  }
  r.buildIndex();
  return r;
}

LabeledMatrix LabeledMatrix::reordered(const std::vector<std::string>& rowOrder,
                                       const std::vector<std::string>& colOrder) const {
  if (rowOrder.size() != rows_.size() || colOrder.size() != cols_.size())
    inputError("reorder must use the same label sets");
  LabeledMatrix r;
  r.field_ = field_;
  r.rows_ = rowOrder;
  r.cols_ = colOrder;
  for (const auto& x : rowOrder)
    for (const auto& y : colOrder) r.entries_.push_back(at(rowIndex(x), colIndex(y)));
  r.buildIndex();
  return r;
}

LabeledMatrix LabeledMatrix::transposeNegate() const {
  LabeledMatrix r;
  r.field_ = field_;
  r.rows_ = cols_;
  r.cols_ = rows_;
  r.entries_.reserve(entries_.size());
  for (size_t j = 0; j < cols_.size(); ++j)
    for (size_t i = 0; i < rows_.size(); ++i) r.entries_.push_back(fNeg(at(i, j)));
  r.buildIndex();
  return r;
}

namespace {

// Clears per-column denominators: B[i][j] = A[i][j] * colDen[j] is a
// polynomial and det A[R,C] = det B[R,C] / prod colDen[C].
struct ClearedMatrix {
  std::vector<std::vector<Poly>> entry;  // row-major polynomials
  std::vector<Poly> colDen;
};

ClearedMatrix clearDenominators(const LabeledMatrix& a) {
  ClearedMatrix r;
  size_t m = a.nRows(), n = a.nCols();
  r.colDen.assign(n, Poly(1));
  for (size_t j = 0; j < n; ++j) {
    Poly lcm(1);
    for (size_t i = 0; i < m; ++i) {
      const Poly& d = a.at(i, j).den();
      Poly g = Poly::gcd(lcm, d);
      lcm = *(lcm * d).divExact(g);
    }
    if (lcm.leading() < 0) lcm = -lcm;
    r.colDen[j] = lcm;
  }
  r.entry.assign(m, std::vector<Poly>(n));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < n; ++j) {
      const RatFun& e = a.at(i, j);
      Poly scale = *r.colDen[j].divExact(e.den());
      r.entry[i][j] = e.num() * scale;
    }
  return r;
}

Poly bareissDet(std::vector<std::vector<Poly>> m) {
  size_t n = m.size();
  if (n == 0) return Poly(1);
  int sign = 1;
  Poly prev(1);
  for (size_t k = 0; k + 1 < n; ++k) {
    size_t piv = k;
    while (piv < n && m[piv][k].isZero()) ++piv;
    if (piv == n) return Poly();
    if (piv != k) {
      std::swap(m[piv], m[k]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        Poly t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        auto q = t.divExact(prev);
        if (!q) throw Error(ErrorKind::Internal, "fraction-free elimination division failed");
        m[i][j] = std::move(*q);
      }
      m[i][k] = Poly();
    }
    prev = m[k][k];
  }
  Poly d = m[n - 1][n - 1];
  return sign < 0 ? -d : d;
}

}  // namespace

RatFun LabeledMatrix::det() const {
  if (rows_.size() != cols_.size()) inputError("determinant requires a square matrix");
  size_t n = rows_.size();
  if (n == 0) return RatFun(1);
  if (n == 1) return at(0, 0);
  if (n == 2) return fSub(fMul(at(0, 0), at(1, 1)), fMul(at(0, 1), at(1, 0)));
  if (n == 3) {
    RatFun d(0);
    d = fAdd(d, fMul(at(0, 0), fSub(fMul(at(1, 1), at(2, 2)), fMul(at(1, 2), at(2, 1)))));
    d = fSub(d, fMul(at(0, 1), fSub(fMul(at(1, 0), at(2, 2)), fMul(at(1, 2), at(2, 0)))));
    d = fAdd(d, fMul(at(0, 2), fSub(fMul(at(1, 0), at(2, 1)), fMul(at(1, 1), at(2, 0)))));
    return d;
  }
  ClearedMatrix cm = clearDenominators(*this);
  Poly den(1);
  for (const auto& d : cm.colDen) den = den * d;
  return fCanon(RatFun(bareissDet(std::move(cm.entry)), den));
}

LabeledMatrix LabeledMatrix::pivot(const std::string& x, const std::string& y) const {
  size_t xi = rowIndex(x), yj = colIndex(y);
  const RatFun& a = at(xi, yj);
  if (a.isZero() || (field_.kind == FieldKind::FiniteField && fCanon(a).isZero()))
    inputError("zero pivot entry");
  RatFun ainv = fInv(a);

  LabeledMatrix r;
  r.field_ = field_;
  r.rows_ = rows_;
  r.rows_[xi] = y;
  r.cols_ = cols_;
  r.cols_[yj] = x;
  r.entries_.resize(entries_.size());
  for (size_t i = 0; i < rows_.size(); ++i) {
    for (size_t j = 0; j < cols_.size(); ++j) {
      RatFun v;
      if (i == xi && j == yj)
        v = ainv;
      else if (i == xi)
        v = fMul(ainv, at(xi, j));
      else if (j == yj)
        v = fNeg(fMul(at(i, yj), ainv));
      else
        v = fSub(at(i, j), fMul(fMul(at(i, yj), ainv), at(xi, j)));
      r.entries_[i * cols_.size() + j] = std::move(v);
    }
  }
  r.buildIndex();
  return r;
}

RatFun LabeledMatrix::detViaPivot(const std::string& x, const std::string& y) const {
  if (rows_.size() != cols_.size()) inputError("determinant requires a square matrix");
  size_t xi = rowIndex(x), yj = colIndex(y);
  const RatFun& a = at(xi, yj);
  if (a.isZero()) inputError("zero pivot entry");
  LabeledMatrix piv = pivot(x, y);
  std::vector<std::string> keepRows, keepCols;
  for (const auto& l : rows_)
    if (l != x) keepRows.push_back(l);
  for (const auto& l : cols_)
    if (l != y) keepCols.push_back(l);
  RatFun minor = piv.submatrix(keepRows, keepCols).det();
  RatFun d = fMul(a, minor);
  return ((xi + 1) + (yj + 1)) % 2 == 0 ? d : fNeg(d);
}

LabeledMatrix LabeledMatrix::scaleRow(const std::string& row, const RatFun& c) const {
  if (!inGroup(field_, c)) inputError("scaling must use a group element");
  size_t i = rowIndex(row);
  LabeledMatrix r = *this;
  for (size_t j = 0; j < cols_.size(); ++j) r.entries_[i * cols_.size() + j] = fMul(at(i, j), c);
  return r;
}

LabeledMatrix LabeledMatrix::scaleCol(const std::string& col, const RatFun& c) const {
  if (!inGroup(field_, c)) inputError("scaling must use a group element");
  size_t j = colIndex(col);
  LabeledMatrix r = *this;
  for (size_t i = 0; i < rows_.size(); ++i) r.entries_[i * cols_.size() + j] = fMul(at(i, j), c);
  return r;
}

namespace {

// Binomials and the combinatorial number system for indexing k-subsets in
// lexicographic order.
struct CombIndex {
  std::vector<std::vector<std::uint64_t>> binom;

  explicit CombIndex(size_t n) {
    binom.assign(n + 1, std::vector<std::uint64_t>(n + 1, 0));
    for (size_t i = 0; i <= n; ++i) {
      binom[i][0] = 1;
      for (size_t j = 1; j <= i; ++j)
        binom[i][j] = binom[i - 1][j - 1] + (j <= i - 1 ? binom[i - 1][j] : 0);
    }
  }

  std::uint64_t choose(size_t n, size_t k) const { return k <= n ? binom[n][k] : 0; }

  // Lexicographic rank of a sorted index subset of [0, n).
  std::uint64_t rank(const std::vector<int>& set, size_t n) const {
    std::uint64_t r = 0;
    int prev = -1;
    size_t k = set.size();
    for (size_t pos = 0; pos < k; ++pos) {
      for (int v = prev + 1; v < set[pos]; ++v) r += choose(n - 1 - static_cast<size_t>(v), k - pos - 1);
      prev = set[pos];
    }
    return r;
  }

  static bool next(std::vector<int>& set, size_t n) {
    size_t k = set.size();
    for (size_t i = k; i-- > 0;) {
      if (set[i] < static_cast<int>(n - k + i)) {
        ++set[i];
        for (size_t j = i + 1; j < k; ++j) set[j] = set[j - 1] + 1;
        return true;
      }
    }
    return false;
  }

  static std::vector<int> first(size_t k) {
    std::vector<int> s(k);
    for (size_t i = 0; i < k; ++i) s[i] = static_cast<int>(i);
    return s;
  }
};

}  // namespace

PMatrixCertificate LabeledMatrix::isPMatrix() const {
  PMatrixCertificate cert;
  size_t m = rows_.size(), n = cols_.size();
  if (m == 0 || n == 0) {
    cert.verdict = true;
    cert.checkedCount = 0;
    return cert;
  }
  // Over a finite field every determinant is zero or a unit; only the
  // entry carrier can fail, and construction already canonicalized it.
  if (field_.kind == FieldKind::FiniteField) {
    cert.verdict = true;
    std::uint64_t total = 1;
    CombIndex ci(std::max(m, n));
    for (size_t k = 1; k <= std::min(m, n); ++k) total += ci.choose(m, k) * ci.choose(n, k);
    cert.checkedCount = total;
    return cert;
  }

  ClearedMatrix cm = clearDenominators(*this);
  CombIndex ci(std::max(m, n));
  size_t kmax = std::min(m, n);

  // prev[rRank * C(n,k-1) + cRank] = det of the (k-1)-sized pair
  std::vector<Poly> prev;
  cert.checkedCount = 1;  // the empty submatrix, det 1

  std::vector<std::vector<int>> rowSets, colSets;
  for (size_t k = 1; k <= kmax; ++k) {
    rowSets.clear();
    colSets.clear();
    for (auto s = CombIndex::first(k);;) {
      rowSets.push_back(s);
      if (!CombIndex::next(s, m)) break;
    }
    for (auto s = CombIndex::first(k);;) {
      colSets.push_back(s);
      if (!CombIndex::next(s, n)) break;
    }
    std::uint64_t prevCols = ci.choose(n, k - 1);
    std::vector<Poly> cur(rowSets.size() * colSets.size());

    parallelFor(rowSets.size() * colSets.size(), [&](size_t lo, size_t hi) {
      for (size_t idx = lo; idx < hi; ++idx) {
        const auto& R = rowSets[idx / colSets.size()];
        const auto& C = colSets[idx % colSets.size()];
        if (k == 1) {
          cur[idx] = cm.entry[static_cast<size_t>(R[0])][static_cast<size_t>(C[0])];
          continue;
        }
        // Laplace expansion along the first row of R using level k-1.
        std::vector<int> subR(R.begin() + 1, R.end());
        std::uint64_t rRank = ci.rank(subR, m);
        Poly acc;
        std::vector<int> subC(k - 1);
        for (size_t t = 0; t < k; ++t) {
          const Poly& e = cm.entry[static_cast<size_t>(R[0])][static_cast<size_t>(C[t])];
          if (e.isZero()) continue;
          size_t w = 0;
          for (size_t q = 0; q < k; ++q)
            if (q != t) subC[w++] = C[q];
          const Poly& minor = prev[rRank * prevCols + ci.rank(subC, n)];
          if (minor.isZero()) continue;
          Poly term = e * minor;
          acc = (t % 2 == 0) ? acc + term : acc - term;
        }
        cur[idx] = std::move(acc);
      }
    });

    // Canonical (size, row-lex, col-lex) violation scan for this level.
    for (size_t idx = 0; idx < cur.size(); ++idx) {
      ++cert.checkedCount;
      const Poly& d = cur[idx];
      if (d.isZero()) continue;
      const auto& C = colSets[idx % colSets.size()];
      Poly den(1);
      for (int j : C) den = den * cm.colDen[static_cast<size_t>(j)];
      RatFun value(d, den);
      if (inGroup(field_, value)) continue;
      cert.verdict = false;
      PMatrixWitness w;
      for (int i : rowSets[idx / colSets.size()]) w.rows.push_back(rows_[static_cast<size_t>(i)]);
      for (int j : C) w.cols.push_back(cols_[static_cast<size_t>(j)]);
      w.det = value;
      cert.witness = std::move(w);
      return cert;
    }
    prev = std::move(cur);
  }
  cert.verdict = true;
  return cert;
}

}  // namespace matwb
