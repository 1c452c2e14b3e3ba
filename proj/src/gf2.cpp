#include "slc/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace slc::gf2 {

namespace {

std::size_t block_count(std::size_t dim) { return (dim + 63) / 64; }

}  // namespace

Vector::Vector(std::size_t dim) : dim_(dim), blocks_(block_count(dim), 0) {}

Vector Vector::unit(std::size_t dim, std::size_t i) {
  Vector v(dim);
  v.set(i);
  return v;
}

Vector Vector::from_string(std::string_view bits) {
  Vector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i);
    } else if (bits[i] != '0') {
      throw std::invalid_argument("gf2: bit string may only contain 0 and 1");
    }
  }
  return v;
}

Vector Vector::from_uint(std::size_t dim, std::uint64_t value) {
  Vector v(dim);
  if (dim == 0) return v;
  if (dim < 64) value &= (std::uint64_t{1} << dim) - 1;
  v.blocks_[0] = value;
  return v;
}

void Vector::set(std::size_t i, bool value) {
  const std::uint64_t mask = std::uint64_t{1} << (i & 63);
  if (value) {
    blocks_[i >> 6] |= mask;
  } else {
    blocks_[i >> 6] &= ~mask;
  }
}

bool Vector::is_zero() const {
  return std::all_of(blocks_.begin(), blocks_.end(), [](std::uint64_t b) { return b == 0; });
}

std::size_t Vector::popcount() const {
  std::size_t n = 0;
  for (auto b : blocks_) n += static_cast<std::size_t>(std::popcount(b));
  return n;
}

std::size_t Vector::find_next(std::size_t from) const {
  if (from >= dim_) return npos;
  std::size_t blk = from >> 6;
  std::uint64_t word = blocks_[blk] & (~std::uint64_t{0} << (from & 63));
  while (true) {
    if (word != 0) return (blk << 6) + static_cast<std::size_t>(std::countr_zero(word));
    if (++blk == blocks_.size()) return npos;
    word = blocks_[blk];
  }
}

bool Vector::dot(const Vector& other) const {
  if (dim_ != other.dim_) throw std::invalid_argument("gf2: dimension mismatch in dot");
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < blocks_.size(); ++i) acc ^= blocks_[i] & other.blocks_[i];
  return std::popcount(acc) & 1;
}

Vector& Vector::operator^=(const Vector& other) {
  if (dim_ != other.dim_) throw std::invalid_argument("gf2: dimension mismatch in addition");
  for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] ^= other.blocks_[i];
  return *this;
}

std::strong_ordering Vector::operator<=>(const Vector& other) const {
  if (auto c = dim_ <=> other.dim_; c != 0) return c;
  return blocks_ <=> other.blocks_;
}

std::string Vector::to_string() const {
  std::string s(dim_, '0');
  for (std::size_t i = 0; i < dim_; ++i) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

std::size_t VectorHash::operator()(const Vector& v) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ v.dim();
  for (auto b : v.blocks()) {
    h ^= b + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows, Vector(cols)) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

Matrix Matrix::from_rows(std::span<const Vector> rows) {
  if (rows.empty()) return Matrix();
  Matrix m(rows.size(), rows.front().dim());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].dim() != m.cols_) throw std::invalid_argument("gf2: ragged rows");
    m.data_[r] = rows[r];
  }
  return m;
}

Matrix Matrix::from_columns(std::span<const Vector> columns) {
  if (columns.empty()) return Matrix();
  Matrix m(columns.front().dim(), columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].dim() != m.rows_) throw std::invalid_argument("gf2: ragged columns");
    for (auto r = columns[c].find_first(); r != Vector::npos; r = columns[c].find_next(r + 1)) {
      m.set(r, c);
    }
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    if (get(r, c)) v.set(r);
  }
  return v;
}

Vector Matrix::operator*(const Vector& v) const {
  if (v.dim() != cols_) throw std::invalid_argument("gf2: matrix-vector dimension mismatch");
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    if (data_[r].dot(v)) out.set(r);
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("gf2: matrix product dimension mismatch");
  Matrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    const Vector& row = data_[r];
    for (auto k = row.find_first(); k != Vector::npos; k = row.find_next(k + 1)) {
      out.data_[r] ^= other.data_[k];
    }
  }
  return out;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (auto c = data_[r].find_first(); c != Vector::npos; c = data_[r].find_next(c + 1)) {
      t.set(c, r);
    }
  }
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Vector& v) { return v.is_zero(); });
}

namespace {

// Reduced row echelon form with first-nonzero pivot selection in column
// order. Returns the pivot column of each nonzero row.
std::vector<std::size_t> row_reduce(std::vector<Vector>& rows, std::size_t cols) {
  std::vector<std::size_t> pivot_cols;
  std::size_t next = 0;
  for (std::size_t c = 0; c < cols && next < rows.size(); ++c) {
    std::size_t p = next;
    while (p < rows.size() && !rows[p].get(c)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[next]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != next && rows[r].get(c)) rows[r] ^= rows[next];
    }
    pivot_cols.push_back(c);
    ++next;
  }
  return pivot_cols;
}

std::vector<Vector> rows_of(const Matrix& m) {
  std::vector<Vector> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  return rows;
}

}  // namespace

std::size_t rank(const Matrix& m) {
  auto rows = rows_of(m);
  return row_reduce(rows, m.cols()).size();
}

std::vector<Vector> kernel_basis(const Matrix& m) {
  auto rows = rows_of(m);
  const auto pivot_cols = row_reduce(rows, m.cols());

  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivot_cols) is_pivot[c] = true;

  std::vector<Vector> basis;
  basis.reserve(m.cols() - pivot_cols.size());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v.set(free);
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
      if (rows[i].get(free)) v.set(pivot_cols[i]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

Vector EchelonBasis::reduce(Vector v) const {
  if (v.dim() != pivots_.size()) throw std::invalid_argument("gf2: dimension mismatch in reduce");
  for (auto c = v.find_first(); c != Vector::npos; c = v.find_next(c + 1)) {
    if (pivots_[c].dim() != 0) v ^= pivots_[c];
  }
  return v;
}

bool EchelonBasis::insert(const Vector& v) {
  Vector r = reduce(v);
  const auto lead = r.find_first();
  if (lead == Vector::npos) return false;
  pivots_[lead] = std::move(r);
  ++rank_;
  return true;
}

Vector QuotientMap::coordinates(const Vector& z) const {
  if (z.dim() != ambient_dim_) throw std::invalid_argument("gf2: dimension mismatch in coordinates");
  Vector x = z;
  Vector acc(dim());
  for (auto c = x.find_first(); c != Vector::npos; c = x.find_next(c + 1)) {
    const Pivot& p = pivots_[c];
    if (!p.present) throw std::domain_error("gf2: vector is not in the cycle space");
    x ^= p.vec;
    acc ^= p.tag;
  }
  return acc;
}

bool QuotientMap::in_cycle_space(const Vector& z) const {
  Vector x = z;
  for (auto c = x.find_first(); c != Vector::npos; c = x.find_next(c + 1)) {
    if (!pivots_[c].present) return false;
    x ^= pivots_[c].vec;
  }
  return true;
}

QuotientMap quotient_coordinates(std::span<const Vector> cycle_basis,
                                 std::span<const Vector> boundary_basis) {
  std::size_t dim = 0;
  if (!cycle_basis.empty()) {
    dim = cycle_basis.front().dim();
  } else if (!boundary_basis.empty()) {
    dim = boundary_basis.front().dim();
  }

  EchelonBasis cycles(dim);
  for (const auto& z : cycle_basis) cycles.insert(z);
  EchelonBasis boundaries(dim);
  for (const auto& b : boundary_basis) {
    if (!cycles.contains(b)) {
      throw std::invalid_argument("gf2: boundary vector outside the cycle span (inconsistent complex)");
    }
    boundaries.insert(b);
  }

  QuotientMap q;
  q.ambient_dim_ = dim;
  q.cycle_dim_ = cycles.rank();
  q.boundary_dim_ = boundaries.rank();
  const std::size_t quotient_dim = q.cycle_dim_ - q.boundary_dim_;
  q.pivots_.resize(dim);

  // Boundaries enter with zero tag; each cycle that enlarges the span becomes
  // the next quotient basis representative.
  auto insert = [&](const Vector& v, bool is_boundary) {
    Vector x = v;
    Vector tag(quotient_dim);
    for (auto c = x.find_first(); c != Vector::npos; c = x.find_next(c + 1)) {
      const auto& p = q.pivots_[c];
      if (!p.present) {
        auto& slot = q.pivots_[c];
        if (!is_boundary) {
          tag.flip(q.representatives_.size());
          q.representatives_.push_back(v);
        }
        slot.vec = std::move(x);
        slot.tag = std::move(tag);
        slot.present = true;
        return;
      }
      x ^= p.vec;
      tag ^= p.tag;
    }
  };
  for (const auto& b : boundary_basis) insert(b, true);
  for (const auto& z : cycle_basis) insert(z, false);
  return q;
}

}  // namespace slc::gf2
