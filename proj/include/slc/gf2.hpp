#pragma once

// Dense linear algebra over the two-element field.
//
// Vectors are bit-packed into 64-bit blocks. Bits beyond dim() are kept at
// zero so that block-wise comparison and hashing are exact.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace slc::gf2 {

class Vector {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Vector() = default;
  explicit Vector(std::size_t dim);

  static Vector unit(std::size_t dim, std::size_t i);
  /// Parses a string of '0'/'1' characters, index 0 first.
  static Vector from_string(std::string_view bits);
  /// Low `dim` bits of `value`, bit i at index i.
  static Vector from_uint(std::size_t dim, std::uint64_t value);

  std::size_t dim() const { return dim_; }
  bool get(std::size_t i) const { return (blocks_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool value = true);
  void flip(std::size_t i) { blocks_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  bool is_zero() const;
  std::size_t popcount() const;
  /// Index of the first set bit at or after `from`, or npos.
  std::size_t find_next(std::size_t from) const;
  std::size_t find_first() const { return find_next(0); }
  /// Parity of the bitwise AND.
  bool dot(const Vector& other) const;

  Vector& operator^=(const Vector& other);
  friend Vector operator^(Vector a, const Vector& b) { return a ^= b; }
  Vector& operator+=(const Vector& other) { return *this ^= other; }
  friend Vector operator+(Vector a, const Vector& b) { return a ^= b; }

  bool operator==(const Vector& other) const = default;
  std::strong_ordering operator<=>(const Vector& other) const;

  /// Integer value of the first 64 coordinates.
  std::uint64_t low_word() const { return blocks_.empty() ? 0 : blocks_[0]; }
  std::span<const std::uint64_t> blocks() const { return blocks_; }
  std::string to_string() const;

 private:
  std::size_t dim_ = 0;
  std::vector<std::uint64_t> blocks_;
};

struct VectorHash {
  std::size_t operator()(const Vector& v) const noexcept;
};

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(std::span<const Vector> rows);
  static Matrix from_columns(std::span<const Vector> columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool get(std::size_t r, std::size_t c) const { return data_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool value = true) { data_[r].set(c, value); }
  const Vector& row(std::size_t r) const { return data_[r]; }
  Vector column(std::size_t c) const;

  Vector operator*(const Vector& v) const;
  Matrix operator*(const Matrix& other) const;
  Matrix transposed() const;
  bool is_zero() const;

  bool operator==(const Matrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Vector> data_;
};

std::size_t rank(const Matrix& m);

/// Basis of the right null space, one vector per free column of the reduced
/// row echelon form, in increasing free-column order.
std::vector<Vector> kernel_basis(const Matrix& m);

/// Incrementally built echelon basis; rows are keyed by their lowest set bit.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dim) : pivots_(dim) {}

  std::size_t dim() const { return pivots_.size(); }
  std::size_t rank() const { return rank_; }
  /// Reduces `v` to its residue modulo the span.
  Vector reduce(Vector v) const;
  bool contains(const Vector& v) const { return reduce(v).is_zero(); }
  /// Adds `v` to the span. Returns false if it was already in it.
  bool insert(const Vector& v);

 private:
  std::vector<Vector> pivots_;
  std::size_t rank_ = 0;
};

/// Linear map from a cycle space Z onto coordinates of Z / B.
class QuotientMap {
 public:
  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return representatives_.size(); }
  std::size_t cycle_dim() const { return cycle_dim_; }
  std::size_t boundary_dim() const { return boundary_dim_; }

  /// Coordinates of a vector of the cycle space. Throws std::domain_error if
  /// `z` does not lie in the cycle span.
  Vector coordinates(const Vector& z) const;
  bool in_cycle_space(const Vector& z) const;

  /// Representatives r_j of the quotient basis: coordinates(r_j) = e_j.
  std::span<const Vector> representatives() const { return representatives_; }

 private:
  friend QuotientMap quotient_coordinates(std::span<const Vector>, std::span<const Vector>);

  struct Pivot {
    Vector vec;
    Vector tag;
    bool present = false;
  };

  std::size_t ambient_dim_ = 0;
  std::size_t cycle_dim_ = 0;
  std::size_t boundary_dim_ = 0;
  std::vector<Pivot> pivots_;
  std::vector<Vector> representatives_;
};

/// Builds coordinates for span(cycles) / span(boundaries). Throws
/// std::invalid_argument if some boundary vector is not in the cycle span.
QuotientMap quotient_coordinates(std::span<const Vector> cycle_basis,
                                 std::span<const Vector> boundary_basis);

}  // namespace slc::gf2
