#pragma once

#include <cstdint>
#include <vector>

namespace icsol {

/// A fixed-length vector over GF(2), bit-packed into 64-bit words.
/// Coordinates are 0-indexed here; the text formats use 1-indexed
/// message names (x1..xK) and the parsers translate.
class Gf2Vector {
public:
    explicit Gf2Vector(int length);
    static Gf2Vector unit(int length, int idx);
    static Gf2Vector from_mask(int length, std::uint64_t mask);

    int length() const { return len_; }
    bool get(int i) const;
    void set(int i, bool value);
    bool is_zero() const;
    int popcount() const;
    std::vector<int> support() const;

    Gf2Vector &operator^=(const Gf2Vector &other);
    friend Gf2Vector operator^(Gf2Vector a, const Gf2Vector &b) {
        a ^= b;
        return a;
    }
    bool operator==(const Gf2Vector &) const = default;

    // index of the lowest set coordinate, -1 for the zero vector
    int lowest_set() const;

private:
    int len_;
    std::vector<std::uint64_t> words_;
};

/// Row-major matrix over GF(2); all rows share the same length.
class Gf2Matrix {
public:
    Gf2Matrix(int nrows, int ncols);
    Gf2Matrix(std::vector<Gf2Vector> rows, int ncols);

    int nrows() const { return static_cast<int>(rows_.size()); }
    int ncols() const { return ncols_; }
    const Gf2Vector &row(int i) const { return rows_[static_cast<std::size_t>(i)]; }
    Gf2Vector &row(int i) { return rows_[static_cast<std::size_t>(i)]; }
    const std::vector<Gf2Vector> &rows() const { return rows_; }
    void append_row(const Gf2Vector &r);

    bool get(int i, int j) const { return row(i).get(j); }
    void set(int i, int j, bool v) { row(i).set(j, v); }

    Gf2Matrix transposed() const;
    bool operator==(const Gf2Matrix &) const = default;

private:
    int ncols_;
    std::vector<Gf2Vector> rows_;
};

int rank(const Gf2Matrix &m);

struct RowReduceResult {
    Gf2Matrix rref;
    std::vector<int> pivots; // 0-indexed pivot columns, ascending
};

/// Reduced row-echelon form; zero rows are kept at the bottom.
RowReduceResult row_reduce(const Gf2Matrix &m);

/// True iff target lies in the GF(2) span of the basis vectors.
bool in_span(const Gf2Vector &target, const std::vector<Gf2Vector> &basis);

} // namespace icsol
