#include "icsol/gf2.hpp"

#include <bit>

#include "icsol/errors.hpp"

namespace icsol {

namespace {
std::size_t words_for(int length) { return static_cast<std::size_t>((length + 63) / 64); }
} // namespace

Gf2Vector::Gf2Vector(int length) : len_(length), words_(words_for(length), 0) {
    if (length < 0)
        throw DimensionError("vector length must be nonnegative");
}

Gf2Vector Gf2Vector::unit(int length, int idx) {
    Gf2Vector v(length);
    v.set(idx, true);
    return v;
}

Gf2Vector Gf2Vector::from_mask(int length, std::uint64_t mask) {
    if (length > 64)
        throw DimensionError("from_mask supports lengths up to 64");
    Gf2Vector v(length);
    if (length > 0)
        v.words_[0] = mask;
    return v;
}

bool Gf2Vector::get(int i) const {
    if (i < 0 || i >= len_)
        throw DimensionError("coordinate out of range");
    return (words_[static_cast<std::size_t>(i) / 64] >> (i % 64)) & 1;
}

void Gf2Vector::set(int i, bool value) {
    if (i < 0 || i >= len_)
        throw DimensionError("coordinate out of range");
    std::uint64_t m = std::uint64_t{1} << (i % 64);
    if (value)
        words_[static_cast<std::size_t>(i) / 64] |= m;
    else
        words_[static_cast<std::size_t>(i) / 64] &= ~m;
}

bool Gf2Vector::is_zero() const {
    for (std::uint64_t w : words_)
        if (w)
            return false;
    return true;
}

int Gf2Vector::popcount() const {
    int n = 0;
    for (std::uint64_t w : words_)
        n += std::popcount(w);
    return n;
}

std::vector<int> Gf2Vector::support() const {
    std::vector<int> out;
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
        std::uint64_t w = words_[wi];
        while (w) {
            int b = std::countr_zero(w);
            out.push_back(static_cast<int>(wi) * 64 + b);
            w &= w - 1;
        }
    }
    return out;
}

Gf2Vector &Gf2Vector::operator^=(const Gf2Vector &other) {
    if (other.len_ != len_)
        throw DimensionError("XOR of vectors with different lengths");
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] ^= other.words_[i];
    return *this;
}

int Gf2Vector::lowest_set() const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi)
        if (words_[wi])
            return static_cast<int>(wi) * 64 + std::countr_zero(words_[wi]);
    return -1;
}

Gf2Matrix::Gf2Matrix(int nrows, int ncols) : ncols_(ncols) {
    if (nrows < 0 || ncols < 0)
        throw DimensionError("matrix dimensions must be nonnegative");
    rows_.assign(static_cast<std::size_t>(nrows), Gf2Vector(ncols));
}

Gf2Matrix::Gf2Matrix(std::vector<Gf2Vector> rows, int ncols) : ncols_(ncols), rows_(std::move(rows)) {
    for (const Gf2Vector &r : rows_)
        if (r.length() != ncols_)
            throw DimensionError("row length does not match ncols");
}

void Gf2Matrix::append_row(const Gf2Vector &r) {
    if (r.length() != ncols_)
        throw DimensionError("row length does not match ncols");
    rows_.push_back(r);
}

Gf2Matrix Gf2Matrix::transposed() const {
    Gf2Matrix t(ncols_, nrows());
    for (int i = 0; i < nrows(); ++i)
        for (int j : row(i).support())
            t.set(j, i, true);
    return t;
}

int rank(const Gf2Matrix &m) {
    std::vector<Gf2Vector> rows = m.rows();
    int r = 0;
    int n = static_cast<int>(rows.size());
    for (int col = 0; col < m.ncols() && r < n; ++col) {
        int pivot = -1;
        for (int i = r; i < n; ++i)
            if (rows[static_cast<std::size_t>(i)].lowest_set() == col) {
                pivot = i;
                break;
            }
        if (pivot < 0) {
            // no row starts at this column; nothing to eliminate
            continue;
        }
        std::swap(rows[static_cast<std::size_t>(r)], rows[static_cast<std::size_t>(pivot)]);
        for (int i = r + 1; i < n; ++i)
            if (!rows[static_cast<std::size_t>(i)].is_zero() &&
                rows[static_cast<std::size_t>(i)].get(col))
                rows[static_cast<std::size_t>(i)] ^= rows[static_cast<std::size_t>(r)];
        ++r;
    }
    return r;
}

RowReduceResult row_reduce(const Gf2Matrix &m) {
    std::vector<Gf2Vector> rows = m.rows();
    int n = static_cast<int>(rows.size());
    std::vector<int> pivots;
    int r = 0;
    for (int col = 0; col < m.ncols() && r < n; ++col) {
        int pivot = -1;
        for (int i = r; i < n; ++i)
            if (rows[static_cast<std::size_t>(i)].get(col)) {
                pivot = i;
                break;
            }
        if (pivot < 0)
            continue;
        std::swap(rows[static_cast<std::size_t>(r)], rows[static_cast<std::size_t>(pivot)]);
        for (int i = 0; i < n; ++i)
            if (i != r && rows[static_cast<std::size_t>(i)].get(col))
                rows[static_cast<std::size_t>(i)] ^= rows[static_cast<std::size_t>(r)];
        pivots.push_back(col);
        ++r;
    }
    return {Gf2Matrix(std::move(rows), m.ncols()), std::move(pivots)};
}

bool in_span(const Gf2Vector &target, const std::vector<Gf2Vector> &basis) {
    for (const Gf2Vector &b : basis)
        if (b.length() != target.length())
            throw DimensionError("in_span: mismatched vector lengths");
    // reduce target against an incrementally built echelon basis
    std::vector<Gf2Vector> echelon;
    auto reduce = [&echelon](Gf2Vector v) {
        for (const Gf2Vector &e : echelon)
            if (v.get(e.lowest_set()))
                v ^= e;
        return v;
    };
    for (const Gf2Vector &b : basis) {
        Gf2Vector v = reduce(b);
        if (!v.is_zero())
            echelon.push_back(v);
    }
    return reduce(target).is_zero();
}

} // namespace icsol
