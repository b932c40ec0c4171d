#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <initializer_list>
#include <string>
#include <vector>

#include "gtoric/error.hpp"

namespace gtoric {

// All lattice arithmetic is exact: arbitrary-precision integers throughout,
// no fixed-width fast path.
using Int = boost::multiprecision::cpp_int;

Int int_abs(const Int& a);
Int int_gcd(const Int& a, const Int& b);
Int int_lcm(const Int& a, const Int& b);
// Floor division, valid for negative operands (b != 0).
Int floor_div(const Int& a, const Int& b);

struct GcdExt {
    Int g; // gcd(|a|,|b|) >= 0
    Int s;
    Int t; // s*a + t*b == g
};

// Extended Euclid. gcd_ext(0,0) == {0,0,0}.
GcdExt gcd_ext(const Int& a, const Int& b);

class IntVec {
public:
    IntVec() = default;
    explicit IntVec(std::vector<Int> entries);
    IntVec(std::initializer_list<Int> entries);

    long long rank() const { return static_cast<long long>(e_.size()); }
    const Int& operator[](long long i) const { return e_.at(static_cast<size_t>(i)); }
    Int& operator[](long long i) { return e_.at(static_cast<size_t>(i)); }
    const std::vector<Int>& entries() const { return e_; }

    bool is_zero() const;
    Int content() const; // gcd of entries, >= 0
    bool is_primitive() const { return content() == 1; }
    IntVec primitive() const; // divide by content; error on zero vector

    IntVec operator+(const IntVec& o) const;
    IntVec operator-(const IntVec& o) const;
    IntVec operator-() const;
    IntVec scaled(const Int& c) const;
    Int dot(const IntVec& o) const;

    bool operator==(const IntVec& o) const { return e_ == o.e_; }
    bool operator!=(const IntVec& o) const { return e_ != o.e_; }
    bool operator<(const IntVec& o) const { return e_ < o.e_; }

    std::string str() const; // "(a, b, c)"

private:
    std::vector<Int> e_;
};

class IntMat {
public:
    IntMat() : rows_(0), cols_(0) {}
    IntMat(long long rows, long long cols);
    IntMat(long long rows, long long cols, std::vector<Int> entries); // row-major

    static IntMat identity(long long n);
    static IntMat from_columns(const std::vector<IntVec>& cols);
    static IntMat from_rows(const std::vector<IntVec>& rows);

    long long rows() const { return rows_; }
    long long cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const Int& at(long long i, long long j) const;
    Int& at(long long i, long long j);

    IntVec row(long long i) const;
    IntVec col(long long j) const;

    IntMat operator*(const IntMat& o) const;
    IntVec apply(const IntVec& v) const; // matrix * column vector
    IntMat transposed() const;

    void swap_rows(long long i, long long j);
    void swap_cols(long long i, long long j);
    void negate_row(long long i);
    void negate_col(long long j);
    // row i += c * row j
    void add_row(long long i, long long j, const Int& c);
    void add_col(long long i, long long j, const Int& c);

    bool operator==(const IntMat& o) const;
    bool operator!=(const IntMat& o) const { return !(*this == o); }

    std::string str() const;

private:
    long long rows_, cols_;
    std::vector<Int> a_;
};

struct SnfResult {
    IntMat d; // same shape as input, diagonal d_1 | d_2 | ..., nonnegative, zeros trail
    IntMat u; // rows x rows, unimodular
    IntMat v; // cols x cols, unimodular
    std::vector<Int> diagonal() const;
};

// Exact determinant by fraction-free (Bareiss) elimination.
Int det(const IntMat& m);

SnfResult smith_normal_form(const IntMat& m);

bool is_unimodular(const IntMat& m);

// Exact inverse of a matrix with det = +-1, via the adjugate.
IntMat unimodular_inverse(const IntMat& m);

// Extend part of a Z-basis of Z^n to a full basis; the result is an n x n
// unimodular matrix whose first columns are the inputs. Throws NotExtendable
// when the input vectors do not form part of a basis (some SNF diagonal
// entry != 1).
IntMat extend_to_basis(const std::vector<IntVec>& vectors, long long n);

} // namespace gtoric
