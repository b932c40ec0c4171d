#include "gtoric/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace gtoric {

const char* error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::NonSquare: return "non-square";
    case ErrorCode::NotExtendable: return "not-extendable";
    case ErrorCode::DegenerateCone: return "degenerate-cone";
    case ErrorCode::NonSimplicial: return "non-simplicial";
    case ErrorCode::NotSmooth: return "not-smooth";
    case ErrorCode::NotFullDimensional: return "not-full-dimensional";
    case ErrorCode::HypothesisViolation: return "hypothesis-violation";
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::UnsupportedDegree: return "unsupported-degree";
    case ErrorCode::IncompleteFan: return "incomplete-fan";
    case ErrorCode::ParseSyntax: return "parse-syntax";
    case ErrorCode::ParseDimension: return "parse-dimension";
    case ErrorCode::ParseBadIndex: return "parse-bad-index";
    case ErrorCode::DeclarationContradicted: return "declaration-contradicted";
    case ErrorCode::IoError: return "io-error";
    }
    return "unknown";
}

Int int_abs(const Int& a) { return a < 0 ? Int(-a) : a; }

Int int_gcd(const Int& a, const Int& b) {
    Int x = int_abs(a), y = int_abs(b);
    while (y != 0) {
        Int r = x % y;
        x = y;
        y = r;
    }
    return x;
}

Int int_lcm(const Int& a, const Int& b) {
    if (a == 0 || b == 0) return 0;
    return int_abs(a / int_gcd(a, b) * b);
}

Int floor_div(const Int& a, const Int& b) {
    Int q = a / b; // truncates toward zero
    if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
    return q;
}

GcdExt gcd_ext(const Int& a, const Int& b) {
    // Iterative extended Euclid on (a, b); signs folded into the cofactors.
    Int old_r = a, r = b;
    Int old_s = 1, s = 0;
    Int old_t = 0, t = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r; old_r = r; r = tmp;
        tmp = old_s - q * s; old_s = s; s = tmp;
        tmp = old_t - q * t; old_t = t; t = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    return GcdExt{old_r, old_s, old_t};
}

IntVec::IntVec(std::vector<Int> entries) : e_(std::move(entries)) {
    if (e_.empty()) throw Error(ErrorCode::InvalidArgument, "IntVec: rank must be >= 1");
}

IntVec::IntVec(std::initializer_list<Int> entries) : e_(entries) {
    if (e_.empty()) throw Error(ErrorCode::InvalidArgument, "IntVec: rank must be >= 1");
}

bool IntVec::is_zero() const {
    for (const Int& x : e_)
        if (x != 0) return false;
    return true;
}

Int IntVec::content() const {
    Int g = 0;
    for (const Int& x : e_) g = int_gcd(g, x);
    return g;
}

IntVec IntVec::primitive() const {
    Int g = content();
    if (g == 0) throw Error(ErrorCode::InvalidArgument, "primitive: zero vector has no primitive form");
    if (g == 1) return *this;
    std::vector<Int> out(e_);
    for (Int& x : out) x /= g;
    return IntVec(std::move(out));
}

IntVec IntVec::operator+(const IntVec& o) const {
    std::vector<Int> out(e_);
    for (size_t i = 0; i < out.size(); ++i) out[i] += o.e_.at(i);
    return IntVec(std::move(out));
}

IntVec IntVec::operator-(const IntVec& o) const {
    std::vector<Int> out(e_);
    for (size_t i = 0; i < out.size(); ++i) out[i] -= o.e_.at(i);
    return IntVec(std::move(out));
}

IntVec IntVec::operator-() const {
    std::vector<Int> out(e_);
    for (Int& x : out) x = -x;
    return IntVec(std::move(out));
}

IntVec IntVec::scaled(const Int& c) const {
    std::vector<Int> out(e_);
    for (Int& x : out) x *= c;
    return IntVec(std::move(out));
}

Int IntVec::dot(const IntVec& o) const {
    if (rank() != o.rank())
        throw Error(ErrorCode::InvalidArgument, "dot: rank mismatch");
    Int acc = 0;
    for (size_t i = 0; i < e_.size(); ++i) acc += e_[i] * o.e_[i];
    return acc;
}

std::string IntVec::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < e_.size(); ++i) {
        if (i) os << ", ";
        os << e_[i];
    }
    os << ")";
    return os.str();
}

IntMat::IntMat(long long rows, long long cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0)
        throw Error(ErrorCode::InvalidArgument, "IntMat: negative dimension");
    a_.assign(static_cast<size_t>(rows * cols), Int(0));
}

IntMat::IntMat(long long rows, long long cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (rows < 0 || cols < 0 || a_.size() != static_cast<size_t>(rows * cols))
        throw Error(ErrorCode::InvalidArgument, "IntMat: entries length must equal rows*cols");
}

IntMat IntMat::identity(long long n) {
    IntMat m(n, n);
    for (long long i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::from_columns(const std::vector<IntVec>& cols) {
    if (cols.empty()) return IntMat(0, 0);
    long long n = cols[0].rank();
    IntMat m(n, static_cast<long long>(cols.size()));
    for (long long j = 0; j < m.cols(); ++j) {
        const IntVec& c = cols[static_cast<size_t>(j)];
        if (c.rank() != n)
            throw Error(ErrorCode::InvalidArgument, "from_columns: rank mismatch");
        for (long long i = 0; i < n; ++i) m.at(i, j) = c[i];
    }
    return m;
}

IntMat IntMat::from_rows(const std::vector<IntVec>& rows) {
    if (rows.empty()) return IntMat(0, 0);
    long long n = rows[0].rank();
    IntMat m(static_cast<long long>(rows.size()), n);
    for (long long i = 0; i < m.rows(); ++i) {
        const IntVec& r = rows[static_cast<size_t>(i)];
        if (r.rank() != n)
            throw Error(ErrorCode::InvalidArgument, "from_rows: rank mismatch");
        for (long long j = 0; j < n; ++j) m.at(i, j) = r[j];
    }
    return m;
}

const Int& IntMat::at(long long i, long long j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
        throw Error(ErrorCode::InvalidArgument, "IntMat::at: index out of range");
    return a_[static_cast<size_t>(i * cols_ + j)];
}

Int& IntMat::at(long long i, long long j) {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
        throw Error(ErrorCode::InvalidArgument, "IntMat::at: index out of range");
    return a_[static_cast<size_t>(i * cols_ + j)];
}

IntVec IntMat::row(long long i) const {
    std::vector<Int> out;
    out.reserve(static_cast<size_t>(cols_));
    for (long long j = 0; j < cols_; ++j) out.push_back(at(i, j));
    return IntVec(std::move(out));
}

IntVec IntMat::col(long long j) const {
    std::vector<Int> out;
    out.reserve(static_cast<size_t>(rows_));
    for (long long i = 0; i < rows_; ++i) out.push_back(at(i, j));
    return IntVec(std::move(out));
}

IntMat IntMat::operator*(const IntMat& o) const {
    if (cols_ != o.rows_)
        throw Error(ErrorCode::InvalidArgument, "IntMat::operator*: shape mismatch");
    IntMat out(rows_, o.cols_);
    for (long long i = 0; i < rows_; ++i)
        for (long long k = 0; k < cols_; ++k) {
            const Int& aik = at(i, k);
            if (aik == 0) continue;
            for (long long j = 0; j < o.cols_; ++j)
                out.at(i, j) += aik * o.at(k, j);
        }
    return out;
}

IntVec IntMat::apply(const IntVec& v) const {
    if (v.rank() != cols_)
        throw Error(ErrorCode::InvalidArgument, "IntMat::apply: rank mismatch");
    std::vector<Int> out(static_cast<size_t>(rows_), Int(0));
    for (long long i = 0; i < rows_; ++i)
        for (long long j = 0; j < cols_; ++j)
            out[static_cast<size_t>(i)] += at(i, j) * v[j];
    return IntVec(std::move(out));
}

IntMat IntMat::transposed() const {
    IntMat out(cols_, rows_);
    for (long long i = 0; i < rows_; ++i)
        for (long long j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

void IntMat::swap_rows(long long i, long long j) {
    for (long long k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
}

void IntMat::swap_cols(long long i, long long j) {
    for (long long k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
}

void IntMat::negate_row(long long i) {
    for (long long k = 0; k < cols_; ++k) at(i, k) = -at(i, k);
}

void IntMat::negate_col(long long j) {
    for (long long k = 0; k < rows_; ++k) at(k, j) = -at(k, j);
}

void IntMat::add_row(long long i, long long j, const Int& c) {
    for (long long k = 0; k < cols_; ++k) at(i, k) += c * at(j, k);
}

void IntMat::add_col(long long i, long long j, const Int& c) {
    for (long long k = 0; k < rows_; ++k) at(k, i) += c * at(k, j);
}

bool IntMat::operator==(const IntMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

std::string IntMat::str() const {
    std::ostringstream os;
    os << "[";
    for (long long i = 0; i < rows_; ++i) {
        if (i) os << "; ";
        for (long long j = 0; j < cols_; ++j) {
            if (j) os << " ";
            os << at(i, j);
        }
    }
    os << "]";
    return os.str();
}

std::vector<Int> SnfResult::diagonal() const {
    std::vector<Int> out;
    long long r = std::min(d.rows(), d.cols());
    out.reserve(static_cast<size_t>(r));
    for (long long i = 0; i < r; ++i) out.push_back(d.at(i, i));
    return out;
}

Int det(const IntMat& m) {
    if (!m.is_square())
        throw Error(ErrorCode::NonSquare, "det: matrix must be square");
    long long n = m.rows();
    if (n == 0) return 1;
    IntMat a = m;
    Int sign = 1;
    Int prev = 1;
    for (long long k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            long long p = -1;
            for (long long i = k + 1; i < n; ++i)
                if (a.at(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (long long i = k + 1; i < n; ++i) {
            for (long long j = k + 1; j < n; ++j) {
                // Bareiss: division by the previous pivot is exact.
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
            }
            a.at(i, k) = 0;
        }
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

bool is_unimodular(const IntMat& m) {
    if (!m.is_square())
        throw Error(ErrorCode::NonSquare, "is_unimodular: matrix must be square");
    Int d = det(m);
    return d == 1 || d == -1;
}

namespace {

// 2x2 unimodular row mix derived from gcd_ext: rows (i,j) with pivot a = A[i][c],
// entry b = A[j][c] become (s*row_i + t*row_j, -(b/g)*row_i + (a/g)*row_j);
// the new A[i][c] is g and A[j][c] is 0.
void gcd_mix_rows(IntMat& a, IntMat& u, long long i, long long j, long long c) {
    const Int p = a.at(i, c), q = a.at(j, c);
    if (q == 0) return;
    if (p == 0) {
        a.swap_rows(i, j);
        u.swap_rows(i, j);
        return;
    }
    if (q % p == 0) {
        Int f = -(q / p);
        a.add_row(j, i, f);
        u.add_row(j, i, f);
        return;
    }
    GcdExt e = gcd_ext(p, q);
    Int pg = p / e.g, qg = q / e.g;
    for (long long k = 0; k < a.cols(); ++k) {
        Int x = a.at(i, k), y = a.at(j, k);
        a.at(i, k) = e.s * x + e.t * y;
        a.at(j, k) = -qg * x + pg * y;
    }
    for (long long k = 0; k < u.cols(); ++k) {
        Int x = u.at(i, k), y = u.at(j, k);
        u.at(i, k) = e.s * x + e.t * y;
        u.at(j, k) = -qg * x + pg * y;
    }
}

void gcd_mix_cols(IntMat& a, IntMat& v, long long i, long long j, long long r) {
    const Int p = a.at(r, i), q = a.at(r, j);
    if (q == 0) return;
    if (p == 0) {
        a.swap_cols(i, j);
        v.swap_cols(i, j);
        return;
    }
    if (q % p == 0) {
        Int f = -(q / p);
        a.add_col(j, i, f);
        v.add_col(j, i, f);
        return;
    }
    GcdExt e = gcd_ext(p, q);
    Int pg = p / e.g, qg = q / e.g;
    for (long long k = 0; k < a.rows(); ++k) {
        Int x = a.at(k, i), y = a.at(k, j);
        a.at(k, i) = e.s * x + e.t * y;
        a.at(k, j) = -qg * x + pg * y;
    }
    for (long long k = 0; k < v.rows(); ++k) {
        Int x = v.at(k, i), y = v.at(k, j);
        v.at(k, i) = e.s * x + e.t * y;
        v.at(k, j) = -qg * x + pg * y;
    }
}

} // namespace

SnfResult smith_normal_form(const IntMat& m) {
    long long rows = m.rows(), cols = m.cols();
    IntMat a = m;
    IntMat u = IntMat::identity(rows);
    IntMat v = IntMat::identity(cols);
    long long r = std::min(rows, cols);

    for (long long t = 0; t < r; ++t) {
        // locate a pivot of minimal absolute value in the trailing submatrix
        long long pi = -1, pj = -1;
        Int best = 0;
        for (long long i = t; i < rows; ++i)
            for (long long j = t; j < cols; ++j) {
                const Int& x = a.at(i, j);
                if (x == 0) continue;
                Int ax = int_abs(x);
                if (pi < 0 || ax < best) {
                    pi = i; pj = j; best = ax;
                }
            }
        if (pi < 0) break; // trailing submatrix is zero
        if (pi != t) { a.swap_rows(t, pi); u.swap_rows(t, pi); }
        if (pj != t) { a.swap_cols(t, pj); v.swap_cols(t, pj); }

        for (;;) {
            for (long long i = t + 1; i < rows; ++i) gcd_mix_rows(a, u, t, i, t);
            bool row_clear = true;
            for (long long j = t + 1; j < cols; ++j)
                if (a.at(t, j) != 0) { row_clear = false; break; }
            if (!row_clear)
                for (long long j = t + 1; j < cols; ++j) gcd_mix_cols(a, v, t, j, t);
            bool col_clear = true;
            for (long long i = t + 1; i < rows; ++i)
                if (a.at(i, t) != 0) { col_clear = false; break; }
            if (!col_clear) continue;

            // make the pivot divide the rest of the submatrix
            const Int& piv = a.at(t, t);
            long long bi = -1, bj = -1;
            for (long long i = t + 1; i < rows && bi < 0; ++i)
                for (long long j = t + 1; j < cols; ++j)
                    if (a.at(i, j) % piv != 0) { bi = i; bj = j; break; }
            if (bi < 0) break;
            a.add_row(t, bi, 1);
            u.add_row(t, bi, 1);
        }
        if (a.at(t, t) < 0) {
            a.negate_row(t);
            u.negate_row(t);
        }
    }
    return SnfResult{a, u, v};
}

IntMat unimodular_inverse(const IntMat& m) {
    if (!m.is_square())
        throw Error(ErrorCode::NonSquare, "unimodular_inverse: matrix must be square");
    long long n = m.rows();
    Int d = det(m);
    if (d != 1 && d != -1)
        throw Error(ErrorCode::InvalidArgument, "unimodular_inverse: |det| != 1");
    if (n == 0) return m;
    IntMat inv(n, n);
    for (long long i = 0; i < n; ++i)
        for (long long j = 0; j < n; ++j) {
            IntMat minor(n - 1, n - 1);
            for (long long r2 = 0, mi = 0; r2 < n; ++r2) {
                if (r2 == j) continue;
                for (long long c2 = 0, mj = 0; c2 < n; ++c2) {
                    if (c2 == i) continue;
                    minor.at(mi, mj) = m.at(r2, c2);
                    ++mj;
                }
                ++mi;
            }
            Int cof = det(minor);
            if ((i + j) % 2 != 0) cof = -cof;
            inv.at(i, j) = cof * d; // d == +-1, so this is adj(m)/det(m)
        }
    return inv;
}

IntMat extend_to_basis(const std::vector<IntVec>& vectors, long long n) {
    if (n < 1)
        throw Error(ErrorCode::InvalidArgument, "extend_to_basis: rank must be >= 1");
    if (vectors.empty()) return IntMat::identity(n);
    for (const IntVec& v : vectors)
        if (v.rank() != n)
            throw Error(ErrorCode::InvalidArgument, "extend_to_basis: vector rank mismatch");
    long long k = static_cast<long long>(vectors.size());
    if (k > n)
        throw Error(ErrorCode::NotExtendable, "extend_to_basis: more vectors than the rank");

    IntMat m = IntMat::from_columns(vectors);
    SnfResult snf = smith_normal_form(m);
    for (const Int& di : snf.diagonal())
        if (di != 1)
            throw Error(ErrorCode::NotExtendable,
                        "extend_to_basis: SNF diagonal entry " + di.str() +
                            " != 1; vectors are not part of a basis");

    // u*m*v = [I_k; 0]  =>  m = u^-1 * [v^-1; 0], so u^-1 * blockdiag(v^-1, I)
    // is unimodular with the inputs as its first k columns.
    IntMat u_inv = unimodular_inverse(snf.u);
    IntMat v_inv = unimodular_inverse(snf.v);
    IntMat block = IntMat::identity(n);
    for (long long i = 0; i < k; ++i)
        for (long long j = 0; j < k; ++j) block.at(i, j) = v_inv.at(i, j);
    return u_inv * block;
}

} // namespace gtoric
