#include "nullideal/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace nullideal {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<Integer>& entries) {
    IntMatrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m.at(i, i) = entries[i];
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows) {
    if (rows.empty()) throw std::invalid_argument("from_rows: empty matrix");
    IntMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) throw std::invalid_argument("from_rows: ragged rows");
        for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

std::size_t IntMatrix::dimension() const {
    if (!is_square()) throw std::logic_error("dimension: matrix is not square");
    return rows_;
}

bool IntMatrix::is_diagonal() const {
    if (!is_square()) throw std::logic_error("is_diagonal: matrix is not square");
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (i != j && at(i, j) != 0) return false;
    return true;
}

std::vector<Integer> IntMatrix::diagonal_entries() const {
    std::size_t n = dimension();
    std::vector<Integer> d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = at(i, i);
    return d;
}

IntMatrix IntMatrix::mod(const Integer& m) const {
    IntMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = mod_canonical(e_[i], m);
    return r;
}

bool IntMatrix::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const Integer& x) { return x == 0; });
}

IntMatrix IntMatrix::operator-() const {
    IntMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = -e_[i];
    return r;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix +: shape mismatch");
    IntMatrix r(a.rows_, a.cols_);
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = a.e_[i] + b.e_[i];
    return r;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    return a + (-b);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix *: shape mismatch");
    IntMatrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Integer& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) r.at(i, j) += aik * b.at(k, j);
        }
    return r;
}

IntMatrix operator*(const Integer& c, const IntMatrix& a) {
    IntMatrix r(a.rows_, a.cols_);
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = c * a.e_[i];
    return r;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

// row[a] += c * row[b]
void add_row(IntMatrix& m, std::size_t a, std::size_t b, const Integer& c) {
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(a, j) += c * m.at(b, j);
}

void add_col(IntMatrix& m, std::size_t a, std::size_t b, const Integer& c) {
    for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, a) += c * m.at(i, b);
}

void negate_row(IntMatrix& m, std::size_t a) {
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(a, j) = -m.at(a, j);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& M) {
    const std::size_t r = M.rows(), c = M.cols();
    IntMatrix R = M;
    IntMatrix U = IntMatrix::identity(r);
    IntMatrix V = IntMatrix::identity(c);
    const std::size_t k = std::min(r, c);

    for (std::size_t t = 0; t < k; ++t) {
        for (;;) {
            // pivot: minimal |entry| != 0 in the remaining block, ties by (row, col)
            std::size_t pi = t, pj = t;
            bool found = false;
            for (std::size_t i = t; i < r; ++i)
                for (std::size_t j = t; j < c; ++j) {
                    const Integer& x = R.at(i, j);
                    if (x == 0) continue;
                    if (!found || cmp(abs(x), abs(R.at(pi, pj))) < 0) {
                        pi = i;
                        pj = j;
                        found = true;
                    }
                }
            if (!found) break;  // remaining block zero
            swap_rows(R, t, pi);
            swap_rows(U, t, pi);
            swap_cols(R, t, pj);
            swap_cols(V, t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < r; ++i) {
                if (R.at(i, t) == 0) continue;
                Integer q = R.at(i, t) / R.at(t, t);  // truncated, remainder < |pivot|
                if (q != 0) {
                    add_row(R, i, t, -q);
                    add_row(U, i, t, -q);
                }
                if (R.at(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < c; ++j) {
                if (R.at(t, j) == 0) continue;
                Integer q = R.at(t, j) / R.at(t, t);
                if (q != 0) {
                    add_col(R, j, t, -q);
                    add_col(V, j, t, -q);
                }
                if (R.at(t, j) != 0) clean = false;
            }
            if (!clean) continue;  // smaller residues exist, re-pivot

            // divisibility: pivot must divide the rest of the block
            bool divides = true;
            for (std::size_t i = t + 1; i < r && divides; ++i)
                for (std::size_t j = t + 1; j < c && divides; ++j)
                    if (!mpz_divisible_p(R.at(i, j).get_mpz_t(), R.at(t, t).get_mpz_t())) {
                        add_row(R, t, i, Integer(1));
                        add_row(U, t, i, Integer(1));
                        divides = false;
                    }
            if (divides) break;
        }
        if (R.at(t, t) < 0) {
            negate_row(R, t);
            negate_row(U, t);
        }
    }

    SmithForm s;
    s.U = std::move(U);
    s.V = std::move(V);
    s.divisors.resize(k);
    for (std::size_t t = 0; t < k; ++t) s.divisors[t] = R.at(t, t);

    // internal check: U*M*V diagonal with the stored divisors, chain d_t | d_{t+1}
    IntMatrix D = (s.U * M) * s.V;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) {
            const Integer expected = (i == j && i < k) ? s.divisors[i] : Integer(0);
            if (D.at(i, j) != expected) throw std::logic_error("smith_normal_form: verification failed");
        }
    for (std::size_t t = 0; t + 1 < k; ++t)
        if (s.divisors[t] != 0 && !mpz_divisible_p(s.divisors[t + 1].get_mpz_t(), s.divisors[t].get_mpz_t()))
            throw std::logic_error("smith_normal_form: divisor chain violated");
        else if (s.divisors[t] == 0 && s.divisors[t + 1] != 0)
            throw std::logic_error("smith_normal_form: divisor chain violated");
    return s;
}

std::optional<std::vector<Integer>> solve_mod(const IntMatrix& M, const std::vector<Integer>& b, const Integer& m) {
    return solve_mod(smith_normal_form(M), b, m);
}

std::optional<std::vector<Integer>> solve_mod(const SmithForm& s, const std::vector<Integer>& b, const Integer& m) {
    if (m < 2) throw std::invalid_argument("solve_mod: modulus must be >= 2, got " + m.get_str());
    const std::size_t r = s.U.rows(), c = s.V.rows();
    if (b.size() != r) throw std::invalid_argument("solve_mod: right-hand side size mismatch");
    const std::size_t k = s.divisors.size();

    // transformed right-hand side
    std::vector<Integer> ub(r, Integer(0));
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) ub[i] += s.U.at(i, j) * b[j];
        ub[i] = mod_canonical(ub[i], m);
    }

    std::vector<Integer> y(c, Integer(0));
    for (std::size_t i = 0; i < r; ++i) {
        if (i < k) {
            Integer g = gcd(Integer(s.divisors[i]), m);
            if (!mpz_divisible_p(ub[i].get_mpz_t(), g.get_mpz_t())) return std::nullopt;
            Integer mg = m / g;
            if (mg == 1) {
                y[i] = 0;  // any residue works; pick 0
            } else {
                Integer dg = mod_canonical(s.divisors[i] / g, mg);
                Integer inv;
                if (mpz_invert(inv.get_mpz_t(), dg.get_mpz_t(), mg.get_mpz_t()) == 0)
                    throw std::logic_error("solve_mod: unit inversion failed");
                y[i] = mod_canonical((ub[i] / g) * inv, mg);
            }
        } else if (ub[i] != 0) {
            return std::nullopt;  // row beyond the divisor count must vanish
        }
    }

    std::vector<Integer> x(c, Integer(0));
    for (std::size_t i = 0; i < c; ++i) {
        for (std::size_t j = 0; j < c; ++j) x[i] += s.V.at(i, j) * y[j];
        x[i] = mod_canonical(x[i], m);
    }
    return x;
}

std::optional<std::vector<Integer>> solve_integer(const IntMatrix& M, const std::vector<Integer>& b) {
    SmithForm s = smith_normal_form(M);
    const std::size_t r = M.rows(), c = M.cols();
    if (b.size() != r) throw std::invalid_argument("solve_integer: right-hand side size mismatch");
    const std::size_t k = s.divisors.size();

    std::vector<Integer> ub(r, Integer(0));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) ub[i] += s.U.at(i, j) * b[j];

    std::vector<Integer> y(c, Integer(0));
    for (std::size_t i = 0; i < r; ++i) {
        if (i < k && s.divisors[i] != 0) {
            if (!mpz_divisible_p(ub[i].get_mpz_t(), s.divisors[i].get_mpz_t())) return std::nullopt;
            y[i] = ub[i] / s.divisors[i];
        } else if (ub[i] != 0) {
            return std::nullopt;
        }
    }

    std::vector<Integer> x(c, Integer(0));
    for (std::size_t i = 0; i < c; ++i)
        for (std::size_t j = 0; j < c; ++j) x[i] += s.V.at(i, j) * y[j];
    return x;
}

IntMatrix power_stack(const IntMatrix& A, std::size_t d) {
    const std::size_t n = A.dimension();
    IntMatrix stack(n * n, d);
    IntMatrix power = IntMatrix::identity(n);
    for (std::size_t j = 0; j < d; ++j) {
        if (j > 0) power = power * A;  // A^j built incrementally
        std::vector<Integer> v = power.vec();
        for (std::size_t i = 0; i < n * n; ++i) stack.at(i, j) = v[i];
    }
    return stack;
}

IntMatrix evaluate_poly(const IntPolynomial& f, const IntMatrix& A) {
    const std::size_t n = A.dimension();
    IntMatrix acc(n, n);
    for (long k = f.degree(); k >= 0; --k) {
        acc = acc * A;
        const Integer& c = f.coeff(static_cast<std::size_t>(k));
        for (std::size_t i = 0; i < n; ++i) acc.at(i, i) += c;
    }
    return acc;
}

namespace {

// row-echelon elimination over the rationals; returns pivot columns
std::vector<std::size_t> eliminate(std::vector<std::vector<Rational>>& a) {
    std::vector<std::size_t> pivots;
    if (a.empty()) return pivots;
    const std::size_t rows = a.size(), cols = a[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t sel = row;
        while (sel < rows && a[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(a[row], a[sel]);
        Rational inv = 1 / a[row][col];
        for (std::size_t j = col; j < cols; ++j) a[row][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || a[i][col] == 0) continue;
            Rational f = a[i][col];
            for (std::size_t j = col; j < cols; ++j) a[i][j] -= f * a[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::size_t rational_rank(const IntMatrix& M) {
    std::vector<std::vector<Rational>> a(M.rows(), std::vector<Rational>(M.cols()));
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j) a[i][j] = Rational(M.at(i, j));
    return eliminate(a).size();
}

std::optional<std::vector<Rational>> solve_rational(const IntMatrix& M, const std::vector<Integer>& b) {
    if (b.size() != M.rows()) throw std::invalid_argument("solve_rational: right-hand side size mismatch");
    const std::size_t cols = M.cols();
    std::vector<std::vector<Rational>> a(M.rows(), std::vector<Rational>(cols + 1));
    for (std::size_t i = 0; i < M.rows(); ++i) {
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = Rational(M.at(i, j));
        a[i][cols] = Rational(b[i]);
    }
    std::vector<std::size_t> pivots = eliminate(a);
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;  // inconsistent
    if (pivots.size() != cols) throw std::invalid_argument("solve_rational: columns are dependent");
    std::vector<Rational> x(cols);
    for (std::size_t i = 0; i < cols; ++i) {
        x[i] = a[i][cols];
        x[i].canonicalize();
    }
    return x;
}

}
