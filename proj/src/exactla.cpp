#include "knotcolor/exactla.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace knotcolor {

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.begin()->size();
    IntMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw IndexOutOfRange("ragged row in matrix literal");
        std::size_t j = 0;
        for (long v : row) m.at(i, j++) = v;
        ++i;
    }
    return m;
}

IntMatrix IntMatrix::without_row_col(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_)
        throw IndexOutOfRange("row/column to delete is out of range");
    IntMatrix m(rows_ - 1, cols_ - 1);
    for (std::size_t r = 0, rr = 0; r < rows_; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, cc = 0; c < cols_; ++c) {
            if (c == j) continue;
            m.at(rr, cc) = at(r, c);
            ++cc;
        }
        ++rr;
    }
    return m;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw IndexOutOfRange("matrix product shape mismatch");
    IntMatrix m(rows_, o.cols_);
    mpz_class t;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const mpz_class& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                t = a * o.at(k, j);
                m.at(i, j) += t;
            }
        }
    return m;
}

std::string IntMatrix::to_string() const {
    std::vector<std::string> cells(rows_ * cols_);
    std::size_t width = 1;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            cells[i * cols_ + j] = at(i, j).get_str();
            width = std::max(width, cells[i * cols_ + j].size());
        }
    std::ostringstream out;
    for (std::size_t i = 0; i < rows_; ++i) {
        out << "[";
        for (std::size_t j = 0; j < cols_; ++j) {
            const std::string& s = cells[i * cols_ + j];
            out << std::string(width - s.size() + (j ? 1 : 0), ' ') << s;
        }
        out << " ]\n";
    }
    return out.str();
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d <= n / d; d += 2)
        if (n % d == 0) return false;
    return true;
}

mpz_class det(const IntMatrix& m) {
    if (!m.square()) throw NotSquare("determinant requires a square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;  // empty product

    // Bareiss fraction-free elimination: every division below is exact.
    std::vector<mpz_class> a;
    a.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a.push_back(m.at(i, j));

    auto e = [&](std::size_t i, std::size_t j) -> mpz_class& { return a[i * n + j]; };

    int sign = 1;
    mpz_class prev = 1, t;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && e(pivot, k) == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != k) {
            for (std::size_t j = k; j < n; ++j) std::swap(e(k, j), e(pivot, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                t = e(i, j) * e(k, k) - e(i, k) * e(k, j);
                mpz_divexact(e(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            e(i, k) = 0;
        }
        prev = e(k, k);
    }
    return sign > 0 ? e(n - 1, n - 1) : mpz_class(-e(n - 1, n - 1));
}

mpz_class cofactor(const IntMatrix& m, std::size_t i, std::size_t j) {
    if (!m.square()) throw NotSquare("cofactor requires a square matrix");
    mpz_class minor = det(m.without_row_col(i, j));
    return ((i + j) % 2 == 0) ? minor : mpz_class(-minor);
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % n);
}

std::uint64_t inv_mod_prime(std::uint64_t a, std::uint64_t p) {
    // extended Euclid; a != 0 mod p
    std::int64_t t = 0, newt = 1;
    std::int64_t r = static_cast<std::int64_t>(p), newr = static_cast<std::int64_t>(a % p);
    while (newr != 0) {
        std::int64_t q = r / newr;
        std::int64_t tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

std::uint64_t residue(const mpz_class& x, std::uint64_t n) {
    return mpz_fdiv_ui(x.get_mpz_t(), n);
}

}  // namespace

ModNullspace nullspace_mod_p(const IntMatrix& m, std::uint64_t p) {
    if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::uint64_t> a(rows * cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a[i * cols + j] = residue(m.at(i, j), p);

    // Gauss-Jordan to reduced row echelon form over F_p.
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pr = rank;
        while (pr < rows && a[pr * cols + col] == 0) ++pr;
        if (pr == rows) continue;
        for (std::size_t j = 0; j < cols; ++j)
            std::swap(a[rank * cols + j], a[pr * cols + j]);
        std::uint64_t inv = inv_mod_prime(a[rank * cols + col], p);
        for (std::size_t j = 0; j < cols; ++j)
            a[rank * cols + j] = mulmod(a[rank * cols + j], inv, p);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank) continue;
            std::uint64_t f = a[i * cols + col];
            if (f == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) {
                std::uint64_t sub = mulmod(f, a[rank * cols + j], p);
                a[i * cols + j] = (a[i * cols + j] + p - sub) % p;
            }
        }
        pivot_col.push_back(col);
        ++rank;
    }

    ModNullspace out;
    out.nullity = cols - rank;
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_col) is_pivot[c] = true;
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        ModVector v;
        v.modulus = p;
        v.entries.assign(cols, 0);
        v.entries[free_col] = 1;
        for (std::size_t r = 0; r < rank; ++r) {
            std::uint64_t coeff = a[r * cols + free_col];
            if (coeff) v.entries[pivot_col[r]] = p - coeff;
        }
        out.basis.push_back(std::move(v));
    }
    return out;
}

SmithForm smith_normal_form(const IntMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    SmithForm f;
    f.u = IntMatrix::identity(rows);
    f.v = IntMatrix::identity(cols);
    IntMatrix d = m;
    const std::size_t nmin = std::min(rows, cols);

    auto row_op = [&](IntMatrix& mat, std::size_t dst, std::size_t src, const mpz_class& k) {
        for (std::size_t j = 0; j < mat.cols(); ++j) mat.at(dst, j) -= k * mat.at(src, j);
    };
    auto col_op = [&](IntMatrix& mat, std::size_t dst, std::size_t src, const mpz_class& k) {
        for (std::size_t i = 0; i < mat.rows(); ++i) mat.at(i, dst) -= k * mat.at(i, src);
    };
    auto swap_rows = [&](IntMatrix& mat, std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < mat.cols(); ++k) std::swap(mat.at(i, k), mat.at(j, k));
    };
    auto swap_cols = [&](IntMatrix& mat, std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < mat.rows(); ++k) std::swap(mat.at(k, i), mat.at(k, j));
    };

    for (std::size_t t = 0; t < nmin; ++t) {
        for (;;) {
            // smallest nonzero |entry| in the trailing block -> pivot at (t,t)
            std::size_t pi = t, pj = t;
            bool found = false;
            mpz_class best;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j) {
                    if (d.at(i, j) == 0) continue;
                    mpz_class v = abs(d.at(i, j));
                    if (!found || v < best) {
                        found = true;
                        best = v;
                        pi = i;
                        pj = j;
                    }
                }
            if (!found) {
                d.at(t, t) = 0;
                break;
            }
            if (pi != t) {
                swap_rows(d, t, pi);
                swap_rows(f.u, t, pi);
            }
            if (pj != t) {
                swap_cols(d, t, pj);
                swap_cols(f.v, t, pj);
            }

            bool dirty = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (d.at(i, t) == 0) continue;
                mpz_class q = d.at(i, t) / d.at(t, t);  // truncated quotient
                if (q != 0) {
                    row_op(d, i, t, q);
                    row_op(f.u, i, t, q);
                }
                if (d.at(i, t) != 0) dirty = true;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (d.at(t, j) == 0) continue;
                mpz_class q = d.at(t, j) / d.at(t, t);
                if (q != 0) {
                    col_op(d, j, t, q);
                    col_op(f.v, j, t, q);
                }
                if (d.at(t, j) != 0) dirty = true;
            }
            if (dirty) continue;

            // pivot divides everything below-right, or absorb a bad row
            bool divides_all = true;
            std::size_t bi = 0;
            for (std::size_t i = t + 1; i < rows && divides_all; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (d.at(i, j) % d.at(t, t) != 0) {
                        divides_all = false;
                        bi = i;
                        break;
                    }
            if (divides_all) break;
            for (std::size_t j = 0; j < cols; ++j) d.at(t, j) += d.at(bi, j);
            for (std::size_t j = 0; j < rows; ++j) f.u.at(t, j) += f.u.at(bi, j);
        }
        if (d.at(t, t) < 0) {
            for (std::size_t j = 0; j < cols; ++j) d.at(t, j) = -d.at(t, j);
            for (std::size_t j = 0; j < rows; ++j) f.u.at(t, j) = -f.u.at(t, j);
        }
    }
    f.divisors.resize(nmin);
    for (std::size_t t = 0; t < nmin; ++t) f.divisors[t] = d.at(t, t);
    return f;
}

mpz_class count_solutions_mod_n(const IntMatrix& m, std::uint64_t n) {
    if (n == 0) throw KnotError("modulus must be >= 1");
    SmithForm f = smith_normal_form(m);
    mpz_class count = 1;
    mpz_class nz(static_cast<unsigned long>(n));
    for (const mpz_class& dv : f.divisors) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), dv.get_mpz_t(), nz.get_mpz_t());
        if (dv == 0) g = nz;
        count *= g;
    }
    if (m.cols() > m.rows())
        for (std::size_t i = 0; i < m.cols() - m.rows(); ++i) count *= nz;
    return count;
}

std::vector<ModVector> solve_mod_n(const IntMatrix& m, std::uint64_t n, std::uint64_t cap) {
    if (n == 0) throw KnotError("modulus must be >= 1");
    const std::size_t cols = m.cols();
    if (n == 1 || cols == 0) {
        ModVector zero;
        zero.modulus = n;
        zero.entries.assign(cols, 0);
        return {zero};
    }

    mpz_class count = count_solutions_mod_n(m, n);
    if (count > cap)
        throw SolutionSetTooLarge("solution set has " + count.get_str() +
                                  " vectors, cap is " + std::to_string(cap));

    SmithForm f = smith_normal_form(m);
    const std::size_t nmin = f.divisors.size();

    // Coordinates in the y = v^-1 x basis: y_i runs over the multiples of
    // n/gcd(n, d_i); beyond the diagonal block y is unconstrained.
    std::vector<std::vector<std::uint64_t>> choices(cols);
    for (std::size_t i = 0; i < cols; ++i) {
        if (i < nmin) {
            std::uint64_t g =
                f.divisors[i] == 0 ? n : mpz_gcd_ui(nullptr, f.divisors[i].get_mpz_t(), n);
            std::uint64_t step = n / g;
            for (std::uint64_t t = 0; t < g; ++t) choices[i].push_back(t * step);
        } else {
            for (std::uint64_t t = 0; t < n; ++t) choices[i].push_back(t);
        }
    }

    std::vector<std::vector<std::uint64_t>> vmod(cols, std::vector<std::uint64_t>(cols));
    for (std::size_t i = 0; i < cols; ++i)
        for (std::size_t j = 0; j < cols; ++j) vmod[i][j] = residue(f.v.at(i, j), n);

    std::vector<ModVector> out;
    std::vector<std::uint64_t> y(cols, 0);
    std::vector<std::size_t> idx(cols, 0);
    for (;;) {
        for (std::size_t i = 0; i < cols; ++i) y[i] = choices[i][idx[i]];
        ModVector x;
        x.modulus = n;
        x.entries.assign(cols, 0);
        for (std::size_t i = 0; i < cols; ++i) {
            std::uint64_t acc = 0;
            for (std::size_t j = 0; j < cols; ++j)
                if (y[j]) acc = (acc + mulmod(vmod[i][j], y[j], n)) % n;
            x.entries[i] = acc;
        }
        out.push_back(std::move(x));

        std::size_t k = cols;
        while (k > 0) {
            --k;
            if (++idx[k] < choices[k].size()) break;
            idx[k] = 0;
            if (k == 0) {
                std::sort(out.begin(), out.end(),
                          [](const ModVector& a, const ModVector& b) {
                              return a.entries < b.entries;
                          });
                return out;
            }
        }
    }
}

}  // namespace knotcolor
