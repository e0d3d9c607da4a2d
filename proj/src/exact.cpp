#include "csa/exact.hpp"

#include <sstream>
#include <stdexcept>

namespace csa {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
    IntMatrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows; ++i) {
        if (static_cast<int>(rows[i].size()) != m.cols)
            throw std::invalid_argument("from_rows: ragged rows");
        for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

std::vector<Int> IntMatrix::row(int r) const {
    return std::vector<Int>(entries.begin() + static_cast<size_t>(r) * cols,
                            entries.begin() + static_cast<size_t>(r + 1) * cols);
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
}

bool is_zero_vector(const std::vector<Int>& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

std::vector<Int> primitive_vector(std::vector<Int> v) {
    Int g = 0;
    for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 0) return v;
    int sign = 0;
    for (const auto& x : v) {
        if (x != 0) {
            sign = sgn(x);
            break;
        }
    }
    if (sign < 0) g = -g;
    for (auto& x : v) x /= g;
    return v;
}

namespace {

// Rational Gauss-Jordan to reduced row echelon form. Returns pivot columns.
std::vector<int> rref(std::vector<std::vector<Rat>>& a) {
    std::vector<int> pivots;
    if (a.empty()) return pivots;
    const int rows = static_cast<int>(a.size());
    const int cols = static_cast<int>(a[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pr = -1;
        for (int i = r; i < rows; ++i) {
            if (a[i][c] != 0) {
                pr = i;
                break;
            }
        }
        if (pr < 0) continue;
        std::swap(a[r], a[pr]);
        Rat inv = a[r][c];
        for (int j = c; j < cols; ++j) a[r][j] /= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rat f = a[i][c];
            for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::vector<std::vector<Rat>> to_rat(const IntMatrix& m) {
    std::vector<std::vector<Rat>> a(m.rows, std::vector<Rat>(m.cols));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) a[i][j] = Rat(m.at(i, j));
    return a;
}

std::vector<Int> clear_denominators(const std::vector<Rat>& row) {
    Int l = 1;
    for (const auto& q : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    std::vector<Int> out(row.size());
    for (size_t j = 0; j < row.size(); ++j) {
        Rat scaled = row[j] * Rat(l);
        out[j] = scaled.get_num();  // denominator is 1 after scaling
    }
    return primitive_vector(std::move(out));
}

}  // namespace

int rank(const IntMatrix& m) {
    auto a = to_rat(m);
    return static_cast<int>(rref(a).size());
}

IntMatrix canonical_row_space(const IntMatrix& m) {
    auto a = to_rat(m);
    auto pivots = rref(a);
    std::vector<std::vector<Int>> rows;
    rows.reserve(pivots.size());
    for (size_t i = 0; i < pivots.size(); ++i) rows.push_back(clear_denominators(a[i]));
    IntMatrix out(static_cast<int>(rows.size()), m.cols);
    for (int i = 0; i < out.rows; ++i)
        for (int j = 0; j < out.cols; ++j) out.at(i, j) = rows[i][j];
    return out;
}

IntMatrix kernel_basis(const IntMatrix& m) {
    auto a = to_rat(m);
    auto pivots = rref(a);
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : pivots) is_pivot[c] = true;

    std::vector<std::vector<Int>> rows;
    for (int f = 0; f < m.cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rat> v(m.cols, Rat(0));
        v[f] = 1;
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][f];
        rows.push_back(clear_denominators(v));
    }
    IntMatrix out(static_cast<int>(rows.size()), m.cols);
    for (int i = 0; i < out.rows; ++i)
        for (int j = 0; j < out.cols; ++j) out.at(i, j) = rows[i][j];
    return out;
}

Int determinant(const IntMatrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("determinant: matrix not square");
    const int n = m.rows;
    if (n == 0) return 1;
    IntMatrix a = m;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a.at(k, k) == 0) {
            int pr = -1;
            for (int i = k + 1; i < n; ++i) {
                if (a.at(i, k) != 0) {
                    pr = i;
                    break;
                }
            }
            if (pr < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(pr, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Int num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                a.at(i, j) = num / prev;  // exact division (Bareiss)
            }
            a.at(i, k) = 0;
        }
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

bool in_row_space(const IntMatrix& basis, const std::vector<Int>& v) {
    if (is_zero_vector(v)) return true;
    int r = rank(basis);
    IntMatrix aug(basis.rows + 1, basis.cols);
    aug.entries.assign(basis.entries.begin(), basis.entries.end());
    aug.entries.insert(aug.entries.end(), v.begin(), v.end());
    return rank(aug) == r;
}

bool in_row_space_rref(const IntMatrix& basis, const std::vector<Int>& v) {
    // In RREF shape every pivot column is zero in the other rows, so the
    // coefficient of row i is v[pivot_i] / basis[i][pivot_i].
    std::vector<Rat> residual(v.begin(), v.end());
    for (int i = 0; i < basis.rows; ++i) {
        int p = -1;
        for (int j = 0; j < basis.cols; ++j) {
            if (basis.at(i, j) != 0) {
                p = j;
                break;
            }
        }
        if (p < 0) continue;
        if (residual[p] == 0) continue;
        Rat c = residual[p] / Rat(basis.at(i, p));
        for (int j = p; j < basis.cols; ++j) residual[j] -= c * Rat(basis.at(i, j));
    }
    for (const auto& x : residual)
        if (x != 0) return false;
    return true;
}

std::vector<Rat> coordinates_in_row_space(const IntMatrix& basis, const std::vector<Int>& v) {
    // Solve x * basis = v: augment basis^T with v as last column and reduce.
    const int k = basis.rows;
    std::vector<std::vector<Rat>> a(basis.cols, std::vector<Rat>(k + 1));
    for (int i = 0; i < basis.cols; ++i) {
        for (int j = 0; j < k; ++j) a[i][j] = Rat(basis.at(j, i));
        a[i][k] = Rat(v[i]);
    }
    auto pivots = rref(a);
    std::vector<Rat> x(k, Rat(0));
    for (size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == k) return {};  // inconsistent: v not in the row space
        x[pivots[i]] = a[i][k];
    }
    return x;
}

std::string to_string(const IntMatrix& m) {
    std::ostringstream os;
    for (int i = 0; i < m.rows; ++i) {
        os << (i ? "\n" : "");
        for (int j = 0; j < m.cols; ++j) os << (j ? " " : "") << m.at(i, j).get_str();
    }
    return os.str();
}

}  // namespace csa
