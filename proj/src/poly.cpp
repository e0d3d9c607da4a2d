#include "csa/poly.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace csa {

Poly Poly::constant(int nvars, const Rat& c) {
    Poly p(nvars);
    if (c != 0) p.terms_[std::vector<int>(nvars, 0)] = c;
    return p;
}

Poly Poly::variable(int nvars, int i) {
    Poly p(nvars);
    std::vector<int> e(nvars, 0);
    e[i] = 1;
    p.terms_[e] = 1;
    return p;
}

Poly Poly::linear_form(const std::vector<Int>& coeffs) {
    Poly p(static_cast<int>(coeffs.size()));
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        std::vector<int> e(coeffs.size(), 0);
        e[i] = 1;
        p.terms_[e] = Rat(coeffs[i]);
    }
    return p;
}

void Poly::add_term(const std::vector<int>& exps, const Rat& c) {
    if (static_cast<int>(exps.size()) != nvars_) throw std::invalid_argument("add_term: bad arity");
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        if (c != 0) terms_[exps] = c;
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

Poly Poly::operator-() const {
    Poly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    Poly r(nvars_);
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            std::vector<int> e(nvars_);
            for (int i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
            r.add_term(e, c1 * c2);
        }
    }
    return r;
}

Poly Poly::operator*(const Rat& c) const {
    Poly r(nvars_);
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_[e] = k * c;
    return r;
}

Poly Poly::pow(int e) const {
    Poly r = Poly::constant(nvars_, 1);
    for (int i = 0; i < e; ++i) r = r * (*this);
    return r;
}

int Poly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

bool Poly::is_homogeneous() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int t = std::accumulate(e.begin(), e.end(), 0);
        if (d < 0) d = t;
        else if (t != d) return false;
    }
    return true;
}

Poly Poly::substitute(int i, const Poly& replacement) const {
    Poly r(replacement.nvars());
    for (const auto& [e, c] : terms_) {
        Poly term = Poly::constant(replacement.nvars(), c);
        for (int v = 0; v < nvars_; ++v) {
            if (e[v] == 0) continue;
            Poly base = (v == i) ? replacement : Poly::variable(replacement.nvars(), v);
            term = term * base.pow(e[v]);
        }
        r = r + term;
    }
    return r;
}

int Poly::order_along(const std::vector<Int>& alpha) const {
    if (is_zero()) return 1 << 20;
    int j = -1;
    for (size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] != 0) {
            j = static_cast<int>(i);
            break;
        }
    }
    if (j < 0) throw std::invalid_argument("order_along: zero form");
    // Work in nvars_+1 variables with t = x_{nvars_} standing for alpha:
    // substitute x_j := (t - sum_{i != j} alpha_i x_i) / alpha_j, then
    // alpha^m | f exactly when every surviving term has t-degree >= m.
    Poly repl(nvars_ + 1);
    {
        std::vector<int> e(nvars_ + 1, 0);
        e[nvars_] = 1;
        repl.terms_[e] = Rat(1) / Rat(alpha[j]);
    }
    for (int i = 0; i < nvars_; ++i) {
        if (i == j || alpha[i] == 0) continue;
        std::vector<int> e(nvars_ + 1, 0);
        e[i] = 1;
        repl.add_term(e, -Rat(alpha[i]) / Rat(alpha[j]));
    }
    Poly lifted(nvars_ + 1);
    for (const auto& [e, c] : terms_) {
        std::vector<int> e2(e);
        e2.push_back(0);
        lifted.add_term(e2, c);
    }
    Poly sub = lifted.substitute(j, repl);
    int ord = 1 << 20;
    for (const auto& [e, c] : sub.terms()) ord = std::min(ord, e[nvars_]);
    return ord;
}

bool Poly::is_constant_multiple_of(const Poly& o) const {
    if (is_zero() || o.is_zero()) return false;
    if (terms_.size() != o.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    Rat c = it->second / jt->second;
    for (; it != terms_.end(); ++it, ++jt) {
        if (it->first != jt->first) return false;
        if (it->second != c * jt->second) return false;
    }
    return true;
}

std::string Poly::str(const std::vector<std::string>& var_names) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        os << (first ? "" : " + ") << c.get_str();
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            os << "*";
            if (static_cast<int>(var_names.size()) > i) os << var_names[i];
            else os << "x" << (i + 1);
            if (e[i] > 1) os << "^" << e[i];
        }
        first = false;
    }
    return os.str();
}

Poly poly_determinant(const std::vector<std::vector<Poly>>& m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) throw std::invalid_argument("poly_determinant: empty matrix");
    const int nv = m[0][0].nvars();
    if (n == 1) return m[0][0];
    Poly det(nv);
    std::vector<std::vector<Poly>> minor(n - 1, std::vector<Poly>(n - 1, Poly(nv)));
    for (int k = 0; k < n; ++k) {
        if (m[0][k].is_zero()) continue;
        for (int i = 1; i < n; ++i) {
            int jj = 0;
            for (int j = 0; j < n; ++j) {
                if (j == k) continue;
                minor[i - 1][jj++] = m[i][j];
            }
        }
        Poly cof = m[0][k] * poly_determinant(minor);
        det = (k % 2 == 0) ? det + cof : det - cof;
    }
    return det;
}

}  // namespace csa
