#include "csa/rank2.hpp"

#include <algorithm>
#include <stdexcept>

#include "csa/poly.hpp"

namespace csa {

Rank2MultiArrangement project_to_rank2(const Arrangement& a, const Multiplicity& mu) {
    Support sup = support(a, mu);
    IntMatrix basis = canonical_row_space(sup.arr.normal_matrix());
    if (basis.rows > 2) throw std::invalid_argument("project_to_rank2: support rank > 2");
    Rank2MultiArrangement out;
    for (int i = 0; i < sup.arr.size(); ++i) {
        auto coords = coordinates_in_row_space(basis, sup.arr.hyperplanes[i].normal);
        Int l = 1;
        for (const auto& q : coords) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
        std::vector<Int> v(2, 0);
        for (size_t j = 0; j < coords.size(); ++j) {
            Rat scaled = coords[j] * Rat(l);
            v[j] = scaled.get_num();
        }
        v = primitive_vector(std::move(v));
        out.forms.push_back({v[0], v[1]});
        out.mults.push_back(sup.mu[i]);
    }
    return out;
}

ExpPair wakamiko_exponents(long k1, long k2, long k3) {
    if (k1 < 0 || k2 < 0 || k3 < 0) throw std::invalid_argument("wakamiko: negative multiplicity");
    long s[3] = {k1, k2, k3};
    std::sort(s, s + 3);
    long total = s[0] + s[1] + s[2];
    if (s[2] >= s[0] + s[1] - 1) {
        long a = s[0] + s[1], b = s[2];
        return {std::min(a, b), std::max(a, b)};
    }
    return {total / 2, total - total / 2};
}

namespace {

// Expansion of the degree-d monomial basis of K[x,y] in coordinates
// (alpha, beta) where alpha = a x + b y and beta completes it to a basis.
// Returns M[i] = x^(d-i) y^i as a 2-variable polynomial in (alpha, beta).
std::vector<Poly> monomials_in_form_frame(const Int& a, const Int& b, int d) {
    Poly alpha = Poly::variable(2, 0);
    Poly beta = Poly::variable(2, 1);
    Poly x(2), y(2);
    if (b != 0) {
        // beta = x, y = (alpha - a*beta)/b
        x = beta;
        y = (alpha - beta * Rat(a)) * (Rat(1) / Rat(b));
    } else {
        // alpha = a x: x = alpha/a, beta = y
        x = alpha * (Rat(1) / Rat(a));
        y = beta;
    }
    std::vector<Poly> out;
    out.reserve(d + 1);
    for (int i = 0; i <= d; ++i) out.push_back(x.pow(d - i) * y.pow(i));
    return out;
}

// Solution space of the degree-d membership system, one primitive integer
// row per basis derivation; columns are (p_0..p_d, q_0..q_d).
IntMatrix derivation_space(const Rank2MultiArrangement& m, int d) {
    const int nunk = 2 * (d + 1);
    std::vector<std::vector<Rat>> rows;
    for (size_t f = 0; f < m.forms.size(); ++f) {
        const Int& a = m.forms[f][0];
        const Int& b = m.forms[f][1];
        const long mult = m.mults[f];
        auto mono = monomials_in_form_frame(a, b, d);
        const int ncon = static_cast<int>(std::min<long>(mult, d + 1));
        // Coefficient of alpha^k beta^(d-k) in a*p + b*q must vanish for k < mult.
        for (int k = 0; k < ncon; ++k) {
            std::vector<int> key = {k, d - k};
            std::vector<Rat> row(nunk, Rat(0));
            for (int i = 0; i <= d; ++i) {
                auto it = mono[i].terms().find(key);
                if (it == mono[i].terms().end()) continue;
                row[i] = Rat(a) * it->second;
                row[d + 1 + i] = Rat(b) * it->second;
            }
            rows.push_back(std::move(row));
        }
    }
    // Clear denominators row by row and take the exact kernel.
    IntMatrix sys(static_cast<int>(rows.size()), nunk);
    for (int i = 0; i < sys.rows; ++i) {
        Int l = 1;
        for (const auto& q : rows[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
        for (int j = 0; j < nunk; ++j) {
            Rat scaled = rows[i][j] * Rat(l);
            sys.at(i, j) = scaled.get_num();
        }
    }
    return kernel_basis(sys);
}

Poly poly_from_coeffs(const std::vector<Int>& c, int offset, int d) {
    Poly p(2);
    for (int i = 0; i <= d; ++i) {
        if (c[offset + i] == 0) continue;
        p.add_term({d - i, i}, Rat(c[offset + i]));
    }
    return p;
}

}  // namespace

ExpPair rank2_exponents_search(const Rank2MultiArrangement& m) {
    const long total = mult_sum(m.mults);
    if (m.forms.empty()) return {0, 0};
    if (m.forms.size() == 1) return {0, total};

    long e1 = -1;
    IntMatrix ker1;
    for (long d = 0; d <= total; ++d) {
        ker1 = derivation_space(m, static_cast<int>(d));
        if (ker1.rows > 0) {
            e1 = d;
            break;
        }
    }
    if (e1 < 0) throw std::runtime_error("rank2 search: no derivation found");
    const long e2 = total - e1;

    // Verify a Saito partner at degree e2: some solution theta2 with
    // det(theta1, theta2) = c * prod forms^mult, c != 0.
    Poly p1 = poly_from_coeffs(ker1.row(0), 0, static_cast<int>(e1));
    Poly q1 = poly_from_coeffs(ker1.row(0), static_cast<int>(e1) + 1, static_cast<int>(e1));
    IntMatrix ker2 = (e2 == e1) ? ker1 : derivation_space(m, static_cast<int>(e2));
    Poly q_def = Poly::constant(2, 1);
    for (size_t f = 0; f < m.forms.size(); ++f)
        q_def = q_def * Poly::linear_form({m.forms[f][0], m.forms[f][1]}).pow(
                            static_cast<int>(m.mults[f]));
    for (int r = 0; r < ker2.rows; ++r) {
        Poly p2 = poly_from_coeffs(ker2.row(r), 0, static_cast<int>(e2));
        Poly q2 = poly_from_coeffs(ker2.row(r), static_cast<int>(e2) + 1, static_cast<int>(e2));
        Poly det = p1 * q2 - q1 * p2;
        if (det.is_zero()) continue;
        if (det.is_constant_multiple_of(q_def)) return {e1, e2};
    }
    throw std::runtime_error("rank2 search: Saito partner not found");
}

ExpPair rank2_exponents(const Rank2MultiArrangement& m) {
    // Drop any residual zero multiplicities before dispatching.
    Rank2MultiArrangement s;
    for (size_t i = 0; i < m.forms.size(); ++i) {
        if (m.mults[i] <= 0) continue;
        s.forms.push_back(m.forms[i]);
        s.mults.push_back(m.mults[i]);
    }
    switch (s.forms.size()) {
        case 0: return {0, 0};
        case 1: return {0, s.mults[0]};
        case 2: return {std::min(s.mults[0], s.mults[1]), std::max(s.mults[0], s.mults[1])};
        case 3: return wakamiko_exponents(s.mults[0], s.mults[1], s.mults[2]);
        default: return rank2_exponents_search(s);
    }
}

long shared_exponent(const ExpPair& full, const ExpPair& deleted) {
    for (long s : {full.e1, full.e2}) {
        long b = (s == full.e1) ? full.e2 : full.e1;
        if (b < 1) continue;
        ExpPair expect{std::min(s, b - 1), std::max(s, b - 1)};
        if (expect == deleted) return s;
    }
    throw std::runtime_error("shared_exponent: pairs not related by a deletion step");
}

long euler_multiplicity(const Arrangement& a, const Multiplicity& mu, int h0, const Flat& x) {
    if (x.rank != 2) throw std::invalid_argument("euler_multiplicity: flat must have rank 2");
    if (!std::binary_search(x.closure.begin(), x.closure.end(), h0))
        throw std::invalid_argument("euler_multiplicity: flat does not contain h0");
    if (h0 < 0 || h0 >= a.size() || mu[h0] < 1)
        throw std::invalid_argument("euler_multiplicity: mu(h0) must be >= 1");
    auto [loc, loc_mu] = localization(a, mu, x);
    ExpPair full = rank2_exponents(project_to_rank2(loc, loc_mu));
    Multiplicity del_mu = loc_mu;
    for (size_t i = 0; i < x.closure.size(); ++i)
        if (x.closure[i] == h0) del_mu[i] -= 1;
    ExpPair del = rank2_exponents(project_to_rank2(loc, del_mu));
    return shared_exponent(full, del);
}

}  // namespace csa
