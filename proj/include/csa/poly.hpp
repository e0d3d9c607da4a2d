#ifndef CSA_POLY_HPP
#define CSA_POLY_HPP

#include <map>
#include <string>
#include <vector>

#include "csa/exact.hpp"

namespace csa {

/// Sparse multivariate polynomial with exact rational coefficients.
/// Terms are keyed by exponent vectors of fixed length nvars.
class Poly {
  public:
    Poly() = default;
    explicit Poly(int nvars) : nvars_(nvars) {}

    static Poly constant(int nvars, const Rat& c);
    static Poly variable(int nvars, int i);
    /// Linear form sum_i coeffs[i] * x_i.
    static Poly linear_form(const std::vector<Int>& coeffs);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::vector<int>, Rat>& terms() const { return terms_; }

    void add_term(const std::vector<int>& exps, const Rat& c);

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rat& c) const;
    bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

    Poly pow(int e) const;

    int total_degree() const;  // -1 for the zero polynomial
    /// True when every term has the same total degree (zero counts as homogeneous).
    bool is_homogeneous() const;

    /// Largest m with alpha^m dividing this polynomial, where alpha is a
    /// nonzero linear form. Returns a large sentinel (1<<20) for zero input.
    int order_along(const std::vector<Int>& alpha) const;

    /// Substitute x_i := replacement (a polynomial in the same variables).
    Poly substitute(int i, const Poly& replacement) const;

    /// Coefficient ratio check: *this == c * o for some nonzero rational c.
    bool is_constant_multiple_of(const Poly& o) const;

    std::string str(const std::vector<std::string>& var_names = {}) const;

  private:
    int nvars_ = 0;
    std::map<std::vector<int>, Rat> terms_;
};

/// Determinant of a square polynomial matrix by cofactor expansion.
Poly poly_determinant(const std::vector<std::vector<Poly>>& m);

}  // namespace csa

#endif
