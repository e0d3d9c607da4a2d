#ifndef CSA_EXACT_HPP
#define CSA_EXACT_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace csa {

// All arithmetic in this project is exact. Int/Rat wrap GMP's
// arbitrary-precision types; no floating point anywhere.
using Int = mpz_class;
using Rat = mpq_class;

/// Row-major dense matrix of arbitrary-precision integers.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Int> entries;  // rows*cols, row-major

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), entries(static_cast<size_t>(r) * c) {}

    Int& at(int r, int c) { return entries[static_cast<size_t>(r) * cols + c]; }
    const Int& at(int r, int c) const { return entries[static_cast<size_t>(r) * cols + c]; }

    static IntMatrix identity(int n);
    static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);

    std::vector<Int> row(int r) const;
    IntMatrix transposed() const;

    bool operator==(const IntMatrix&) const = default;
};

/// Divide v by the gcd of its entries and flip signs so the first nonzero
/// entry is positive. The zero vector is returned unchanged.
std::vector<Int> primitive_vector(std::vector<Int> v);

bool is_zero_vector(const std::vector<Int>& v);

/// Exact rank over the rationals (fraction-free integer elimination).
int rank(const IntMatrix& m);

/// Unique reduced row-echelon basis of the row space, scaled to primitive
/// integer rows (gcd 1, first nonzero entry positive). Zero rows dropped.
/// Equal row spaces give bit-identical output.
IntMatrix canonical_row_space(const IntMatrix& m);

/// Primitive integer basis of the rational null space; deterministic
/// (built from the RREF free columns). rank(m) + result.rows == m.cols.
IntMatrix kernel_basis(const IntMatrix& m);

/// Exact determinant via Bareiss fraction-free elimination.
/// Throws std::invalid_argument on non-square input.
Int determinant(const IntMatrix& m);

/// True iff v lies in the row space spanned by `basis` (any row set).
bool in_row_space(const IntMatrix& basis, const std::vector<Int>& v);

/// Fast membership test for a basis in reduced row-echelon shape (the
/// output of canonical_row_space): the combination coefficients are read
/// off the pivot columns directly.
bool in_row_space_rref(const IntMatrix& rref_basis, const std::vector<Int>& v);

/// Solve basis^T * x = v over Q, i.e. express v as a rational combination of
/// the basis rows. Returns empty vector when v is not in the row space.
/// `basis` must have independent rows.
std::vector<Rat> coordinates_in_row_space(const IntMatrix& basis, const std::vector<Int>& v);

std::string to_string(const IntMatrix& m);

}  // namespace csa

#endif
