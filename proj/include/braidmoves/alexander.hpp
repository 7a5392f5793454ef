#pragma once

#include <cassert>
#include <vector>

#include "braidmoves/braid_word.hpp"
#include "braidmoves/laurent.hpp"

namespace braidmoves {

namespace detail {

using PolyMatrix = std::vector<std::vector<LaurentPoly>>;

inline PolyMatrix poly_identity(int m) {
    PolyMatrix id(m, std::vector<LaurentPoly>(m));
    for (int i = 0; i < m; ++i)
        id[i][i] = LaurentPoly::constant(1);
    return id;
}

inline PolyMatrix poly_mul(const PolyMatrix& a, const PolyMatrix& b) {
    int m = static_cast<int>(a.size());
    PolyMatrix r(m, std::vector<LaurentPoly>(m));
    for (int i = 0; i < m; ++i)
        for (int k = 0; k < m; ++k) {
            if (a[i][k].is_zero())
                continue;
            for (int j = 0; j < m; ++j) {
                if (b[k][j].is_zero())
                    continue;
                r[i][j] = r[i][j] + a[i][k] * b[k][j];
            }
        }
    return r;
}

// Reduced Burau image of sigma_i^{+-1} in B_n, an (n-1)x(n-1) matrix.
inline PolyMatrix reduced_burau_letter(int n, int g) {
    const int m = n - 1;
    PolyMatrix a = poly_identity(m);
    int i = std::abs(g);
    const LaurentPoly one = LaurentPoly::constant(1);
    const LaurentPoly t = LaurentPoly::monomial(1, 1);
    const LaurentPoly mt = LaurentPoly::monomial(-1, 1);
    const LaurentPoly tinv = LaurentPoly::monomial(1, -1);
    const LaurentPoly mtinv = LaurentPoly::monomial(-1, -1);
    // row/col indices are 0-based: generator i touches rows i-2, i-1, i.
    if (g > 0) {
        if (i - 2 >= 0)
            a[i - 2][i - 1] = t;
        a[i - 1][i - 1] = mt;
        if (i <= m - 1)
            a[i][i - 1] = one;
    } else {
        if (i - 2 >= 0)
            a[i - 2][i - 1] = one;
        a[i - 1][i - 1] = mtinv;
        if (i <= m - 1)
            a[i][i - 1] = tinv;
    }
    return a;
}

// Determinant by Laplace expansion with memoization on column masks;
// matrices here are at most 7x7.
inline LaurentPoly poly_det(const PolyMatrix& a) {
    int m = static_cast<int>(a.size());
    if (m == 0)
        return LaurentPoly::constant(1);
    std::vector<LaurentPoly> memo(static_cast<std::size_t>(1) << m);
    std::vector<char> known(static_cast<std::size_t>(1) << m, 0);
    // det of the submatrix using rows [popcount(mask)..m) and columns not in mask
    auto rec = [&](auto&& self, unsigned mask) -> LaurentPoly {
        if (known[mask])
            return memo[mask];
        int row = __builtin_popcount(mask);
        LaurentPoly det;
        if (row == m) {
            det = LaurentPoly::constant(1);
        } else {
            int sign = 1;
            for (int j = 0; j < m; ++j) {
                if (mask & (1u << j))
                    continue;
                if (!a[row][j].is_zero()) {
                    LaurentPoly sub = self(self, mask | (1u << j));
                    LaurentPoly term = a[row][j] * sub;
                    det = sign > 0 ? det + term : det - term;
                }
                sign = -sign;
            }
        }
        known[mask] = 1;
        memo[mask] = det;
        return det;
    };
    return rec(rec, 0u);
}

}  // namespace detail

// Reduced Burau matrix of the whole word.
inline detail::PolyMatrix reduced_burau(const BraidWord& b) {
    detail::PolyMatrix m = detail::poly_identity(b.strands() - 1);
    for (int g : b.letters())
        m = detail::poly_mul(m, detail::reduced_burau_letter(b.strands(), g));
    return m;
}

// Alexander polynomial of the braid closure via reduced Burau:
//   det(rho(b) - I) = unit * (1 + t + ... + t^{n-1}) * Delta_L(t),
// normalized so the lowest degree is 0 and the leading coefficient is
// positive. Split and other annihilated closures give 0; the empty braid on
// one strand gives 1.
inline LaurentPoly alexander_poly(const BraidWord& b) {
    const int n = b.strands();
    if (n == 1)
        return LaurentPoly::constant(1);
    detail::PolyMatrix m = reduced_burau(b);
    for (int i = 0; i < n - 1; ++i)
        m[i][i] = m[i][i] - LaurentPoly::constant(1);
    LaurentPoly det = detail::poly_det(m);
    if (det.is_zero())
        return LaurentPoly();
    LaurentPoly quotient = det.divided_by(LaurentPoly::ones(n));
    return quotient.normalized();
}

}  // namespace braidmoves
