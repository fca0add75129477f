#include "critgroup/exact_linalg.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "critgroup/errors.hpp"

namespace critgroup {

Int AbelianGroupStructure::torsion_order() const {
    Int o = 1;
    for (const Int& t : torsion) o *= t;
    return o;
}

std::string AbelianGroupStructure::to_string() const {
    if (is_trivial()) return "0";
    std::ostringstream out;
    bool first = true;
    auto sep = [&]() {
        if (!first) out << " ⊕ ";
        first = false;
    };
    if (free_rank == 1) {
        sep();
        out << "Z";
    } else if (free_rank > 1) {
        sep();
        out << "Z^" << free_rank;
    }
    for (std::size_t i = 0; i < torsion.size();) {
        std::size_t j = i;
        while (j < torsion.size() && torsion[j] == torsion[i]) ++j;
        sep();
        if (j - i == 1)
            out << "Z/" << torsion[i].get_str();
        else
            out << "(Z/" << torsion[i].get_str() << ")^" << (j - i);
        i = j;
    }
    return out.str();
}

AbelianGroupStructure AbelianGroupStructure::from_invariant_factors(
    const std::vector<Int>& factors) {
    AbelianGroupStructure g;
    for (const Int& f : factors) {
        if (f == 0)
            ++g.free_rank;
        else if (abs(f) != 1)
            g.torsion.push_back(abs(f));
    }
    return g;
}

namespace {

// Position of the minimal-absolute-value nonzero entry of b in the submatrix
// starting at (t, t); ties broken by lowest (row, col).
std::optional<std::pair<std::size_t, std::size_t>> find_pivot(const IntMatrix& b, std::size_t t) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Int best_abs;
    for (std::size_t i = t; i < b.rows(); ++i)
        for (std::size_t j = t; j < b.cols(); ++j) {
            if (b(i, j) == 0) continue;
            Int a = abs(b(i, j));
            if (!best || a < best_abs) {
                best = {i, j};
                best_abs = a;
            }
        }
    return best;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
    if (a.empty()) throw std::invalid_argument("smith_normal_form: empty matrix");
    const std::size_t m = a.rows(), n = a.cols(), k = std::min(m, n);

    IntMatrix b = a;
    IntMatrix u = IntMatrix::identity(m);
    IntMatrix v = IntMatrix::identity(n);

    auto swap_rows = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < n; ++c) swap(b(i, c), b(j, c));
        for (std::size_t c = 0; c < m; ++c) swap(u(i, c), u(j, c));
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < m; ++r) swap(b(r, i), b(r, j));
        for (std::size_t r = 0; r < n; ++r) swap(v(r, i), v(r, j));
    };
    auto add_row = [&](std::size_t dst, std::size_t src, const Int& c) {
        for (std::size_t j = 0; j < n; ++j) b(dst, j) += c * b(src, j);
        for (std::size_t j = 0; j < m; ++j) u(dst, j) += c * u(src, j);
    };
    auto add_col = [&](std::size_t dst, std::size_t src, const Int& c) {
        for (std::size_t i = 0; i < m; ++i) b(i, dst) += c * b(i, src);
        for (std::size_t i = 0; i < n; ++i) v(i, dst) += c * v(i, src);
    };
    auto negate_row = [&](std::size_t i) {
        for (std::size_t j = 0; j < n; ++j) b(i, j) = -b(i, j);
        for (std::size_t j = 0; j < m; ++j) u(i, j) = -u(i, j);
    };

    for (std::size_t t = 0; t < k; ++t) {
        if (!find_pivot(b, t)) break;  // remaining submatrix is zero
        for (;;) {
            auto pos = find_pivot(b, t);
            swap_rows(t, pos->first);
            swap_cols(t, pos->second);

            bool reduced = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (b(i, t) == 0) continue;
                Int q = b(i, t) / b(t, t);  // truncated: |remainder| < |pivot|
                add_row(i, t, -q);
                if (b(i, t) != 0) reduced = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (b(t, j) == 0) continue;
                Int q = b(t, j) / b(t, t);
                add_col(j, t, -q);
                if (b(t, j) != 0) reduced = false;
            }
            if (!reduced) continue;

            // Pivot must divide the rest of the submatrix; if not, pull the
            // offending row up and keep reducing.
            bool fixed = false;
            for (std::size_t i = t + 1; i < m && !fixed; ++i)
                for (std::size_t j = t + 1; j < n && !fixed; ++j)
                    if (!divides(b(t, t), b(i, j))) {
                        add_row(t, i, 1);
                        fixed = true;
                    }
            if (!fixed) break;
        }
        if (b(t, t) < 0) negate_row(t);
    }

    SmithDecomposition out;
    out.diagonal.resize(k);
    for (std::size_t t = 0; t < k; ++t) {
        out.diagonal[t] = b(t, t);
        if (b(t, t) != 0) ++out.rank;
    }
    out.u = std::move(u);
    out.v = std::move(v);
    return out;
}

AbelianGroupStructure cokernel_structure(const IntMatrix& a) {
    if (!a.is_square()) throw std::invalid_argument("cokernel_structure: matrix must be square");
    if (a.empty()) return {};
    SmithDecomposition snf = smith_normal_form(a);
    AbelianGroupStructure g = AbelianGroupStructure::from_invariant_factors(snf.diagonal);
    g.free_rank = a.rows() - snf.rank;
    return g;
}

std::vector<Int> char_poly(const IntMatrix& a) {
    if (!a.is_square()) throw std::invalid_argument("char_poly: matrix must be square");
    const std::size_t n = a.rows();
    std::vector<Int> c(n + 1);
    c[n] = 1;
    // Faddeev-LeVerrier; each division by k is exact over Z.
    IntMatrix mk = IntMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        IntMatrix am = a * mk;
        Int tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
        if (!divides(Int(k), tr))
            throw InternalConsistencyError("char_poly: inexact trace division");
        c[n - k] = -exact_div(tr, Int(k));
        if (k < n) {
            mk = std::move(am);
            for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k];
        }
    }
    return c;
}

namespace {

// Fraction-free (Bareiss) elimination. Returns the number of pivots; when
// det_out is given the input must be square and *det_out receives det(a).
std::size_t bareiss(IntMatrix b, Int* det_out) {
    const std::size_t m = b.rows(), n = b.cols();
    Int prev = 1;
    int sign = 1;
    std::size_t r = 0;  // current pivot row/col position
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t piv = m;
        for (std::size_t i = r; i < m; ++i)
            if (b(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv == m) {
            if (det_out) {
                *det_out = 0;
                return r;
            }
            continue;
        }
        if (piv != r) {
            for (std::size_t j = 0; j < n; ++j) swap(b(piv, j), b(r, j));
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < m; ++i) {
            for (std::size_t j = c + 1; j < n; ++j)
                b(i, j) = exact_div(b(r, c) * b(i, j) - b(i, c) * b(r, j), prev);
            b(i, c) = 0;
        }
        prev = b(r, c);
        ++r;
    }
    if (det_out) *det_out = (r == m) ? Int(sign * prev) : Int(0);
    return r;
}

}  // namespace

std::size_t rank(const IntMatrix& a) {
    if (a.empty()) return 0;
    return bareiss(a, nullptr);
}

Int determinant(const IntMatrix& a) {
    if (!a.is_square()) throw std::invalid_argument("determinant: matrix must be square");
    if (a.empty()) return 1;
    Int det;
    bareiss(a, &det);
    return det;
}

RatMatrix rat_inverse(const IntMatrix& a) {
    if (!a.is_square()) throw std::invalid_argument("rat_inverse: matrix must be square");
    const std::size_t n = a.rows();
    RatMatrix b(a);
    RatMatrix inv = RatMatrix::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = n;
        for (std::size_t i = c; i < n; ++i)
            if (b(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv == n) throw SingularMatrixError("rat_inverse: singular matrix");
        if (piv != c)
            for (std::size_t j = 0; j < n; ++j) {
                swap(b(piv, j), b(c, j));
                swap(inv(piv, j), inv(c, j));
            }
        Rat d = b(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            b(c, j) /= d;
            inv(c, j) /= d;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || b(i, c) == 0) continue;
            Rat f = b(i, c);
            for (std::size_t j = 0; j < n; ++j) {
                b(i, j) -= f * b(c, j);
                inv(i, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

}  // namespace critgroup
