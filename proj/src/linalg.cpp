#include "freeid/linalg.hpp"

#include "freeid/errors.hpp"

#include <utility>

namespace freeid {

namespace {

void require_square(std::size_t rows, std::size_t cols) {
    if (rows != cols) throw DomainError("matrix must be square");
}

// lcm of the denominators in a row, so that row * scale is integral
BigInt row_scale(const std::vector<Rational>& row) {
    BigInt l = 1;
    for (const auto& x : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    return l;
}

}  // namespace

BigInt bareiss_determinant(IntMatrix a) {
    const std::size_t n = a.size();
    for (const auto& row : a) require_square(n, row.size());
    if (n == 0) return 1;
    int sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

Rational determinant(const RationalMatrix& a) {
    IntMatrix m;
    Rational scale = 1;
    for (const auto& row : a) {
        BigInt l = row_scale(row);
        scale /= l;
        std::vector<BigInt> r;
        for (const auto& x : row) {
            Rational y = x * l;
            r.push_back(y.get_num());
        }
        m.push_back(std::move(r));
    }
    Rational d(bareiss_determinant(std::move(m)));
    return d * scale;
}

std::vector<Rational> solve_exact(const RationalMatrix& a, const std::vector<Rational>& b) {
    const std::size_t n = a.size();
    if (b.size() != n) throw DomainError("right-hand side has the wrong length");
    // integer augmented matrix
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        require_square(n, a[i].size());
        std::vector<Rational> row = a[i];
        row.push_back(b[i]);
        BigInt l = row_scale(row);
        for (const auto& x : row) m[i].push_back(Rational(x * l).get_num());
    }
    // Bareiss forward elimination
    BigInt prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) throw StructureError("singular linear system");
            std::swap(m[k], m[p]);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j <= n; ++j) {
                m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    // back substitution over the rationals
    std::vector<Rational> x(n);
    for (std::size_t i = n; i-- > 0;) {
        Rational acc(m[i][n]);
        for (std::size_t j = i + 1; j < n; ++j) acc -= Rational(m[i][j]) * x[j];
        x[i] = acc / Rational(m[i][i]);
    }
    return x;
}

}  // namespace freeid
