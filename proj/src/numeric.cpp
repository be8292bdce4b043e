#include "torbord/numeric.hpp"

namespace torbord {

Int binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i; // always exact: r is C(n-k+i, i) after this step
    }
    return r;
}

Int factorial(int n) {
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

Int multinomial(int n, const std::vector<int>& ks) {
    Int r = factorial(n);
    int used = 0;
    for (int k : ks) {
        r /= factorial(k);
        used += k;
    }
    if (used > n) fail(errc::range, "multinomial: blocks exceed n");
    r /= factorial(n - used);
    return r;
}

Matrix identity_matrix(int n) {
    Matrix e(n, std::vector<Int>(n, 0));
    for (int i = 0; i < n; ++i) e[i][i] = 1;
    return e;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    const int n = static_cast<int>(a.size());
    const int p = static_cast<int>(b.size());
    const int q = p ? static_cast<int>(b[0].size()) : 0;
    Matrix c(n, std::vector<Int>(q, 0));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < p; ++k) {
            if (a[i][k] == 0) continue;
            for (int j = 0; j < q; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

bool is_identity(const Matrix& a) {
    const int n = static_cast<int>(a.size());
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(a[i].size()) != n) return false;
        for (int j = 0; j < n; ++j)
            if (a[i][j] != (i == j ? 1 : 0)) return false;
    }
    return true;
}

Int det_bareiss(Matrix a) {
    const int n = static_cast<int>(a.size());
    if (n == 0) return 1;
    Int sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[i][k] != 0) { pivot = i; break; }
            if (pivot < 0) return 0;
            std::swap(a[k], a[pivot]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev; // exact division
            }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

} // namespace torbord
