#include "torbord/symfun.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <sstream>

namespace torbord {

Partition::Partition(std::vector<int> parts) {
    for (int p : parts) {
        if (p < 0) fail(errc::range, "negative partition part");
        if (p > 0) parts_.push_back(p);
    }
    std::sort(parts_.rbegin(), parts_.rend());
    for (int p : parts_) weight_ += p;
}

std::vector<int> Partition::multiplicities() const {
    std::vector<int> d(parts_.empty() ? 0 : parts_.front(), 0);
    for (int p : parts_) ++d[p - 1];
    return d;
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    return os.str();
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) continue;
        std::size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size() || v <= 0) fail(errc::parse, "bad partition part '" + tok + "'");
        parts.push_back(v);
    }
    if (parts.empty()) fail(errc::parse, "empty partition");
    return Partition(std::move(parts));
}

bool Partition::operator<(const Partition& o) const {
    if (weight_ != o.weight_) return weight_ < o.weight_;
    return parts_ < o.parts_;
}

std::vector<Partition> partitions(int n) {
    if (n < 0 || n > 30) fail(errc::range, "partitions: need 0 <= n <= 30");
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int maxPart) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, maxPart); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

namespace {

// Gale-Ryser feasibility: a 0-1 matrix with the given (descending) row and
// column sums exists iff the weights agree and every prefix of the column
// sums is dominated by sum_j min(r_j, k).
bool gale_ryser_feasible(const std::vector<int>& rows_desc, const std::vector<int>& cols_desc) {
    long long wr = 0, wc = 0;
    for (int r : rows_desc) wr += r;
    for (int c : cols_desc) wc += c;
    if (wr != wc) return false;
    long long prefix = 0;
    for (std::size_t k = 1; k <= cols_desc.size(); ++k) {
        prefix += cols_desc[k - 1];
        long long cap = 0;
        for (int r : rows_desc) cap += std::min<long long>(r, k);
        if (prefix > cap) return false;
    }
    return true;
}

Int count_matrices(std::vector<int> rows, const std::vector<int>& cols, std::size_t col_idx,
                   std::map<std::pair<std::vector<int>, std::size_t>, Int>& memo) {
    std::sort(rows.rbegin(), rows.rend());
    while (!rows.empty() && rows.back() == 0) rows.pop_back();
    if (col_idx == cols.size()) return rows.empty() ? 1 : 0;
    {
        std::vector<int> rest(cols.begin() + col_idx, cols.end());
        if (!gale_ryser_feasible(rows, rest)) return 0;
    }
    auto key = std::make_pair(rows, col_idx);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    const int need = cols[col_idx];
    Int total = 0;
    const int n = static_cast<int>(rows.size());
    // choose the subset of rows receiving a 1 in this column
    std::vector<int> pick;
    std::function<void(int, int)> choose = [&](int from, int left) {
        if (left == 0) {
            std::vector<int> next = rows;
            for (int i : pick) --next[i];
            total += count_matrices(std::move(next), cols, col_idx + 1, memo);
            return;
        }
        for (int i = from; i <= n - left; ++i) {
            if (rows[i] == 0) continue;
            // identical remaining sums are interchangeable only as distinct
            // rows of the matrix, so every subset counts
            pick.push_back(i);
            choose(i + 1, left - 1);
            pick.pop_back();
        }
    };
    if (need == 0)
        total = count_matrices(rows, cols, col_idx + 1, memo);
    else
        choose(0, need);
    memo[key] = total;
    return total;
}

} // namespace

Int transition_M(const Partition& lambda, const Partition& mu) {
    if (lambda.weight() != mu.weight()) return 0;
    static std::map<std::pair<std::vector<int>, std::vector<int>>, Int> cache;
    static std::mutex cache_mutex;
    const auto key = std::make_pair(lambda.parts(), mu.parts());
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    std::map<std::pair<std::vector<int>, std::size_t>, Int> memo;
    Int result = count_matrices(lambda.parts(), mu.parts(), 0, memo);
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(key, result);
    return result;
}

Int stirling2(int n, int k) {
    if (n < 0 || n > 30 || k < 0 || k > n) fail(errc::range, "stirling2: need 0 <= k <= n <= 30");
    static std::vector<std::vector<Int>> table = [] {
        std::vector<std::vector<Int>> t(31);
        t[0] = {1};
        for (int i = 1; i <= 30; ++i) {
            t[i].assign(i + 1, 0);
            for (int j = 1; j <= i; ++j) {
                if (j < i) t[i][j] = j * t[i - 1][j];
                t[i][j] += t[i - 1][j - 1];
            }
        }
        return t;
    }();
    return table[n][k];
}

Matrix matrix_A(int m) {
    if (m < 2) fail(errc::m_too_small, "matrix_A: m >= 2");
    Matrix a(m, std::vector<Int>(m, 0));
    for (int k = 0; k < m; ++k)
        for (int j = 0; j <= k; ++j) {
            Int v = binomial(m - j, k - j);
            a[k][j] = ((m - k - 1) % 2 == 0) ? v : -v;
        }
    return a;
}

Matrix matrix_B(int m) {
    if (m < 2) fail(errc::m_too_small, "matrix_B: m >= 2");
    Matrix b(m, std::vector<Int>(m, 0));
    for (int k = 0; k < m; ++k)
        for (int j = k; j < m; ++j) {
            Int v = binomial(j, k);
            b[k][j] = (k % 2 == 0) ? v : -v;
        }
    return b;
}

std::vector<Int> alpha_from_f_vector(const std::vector<Int>& f) {
    const int m = static_cast<int>(f.size());
    std::vector<Int> alpha(m, 0);
    for (int k = 0; k < m; ++k) {
        Int s = 0;
        for (int j = k; j < m; ++j) {
            Int t = binomial(j, k) * f[j];
            s += (j % 2 == 0) ? t : -t;
        }
        alpha[k] = (k % 2 == 0) ? s : -s;
    }
    return alpha;
}

std::vector<Int> f_from_alpha_vector(const std::vector<Int>& alpha) {
    const int m = static_cast<int>(alpha.size());
    std::vector<Int> f(m, 0);
    for (int j = 0; j < m; ++j)
        for (int k = j; k < m; ++k) f[j] += binomial(k, j) * alpha[k];
    return f;
}

namespace {

// Exponent-vector polynomial over the rationals, truncated at total
// degree n; only what the Todd expansion needs.
using MPoly = std::map<std::vector<int>, Rat>;

std::vector<Rat> todd_series(int n) {
    // x / (1 - e^{-x}) = 1 / sum_k (-x)^k/(k+1)!  as a power series
    std::vector<Rat> d(n + 1), q(n + 1);
    for (int k = 0; k <= n; ++k) {
        Rat v(1, factorial(k + 1));
        d[k] = (k % 2 == 0) ? v : -v;
    }
    q[0] = 1;
    for (int k = 1; k <= n; ++k) {
        Rat s = 0;
        for (int i = 1; i <= k; ++i) s += d[i] * q[k - i];
        q[k] = -s;
    }
    return q;
}

} // namespace

std::map<Partition, Rat> todd_coefficients(int n) {
    if (n < 1 || n > 8) fail(errc::range, "todd_coefficients: need 1 <= n <= 8");
    const auto q = todd_series(n);

    // Expand prod_{v=1..n} Q(x_v) keeping total degree <= n; n variables
    // are enough to separate both bases at weight n.
    MPoly poly;
    poly[std::vector<int>(n, 0)] = 1;
    for (int v = 0; v < n; ++v) {
        MPoly next;
        for (const auto& [expo, coeff] : poly) {
            int deg = 0;
            for (int e : expo) deg += e;
            for (int k = 0; deg + k <= n; ++k) {
                if (q[k] == 0) continue;
                auto e2 = expo;
                e2[v] += k;
                next[e2] += coeff * q[k];
            }
        }
        poly = std::move(next);
    }

    // Monomial-basis coefficients of the degree-n part.
    const auto parts = partitions(n);
    std::map<Partition, Rat> mcoeff;
    for (const auto& mu : parts) {
        std::vector<int> expo(n, 0);
        for (int i = 0; i < mu.length(); ++i) expo[i] = mu.parts()[i];
        auto it = poly.find(expo);
        mcoeff[mu] = (it == poly.end()) ? Rat(0) : it->second;
    }

    // Solve sum_lambda tau_lambda M_{lambda,mu} = mcoeff_mu (M symmetric).
    const int p = static_cast<int>(parts.size());
    std::vector<std::vector<Rat>> aug(p, std::vector<Rat>(p + 1));
    for (int i = 0; i < p; ++i) {
        for (int j = 0; j < p; ++j) aug[i][j] = Rat(transition_M(parts[j], parts[i]));
        aug[i][p] = mcoeff[parts[i]];
    }
    for (int col = 0; col < p; ++col) {
        int piv = -1;
        for (int r = col; r < p; ++r)
            if (aug[r][col] != 0) { piv = r; break; }
        if (piv < 0) fail(errc::internal_mismatch, "singular transition matrix");
        std::swap(aug[col], aug[piv]);
        for (int r = 0; r < p; ++r) {
            if (r == col || aug[r][col] == 0) continue;
            Rat factor = aug[r][col] / aug[col][col];
            for (int c = col; c <= p; ++c) aug[r][c] -= factor * aug[col][c];
        }
    }
    std::map<Partition, Rat> tau;
    for (int i = 0; i < p; ++i) tau[parts[i]] = aug[i][p] / aug[i][i];
    return tau;
}

} // namespace torbord
