#include "updown/alternant.hpp"

#include <bit>
#include <cstdint>
#include <unordered_map>
#include <vector>

namespace updown {

WeightMatrix weight_ones(int n) {
    WeightMatrix a(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a.at(i, j) = 1;
    return a;
}

WeightMatrix weight_ones_minus_identity(int n) {
    WeightMatrix a = weight_ones(n);
    for (int i = 0; i < n; ++i) a.at(i, i) = 0;
    return a;
}

WeightMatrix weight_endpoint(int n, int l, int m) {
    if (l < 1 || l > n || m < 1 || m > n) throw std::invalid_argument("weight_endpoint: index out of range");
    WeightMatrix a = weight_ones(n);
    for (int j = 1; j <= n; ++j) {
        if (j != l) a.at(0, j - 1) = 0;
        if (j != m) a.at(n - 1, j - 1) = 0;
    }
    return a;
}

namespace {

// Naive expansion on explicit submatrices. sig_at points at q_1 of the
// current matrix within the full signature entry list.
Integer alt_naive(const std::vector<std::vector<Integer>>& a, const std::vector<int>& q, std::size_t sig_at) {
    const std::size_t n = a.size();
    if (n == 1) return a[0][0];
    const int q1 = q[sig_at];
    Integer total = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (a[0][j] == 0) continue;
        // delete row 0 and column j, then zero a prefix or suffix of the new
        // first row: the first j entries for q1 = +1, the last n-1-j for -1
        std::vector<std::vector<Integer>> sub(n - 1, std::vector<Integer>(n - 1));
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                sub[r - 1][cc++] = a[r][c];
            }
        }
        if (q1 == 1) {
            for (std::size_t c = 0; c < j; ++c) sub[0][c] = 0;
        } else {
            for (std::size_t c = j; c + 1 < n; ++c) sub[0][c] = 0;
        }
        total += a[0][j] * alt_naive(sub, q, sig_at + 1);
    }
    return total;
}

struct MemoKey {
    std::uint32_t mask;
    std::uint8_t zeros;
    bool operator==(const MemoKey&) const = default;
};

struct MemoKeyHash {
    std::size_t operator()(const MemoKey& k) const {
        return std::hash<std::uint64_t>()((std::uint64_t(k.mask) << 8) | k.zeros);
    }
};

// State: current row = n - popcount(mask) (0-based); `mask` holds the
// remaining columns; `zeros` entries of the current first row are masked out
// on the side dictated by the previous signature entry.
class MemoAlt {
  public:
    MemoAlt(const WeightMatrix& a, const Signature& sig) : a_(a), sig_(sig), n_(a.order()) {}

    Integer run() {
        const std::uint32_t full = (n_ >= 32) ? ~std::uint32_t(0) : ((std::uint32_t(1) << n_) - 1);
        return go(full, 0, 1);
    }

  private:
    Integer go(std::uint32_t mask, int zeros, int prev_q) {
        const int cnt = std::popcount(mask);
        const int row = n_ - cnt;  // 0-based row of the original matrix
        const MemoKey key{mask, static_cast<std::uint8_t>(zeros)};
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        Integer total = 0;
        const int q_here = (cnt > 1) ? sig_.q(row + 1) : 0;
        int pos = 0;  // 1-based position among remaining columns
        for (std::uint32_t rest = mask; rest; rest &= rest - 1) {
            ++pos;
            if (prev_q == 1 && pos <= zeros) continue;
            if (prev_q == -1 && pos > cnt - zeros) continue;
            const int col = std::countr_zero(rest);
            const Integer& w = a_.at(row, col);
            if (w == 0) continue;
            if (cnt == 1) {
                total += w;
            } else {
                const int z = (q_here == 1) ? pos - 1 : cnt - pos;
                total += w * go(mask & ~(std::uint32_t(1) << col), z, q_here);
            }
        }
        memo_.emplace(key, total);
        return total;
    }

    const WeightMatrix& a_;
    const Signature& sig_;
    const int n_;
    std::unordered_map<MemoKey, Integer, MemoKeyHash> memo_;
};

}  // namespace

Integer alt(const WeightMatrix& a, const Signature& sig) {
    if (a.order() != sig.order()) throw std::invalid_argument("alt: matrix and signature order mismatch");
    const int n = a.order();
    std::vector<std::vector<Integer>> rows(static_cast<std::size_t>(n), std::vector<Integer>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rows[i][j] = a.at(i, j);
    return alt_naive(rows, sig.entries(), 0);
}

Integer alt_memoized(const WeightMatrix& a, const Signature& sig) {
    if (a.order() != sig.order()) throw std::invalid_argument("alt: matrix and signature order mismatch");
    if (a.order() > 20) throw BudgetError("alt_memoized: order above the memoization budget");
    return MemoAlt(a, sig).run();
}

}  // namespace updown
