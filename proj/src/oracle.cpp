#include "updown/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace updown {

PositionMask PositionMask::no_fixed_point(int n) {
    PositionMask m(n);
    for (int i = 1; i <= n; ++i) m.set(i, i, false);
    return m;
}

PositionMask PositionMask::endpoint(int n, int l, int m) {
    if (l < 1 || l > n || m < 1 || m > n) throw std::invalid_argument("endpoint mask: index out of range");
    PositionMask mask(n);
    for (int v = 1; v <= n; ++v) {
        if (v != l) mask.set(1, v, false);
        if (v != m) mask.set(n, v, false);
    }
    return mask;
}

PositionMask PositionMask::from_matrix(const ExactMatrix& a) {
    const int n = a.order();
    PositionMask mask(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const Integer& v = a.at(i, j);
            if (v != 0 && v != 1) throw std::invalid_argument("PositionMask: matrix entries must be 0 or 1");
            mask.set(i + 1, j + 1, v == 1);
        }
    }
    return mask;
}

ExactMatrix PositionMask::to_matrix() const {
    ExactMatrix a(n_);
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j) a.at(i - 1, j - 1) = allows(i, j) ? 1 : 0;
    return a;
}

Signature signature_of(const Permutation& pi) {
    std::vector<int> q;
    q.reserve(pi.empty() ? 0 : pi.size() - 1);
    for (std::size_t i = 0; i + 1 < pi.size(); ++i) q.push_back(pi[i + 1] > pi[i] ? 1 : -1);
    return Signature(std::move(q));
}

int cycle_count(const Permutation& pi) {
    const int n = static_cast<int>(pi.size());
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    int cycles = 0;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        ++cycles;
        int j = i;
        while (!seen[j]) {
            seen[j] = 1;
            j = pi[j] - 1;
        }
    }
    return cycles;
}

namespace {

// Depth-first construction: extend a partial permutation one position at a
// time, pruning on the signature prefix and the mask. The visitor sees each
// completed permutation (as 1-based values in `cur`).
template <typename Leaf>
void dfs_signature(const Signature& sig, const PositionMask* mask, std::vector<int>& cur, std::uint32_t used,
                   Leaf&& leaf) {
    const int n = sig.order();
    const int pos = static_cast<int>(cur.size()) + 1;
    if (pos > n) {
        leaf(cur);
        return;
    }
    for (int v = 1; v <= n; ++v) {
        if (used & (std::uint32_t(1) << v)) continue;
        if (mask && !mask->allows(pos, v)) continue;
        if (pos >= 2) {
            const int q = sig.q(pos - 1);
            if ((v > cur.back()) != (q == 1)) continue;
        }
        cur.push_back(v);
        dfs_signature(sig, mask, cur, used | (std::uint32_t(1) << v), leaf);
        cur.pop_back();
    }
}

}  // namespace

Integer count_signature(const Signature& sig, const PositionMask* mask) {
    if (mask && mask->order() != sig.order())
        throw std::invalid_argument("count_signature: mask order must match signature order");
    if (sig.order() > 24) throw BudgetError("count_signature: order above enumeration budget");
    unsigned long long count = 0;
    std::vector<int> cur;
    cur.reserve(sig.order());
    dfs_signature(sig, mask, cur, 0, [&](const std::vector<int>&) { ++count; });
    return Integer(static_cast<unsigned long>(count));
}

std::vector<Integer> counts_all(int n, int n_limit) {
    if (n < 1) throw std::invalid_argument("counts_all: order must be positive");
    if (n > n_limit) throw BudgetError("counts_all: n exceeds the full-scan budget");
    std::vector<Integer> table(std::size_t(1) << (n - 1), Integer(0));
    std::vector<unsigned long long> raw(table.size(), 0);
    std::vector<int> pi(static_cast<std::size_t>(n));
    std::iota(pi.begin(), pi.end(), 1);
    do {
        std::uint64_t k = 0;
        for (int i = 0; i + 1 < n; ++i)
            if (pi[i + 1] > pi[i]) k += std::uint64_t(1) << (n - i - 2);
        ++raw[k];
    } while (std::next_permutation(pi.begin(), pi.end()));
    for (std::size_t k = 0; k < raw.size(); ++k) table[k] = Integer(static_cast<unsigned long>(raw[k]));
    return table;
}

Permutation witness_permutation(int n, std::uint64_t k) {
    if (n < 1) throw std::invalid_argument("witness_permutation: order must be positive");
    if (n > 1 && (k >> (n - 1)) != 0) throw std::invalid_argument("witness_permutation: k >= 2^(n-1)");
    if (n == 1 && k != 0) throw std::invalid_argument("witness_permutation: k >= 2^(n-1)");
    Permutation pi(static_cast<std::size_t>(n));
    std::iota(pi.begin(), pi.end(), 1);
    // bits[i] is the digit at position i+1 (MSB first); 0 marks a descent.
    int i = 1;
    while (i <= n - 1) {
        const bool zero = ((k >> (n - 1 - i)) & 1) == 0;
        if (!zero) {
            ++i;
            continue;
        }
        int j = i;
        while (j <= n - 1 && ((k >> (n - 1 - j)) & 1) == 0) ++j;
        // run of 0s at positions i..j-1: reverse elements i..j
        std::reverse(pi.begin() + (i - 1), pi.begin() + j);
        i = j + 1;
    }
    return pi;
}

Signature alternating_signature(int n) {
    std::vector<int> q(static_cast<std::size_t>(n) - 1);
    for (int i = 0; i + 1 < n; ++i) q[i] = (i % 2 == 0) ? 1 : -1;
    return Signature(std::move(q));
}

Integer alternating_derangements(int n, int n_limit) {
    if (n < 1) throw std::invalid_argument("alternating_derangements: order must be positive");
    if (n > n_limit) throw BudgetError("alternating_derangements: n exceeds the search budget");
    PositionMask mask = PositionMask::no_fixed_point(n);
    return count_signature(alternating_signature(n), &mask);
}

std::vector<Integer> alternating_stirling_row(int n, int n_limit) {
    if (n < 1) throw std::invalid_argument("alternating_stirling: order must be positive");
    if (n > n_limit) throw BudgetError("alternating_stirling: n exceeds the search budget");
    std::vector<unsigned long long> row(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> cur;
    cur.reserve(n);
    dfs_signature(alternating_signature(n), nullptr, cur, 0,
                  [&](const std::vector<int>& pi) { ++row[static_cast<std::size_t>(cycle_count(pi))]; });
    std::vector<Integer> out(row.size());
    for (std::size_t i = 0; i < row.size(); ++i) out[i] = Integer(static_cast<unsigned long>(row[i]));
    return out;
}

Integer alternating_stirling(int n, int l, int n_limit) {
    if (l < 1 || l > n) throw std::invalid_argument("alternating_stirling: cycle count out of range");
    return alternating_stirling_row(n, n_limit)[static_cast<std::size_t>(l)];
}

}  // namespace updown
