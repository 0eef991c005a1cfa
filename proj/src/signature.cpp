#include "updown/signature.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace updown {

namespace {
constexpr int kMaxOrder = 64;  // keeps the index inside uint64
}

Signature::Signature(std::vector<int> entries) : q_(std::move(entries)) {
    if (q_.size() >= kMaxOrder)
        throw std::invalid_argument("Signature: order above supported limit");
    for (int v : q_)
        if (v != 1 && v != -1) throw std::invalid_argument("Signature: entries must be +1 or -1");
}

Signature Signature::parse(const std::string& text) {
    std::vector<int> entries;
    std::string token;
    std::istringstream in(text);
    int pos = 0;
    while (std::getline(in, token, ',')) {
        ++pos;
        // trim blanks
        auto b = token.find_first_not_of(" \t");
        auto e = token.find_last_not_of(" \t");
        std::string t = (b == std::string::npos) ? "" : token.substr(b, e - b + 1);
        if (t == "+1" || t == "1" || t == "u") {
            entries.push_back(1);
        } else if (t == "-1" || t == "d") {
            entries.push_back(-1);
        } else {
            throw std::invalid_argument("signature parse error at token " + std::to_string(pos) + ": '" + t + "'");
        }
    }
    return Signature(std::move(entries));
}

Signature Signature::reversed_negated() const {
    std::vector<int> r(q_.rbegin(), q_.rend());
    for (int& v : r) v = -v;
    return Signature(std::move(r));
}

std::string Signature::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < q_.size(); ++i) {
        if (i) out += ',';
        out += q_[i] > 0 ? "+1" : "-1";
    }
    return out;
}

std::vector<int> exponents(std::uint64_t k) {
    std::vector<int> ts;
    while (k) {
        int b = std::bit_width(k);  // highest set bit is 2^(b-1)
        ts.push_back(b);
        k -= std::uint64_t(1) << (b - 1);
    }
    return ts;
}

UpDownIndex make_updown_index(std::uint64_t k) {
    UpDownIndex idx;
    idx.k = k;
    idx.exponents = exponents(k);
    if (!idx.exponents.empty()) {
        int t1 = idx.exponents.front();
        idx.places.reserve(idx.exponents.size());
        for (int t : idx.exponents) idx.places.push_back(t1 - t + 1);
    }
    return idx;
}

UpDownIndex encode_index(const Signature& sig) {
    const int n = sig.order();
    std::uint64_t k = 0;
    for (int i = 1; i < n; ++i)
        if (sig.q(i) == 1) k += std::uint64_t(1) << (n - i - 1);
    return make_updown_index(k);
}

Signature decode_index(int n, std::uint64_t k) {
    if (n < 1 || n > kMaxOrder) throw std::invalid_argument("decode_index: order out of range");
    if (n == 1) {
        if (k != 0) throw std::invalid_argument("decode_index: k out of range for n=1");
        return Signature({});
    }
    if (k >> (n - 1)) throw std::invalid_argument("decode_index: k >= 2^(n-1)");
    std::vector<int> q(static_cast<std::size_t>(n) - 1);
    for (int i = 1; i < n; ++i) q[i - 1] = (k >> (n - i - 1)) & 1 ? 1 : -1;
    return Signature(std::move(q));
}

std::uint64_t complement_index(int n, std::uint64_t k) {
    if (n < 1 || n > kMaxOrder) throw std::invalid_argument("complement_index: order out of range");
    std::uint64_t top = (n == 1) ? 0 : (std::uint64_t(1) << (n - 1)) - 1;
    if (k > top) throw std::invalid_argument("complement_index: k >= 2^(n-1)");
    return top - k;
}

std::uint64_t alternating_index(int n) {
    if (n < 1 || n > 62) throw std::invalid_argument("alternating_index: order out of range");
    std::uint64_t p = std::uint64_t(1) << (n + 1);
    return (n % 2 == 0) ? (p - 2) / 6 : (p - 4) / 6;
}

}  // namespace updown
