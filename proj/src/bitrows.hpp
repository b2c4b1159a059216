#ifndef SEMITRANS_SRC_BITROWS_HPP
#define SEMITRANS_SRC_BITROWS_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace semitrans::detail {

// n rows of n bits packed into 64-bit words. Internal scratch structure
// for reachability closures; rows are reused across runs via reset().
struct BitRows {
    int n = 0;
    int words = 0;
    std::vector<std::uint64_t> data;

    void reset(int n_) {
        n = n_;
        words = (n_ + 63) / 64;
        data.assign(static_cast<size_t>(n_) * words, 0);
    }
    void clear_rows() { std::fill(data.begin(), data.end(), 0); }

    std::uint64_t* row(int r) { return data.data() + static_cast<size_t>(r) * words; }
    const std::uint64_t* row(int r) const { return data.data() + static_cast<size_t>(r) * words; }

    void set(int r, int c) { row(r)[c / 64] |= std::uint64_t{1} << (c % 64); }
    bool test(int r, int c) const { return (row(r)[c / 64] >> (c % 64)) & 1; }

    void or_into(int dst, int src) {
        auto* d = row(dst);
        const auto* s = row(src);
        for (int w = 0; w < words; ++w) d[w] |= s[w];
    }
};

template <typename Fn>
void for_each_bit(const std::uint64_t* row, int words, Fn&& fn) {
    for (int w = 0; w < words; ++w) {
        std::uint64_t bits = row[w];
        while (bits) {
            int b = std::countr_zero(bits);
            bits &= bits - 1;
            fn(w * 64 + b);
        }
    }
}

}  // namespace semitrans::detail

#endif  // SEMITRANS_SRC_BITROWS_HPP
