#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace fdnet {

/// Philox4x64-10 counter-based generator (Salmon et al., SC'11).
///
/// The key is {seed, domain}; the first three counter words select a
/// stream and the fourth advances within it. Streams never overlap as long
/// as fewer than 2^64 blocks are drawn from one of them, so every
/// (seed, domain, a, b, c) tuple owns an independent sequence that can be
/// recreated anywhere without shared state.
class Philox4x64
{
  public:
    using result_type = std::uint64_t;
    using Block = std::array<std::uint64_t, 4>;
    using Key = std::array<std::uint64_t, 2>;

    Philox4x64(std::uint64_t seed, std::uint64_t domain, std::uint64_t a,
               std::uint64_t b, std::uint64_t c)
        : key_{seed, domain}, ctr_{a, b, c, 0}
    {
    }

    static constexpr result_type min() { return 0; }
    static constexpr result_type max()
    {
        return std::numeric_limits<result_type>::max();
    }

    result_type operator()()
    {
        if (idx_ == 4)
        {
            buf_ = bijection(ctr_, key_);
            ++ctr_[3];
            idx_ = 0;
        }
        return buf_[idx_++];
    }

    /// The keyed bijection itself (ten rounds).
    static Block bijection(Block ctr, Key key)
    {
        for (int round = 0; round < 10; ++round)
        {
            if (round > 0)
            {
                key[0] += kWeyl0;
                key[1] += kWeyl1;
            }
            ctr = single_round(ctr, key);
        }
        return ctr;
    }

  private:
    static constexpr std::uint64_t kMul0 = 0xD2E7470EE14C6C93ULL;
    static constexpr std::uint64_t kMul1 = 0xCA5A826395121157ULL;
    static constexpr std::uint64_t kWeyl0 = 0x9E3779B97F4A7C15ULL;
    static constexpr std::uint64_t kWeyl1 = 0xBB67AE8584CAA73BULL;

    static Block single_round(Block const& x, Key const& k)
    {
        __extension__ using u128 = unsigned __int128;
        u128 const p0 = static_cast<u128>(kMul0) * x[0];
        u128 const p1 = static_cast<u128>(kMul1) * x[2];
        auto const hi0 = static_cast<std::uint64_t>(p0 >> 64);
        auto const lo0 = static_cast<std::uint64_t>(p0);
        auto const hi1 = static_cast<std::uint64_t>(p1 >> 64);
        auto const lo1 = static_cast<std::uint64_t>(p1);
        return {hi1 ^ x[1] ^ k[0], lo1, hi0 ^ x[3] ^ k[1], lo0};
    }

    Key key_;
    Block ctr_;
    Block buf_{};
    int idx_ = 4;
};

}  // namespace fdnet
