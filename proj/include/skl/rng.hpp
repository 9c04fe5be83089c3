#pragma once

#include <cmath>
#include <cstdint>

#include "skl/common.hpp"

namespace skl {

// Philox4x32-10 counter-based generator (Salmon et al., SC'11).
// Streams are keyed by (seed, path_index); within a path, draws advance a
// block counter. The value of draw #n on path #p depends only on
// (seed, p, n), so any partition of paths over workers reproduces the
// single-worker run bit for bit.
class PathRng {
  public:
    PathRng(std::uint64_t seed, std::uint64_t path_index)
        : key0_(static_cast<std::uint32_t>(seed)),
          key1_(static_cast<std::uint32_t>(seed >> 32)),
          ctr0_(static_cast<std::uint32_t>(path_index)),
          ctr1_(static_cast<std::uint32_t>(path_index >> 32)) {}

    std::uint32_t next_u32() {
        if (have_ == 0) refill();
        return buf_[--have_];
    }

    std::uint64_t next_u64() {
        std::uint64_t hi = next_u32();
        return (hi << 32) | next_u32();
    }

    // Uniform on the open interval (0,1); never returns 0 or 1.
    double u01() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    double exponential(double rate) { return -std::log(u01()) / rate; }

    bool coin() { return (next_u32() & 1u) != 0; }

    // Uniform direction on S^{d-1}. d=1 is a sign, d=2 an angle, d>=3 a
    // normalized Gaussian vector (Box-Muller pairs).
    void unit_vector(int d, Vec& out) {
        out.dim = d;
        if (d == 1) {
            out[0] = coin() ? 1.0 : -1.0;
            return;
        }
        if (d == 2) {
            double th = 2.0 * M_PI * u01();
            out[0] = std::cos(th);
            out[1] = std::sin(th);
            return;
        }
        double n2;
        do {
            n2 = 0;
            for (int i = 0; i < d; i += 2) {
                double r = std::sqrt(-2.0 * std::log(u01()));
                double th = 2.0 * M_PI * u01();
                out[i] = r * std::cos(th);
                if (i + 1 < d) out[i + 1] = r * std::sin(th);
            }
            for (int i = 0; i < d; ++i) n2 += out[i] * out[i];
        } while (n2 < 1e-300);
        double inv = 1.0 / std::sqrt(n2);
        for (int i = 0; i < d; ++i) out[i] *= inv;
    }

  private:
    static void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi,
                        std::uint32_t& lo) {
        std::uint64_t p = static_cast<std::uint64_t>(a) * b;
        hi = static_cast<std::uint32_t>(p >> 32);
        lo = static_cast<std::uint32_t>(p);
    }

    void refill() {
        constexpr std::uint32_t M0 = 0xD2511F53u, M1 = 0xCD9E8D57u;
        constexpr std::uint32_t W0 = 0x9E3779B9u, W1 = 0xBB67AE85u;
        std::uint32_t c0 = ctr0_, c1 = ctr1_, c2 = blk0_, c3 = blk1_;
        std::uint32_t k0 = key0_, k1 = key1_;
        for (int round = 0; round < 10; ++round) {
            std::uint32_t hi0, lo0, hi1, lo1;
            mulhilo(M0, c0, hi0, lo0);
            mulhilo(M1, c2, hi1, lo1);
            std::uint32_t n0 = hi1 ^ c1 ^ k0;
            std::uint32_t n1 = lo1;
            std::uint32_t n2 = hi0 ^ c3 ^ k1;
            std::uint32_t n3 = lo0;
            c0 = n0; c1 = n1; c2 = n2; c3 = n3;
            k0 += W0; k1 += W1;
        }
        buf_[0] = c0; buf_[1] = c1; buf_[2] = c2; buf_[3] = c3;
        have_ = 4;
        if (++blk0_ == 0) ++blk1_;
    }

    std::uint32_t key0_, key1_;
    std::uint32_t ctr0_, ctr1_;      // path index
    std::uint32_t blk0_ = 0, blk1_ = 0;  // draw block counter
    std::uint32_t buf_[4] = {0, 0, 0, 0};
    int have_ = 0;
};

}  // namespace skl
