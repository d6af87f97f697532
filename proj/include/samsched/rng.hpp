#pragma once

#include <cstdint>

namespace samsched {

// Counter-based deterministic random stream: splitmix64 over a Weyl
// sequence whose starting point is a hash of (seed, stream_id). Any
// (seed, id) pair names a reproducible stream and distinct ids give
// statistically independent streams. Monte Carlo code derives per-trial
// substreams as (seed, 2*trial) and (seed, 2*trial + 1), so estimates do
// not depend on trial execution order.
class RngStream {
  public:
    explicit RngStream(std::uint64_t seed, std::uint64_t stream_id = 0);

    std::uint64_t next_u64();

    // uniform in [0, 1), 53-bit resolution
    double next_unit();

    // uniform in {0, ..., bound-1}, unbiased (rejection sampling)
    std::uint64_t next_below(std::uint64_t bound);

  private:
    std::uint64_t state_;
};

}  // namespace samsched
