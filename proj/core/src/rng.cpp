#include "udecide/rng.hpp"

namespace udecide {
namespace {
constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
}  // namespace

RngStream::RngStream(std::uint64_t master_seed, std::uint64_t stream_id,
                     std::uint64_t counter) noexcept
    : master_seed_(master_seed), stream_id_(stream_id), counter_(counter) {
  std::uint64_t k = mix64(master_seed + kGolden);
  k = mix64(k ^ (stream_id + 0x6a09e667f3bcc909ULL));
  key_ = mix64(k ^ (counter + 0xbb67ae8584caa73bULL));
}

std::uint64_t RngStream::next_u64() noexcept {
  return mix64(key_ + kGolden * ++position_);
}

double RngStream::uniform01() noexcept {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

}  // namespace udecide
