#ifndef EHSEC_RNG_HPP_
#define EHSEC_RNG_HPP_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>

namespace ehsec {

// Stream tags used when deriving per-purpose seeds from a master seed.
enum class StreamTag : std::uint64_t {
  kLegitimateGain = 1,
  kEavesdropperGain = 2,
  kProbabilisticSlots = 3,
  kVerifyInstance = 4,
};

// Mixes `master` with an ordered list of labels into a fresh 64-bit seed.
// Every (master, labels) tuple maps to an independent-looking stream, so
// callers never share or advance a common engine.
std::uint64_t derive_seed(std::uint64_t master,
                          std::initializer_list<std::uint64_t> labels);

// A value-owned random stream. Draw routines use only the raw engine output
// so sequences are identical across standard library implementations.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform on [0, 1) with 53 bits of resolution.
  double uniform();

  // Exponential with the given mean (inverse-CDF draw).
  double exponential(double mean);

  // Uniform index in [0, n); n must be positive.
  std::size_t index(std::size_t n);

 private:
  std::mt19937_64 engine_;
};

}  // namespace ehsec

#endif  // EHSEC_RNG_HPP_
