#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pathsample/random.hpp"

namespace pathsample {

// Fixed discrete distribution over integer weights, sampled in O(1) per draw
// via Walker/Vose alias tables. Zero-weight entries are never drawn; an
// all-zero weight vector builds an empty distribution that refuses draws.
class DiscreteDistribution {
 public:
  DiscreteDistribution() = default;
  explicit DiscreteDistribution(std::span<const std::uint64_t> weights);

  std::uint64_t total() const { return total_; }
  std::size_t size() const { return accept_.size(); }
  bool empty() const { return total_ == 0; }

  // Index i with probability weights[i]/total. Throws std::logic_error when
  // the distribution is empty.
  std::size_t draw(RandomSource& rng) const;

 private:
  std::vector<double> accept_;
  std::vector<std::uint32_t> alias_;
  std::uint64_t total_ = 0;
};

}  // namespace pathsample
