#include "pathsample/discrete.hpp"

#include <limits>
#include <stdexcept>

#include "pathsample/checked.hpp"

namespace pathsample {

DiscreteDistribution::DiscreteDistribution(std::span<const std::uint64_t> weights) {
  const std::size_t n = weights.size();
  if (n > std::numeric_limits<std::uint32_t>::max())
    throw std::invalid_argument("discrete distribution limited to 2^32-1 entries");
  for (std::uint64_t w : weights) total_ = checked_add(total_, w);

  accept_.assign(n, 1.0);
  alias_.resize(n);
  for (std::size_t i = 0; i < n; ++i) alias_[i] = (std::uint32_t)i;
  if (total_ == 0) return;

  // Vose's construction. scaled[i] = w_i * n / total; cells below 1 borrow
  // mass from cells above 1. Stacks are filled in index order so the tables
  // are a deterministic function of the weights.
  std::vector<double> scaled(n);
  const double norm = (double)n / (double)total_;
  for (std::size_t i = 0; i < n; ++i) scaled[i] = (double)weights[i] * norm;

  std::vector<std::uint32_t> small, large;
  small.reserve(n);
  large.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    (scaled[i] < 1.0 ? small : large).push_back((std::uint32_t)i);

  while (!small.empty() && !large.empty()) {
    const std::uint32_t s = small.back();
    const std::uint32_t l = large.back();
    small.pop_back();
    accept_[s] = scaled[s];
    alias_[s] = l;
    scaled[l] -= 1.0 - scaled[s];
    if (scaled[l] < 1.0) {
      large.pop_back();
      small.push_back(l);
    }
  }
  // Leftovers are rounding dust; they accept their own index.
  for (std::uint32_t i : small) accept_[i] = 1.0;
  for (std::uint32_t i : large) accept_[i] = 1.0;
}

std::size_t DiscreteDistribution::draw(RandomSource& rng) const {
  if (total_ == 0)
    throw std::logic_error("draw from empty discrete distribution");
  const std::size_t cell = (std::size_t)rng.bounded(accept_.size());
  return rng.uniform() < accept_[cell] ? cell : alias_[cell];
}

}  // namespace pathsample
