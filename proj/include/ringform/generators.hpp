// generators.hpp -- seeded instance families.

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include "ringform/core.hpp"

namespace ringform {

/// Bumped whenever a sampler changes the instances it produces for a seed.
inline constexpr std::string_view kGeneratorVersion = "ringform-gen/1";

enum class GenKind { Random, RandomP2, Homogeneous, AdversarialHalf, P3Random };

std::string_view to_string(GenKind kind);
/// Throws std::invalid_argument for an unknown name.
GenKind parse_gen_kind(std::string_view name);

struct GenSpec {
  GenKind kind = GenKind::Random;
  int k = 2;
  int p = 2;
  int q = 2;
  std::uint64_t seed = 0;
  /// Homogeneous: required blue agents per block.
  int m = 1;
  /// RandomP2: requested surplus d of colour-1 agents (clamped to the free room).
  int extra = 0;
};

/// Portable sampling on top of mt19937_64: the standard distributions are
/// implementation-defined, so bounded draws and shuffles are done here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound);
  int uniform(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

/// Dispatches on spec.kind. Throws std::invalid_argument on infeasible parameters.
Instance generate(const GenSpec& spec);

/// Random P1: each block gets one agent of every colour below q, the rest of
/// the block is filled with uniformly drawn colours; the ring is a shuffle of
/// the resulting multiset. Needs k >= 2 and p >= q - 1.
Instance gen_random(int k, int p, int q, std::uint64_t seed);

/// Random restricted P2: lower bounds n_1(j) in [1, p-1] (or 1 when p = 1),
/// `extra` surplus colour-1 agents, the remaining agents of colours 2..q.
Instance gen_random_p2(int k, int p, int q, int extra, std::uint64_t seed);

/// Homogeneous two-colour P1: n_b(j) = m in every block, 1 <= m <= p - 1.
Instance gen_homogeneous(int k, int p, int m, std::uint64_t seed);

/// First k/2 blocks all red, last k/2 all blue, n_b(j) = p/2. k and p even.
Instance gen_adversarial_half(int k, int p);

/// Random P3: every pattern holds each colour at least once. Needs p >= q.
Instance gen_p3_random(int k, int p, int q, std::uint64_t seed);

}  // namespace ringform
