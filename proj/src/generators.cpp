// generators.cpp

#include "ringform/generators.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace ringform {

std::string_view to_string(GenKind kind) {
  switch (kind) {
    case GenKind::Random: return "random";
    case GenKind::RandomP2: return "p2_random";
    case GenKind::Homogeneous: return "homogeneous";
    case GenKind::AdversarialHalf: return "adversarial_half";
    case GenKind::P3Random: return "p3_random";
  }
  return "?";
}

GenKind parse_gen_kind(std::string_view name) {
  for (auto kind : {GenKind::Random, GenKind::RandomP2, GenKind::Homogeneous, GenKind::AdversarialHalf,
                    GenKind::P3Random})
    if (to_string(kind) == name) return kind;
  throw std::invalid_argument("unknown generator kind '" + std::string(name) + "'");
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("empty range");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t draw;
  do draw = engine_();
  while (draw >= limit);
  return draw % bound;
}

namespace {

std::string provenance(const GenSpec& spec) {
  std::string out(kGeneratorVersion);
  out += " kind=" + std::string(to_string(spec.kind));
  out += " k=" + std::to_string(spec.k) + " p=" + std::to_string(spec.p) + " q=" + std::to_string(spec.q);
  if (spec.kind == GenKind::Homogeneous) out += " m=" + std::to_string(spec.m);
  if (spec.kind == GenKind::RandomP2) out += " extra=" + std::to_string(spec.extra);
  if (spec.kind != GenKind::AdversarialHalf) out += " seed=" + std::to_string(spec.seed);
  return out;
}

Instance assemble(Problem kind, int k, int p, int q, std::vector<std::vector<int>> required,
                  std::vector<Colour> multiset, Rng* rng) {
  if (rng) rng->shuffle(multiset);
  Instance inst;
  inst.q = q;
  inst.spec.kind = kind;
  inst.spec.required = std::move(required);
  inst.initial = Configuration::from_colours(k, p, multiset);
  return inst;
}

void require_ring(int k, int p) {
  if (k < 2) throw std::invalid_argument("need k >= 2");
  if (p < 1) throw std::invalid_argument("need p >= 1");
}

}  // namespace

Instance gen_random(int k, int p, int q, std::uint64_t seed) {
  require_ring(k, p);
  if (q < 2 || q > kMaxColours) throw std::invalid_argument("q must be in [2, 35]");
  if (p < q - 1)
    throw std::invalid_argument("infeasible: p=" + std::to_string(p) + " < q-1=" + std::to_string(q - 1) +
                                " mandatory agents per block");
  Rng rng(seed);
  std::vector<std::vector<int>> req(static_cast<std::size_t>(q), std::vector<int>(static_cast<std::size_t>(k), 0));
  std::vector<Colour> multiset;
  for (int j = 0; j < k; ++j) {
    for (int c = 1; c < q; ++c) req[static_cast<std::size_t>(c - 1)][static_cast<std::size_t>(j)] = 1;
    for (int slot = q - 1; slot < p; ++slot) ++req[static_cast<std::size_t>(rng.uniform(0, q - 1))][static_cast<std::size_t>(j)];
  }
  for (int c = 1; c <= q; ++c)
    for (int j = 0; j < k; ++j)
      multiset.insert(multiset.end(), static_cast<std::size_t>(req[static_cast<std::size_t>(c - 1)][static_cast<std::size_t>(j)]), c);
  auto inst = assemble(Problem::P1, k, p, q, std::move(req), std::move(multiset), &rng);
  inst.generator = provenance({GenKind::Random, k, p, q, seed});
  return inst;
}

Instance gen_random_p2(int k, int p, int q, int extra, std::uint64_t seed) {
  require_ring(k, p);
  if (q < 2 || q > kMaxColours) throw std::invalid_argument("q must be in [2, 35]");
  if (extra < 0) throw std::invalid_argument("surplus must be non-negative");
  Rng rng(seed);
  std::vector<std::vector<int>> req(static_cast<std::size_t>(q), std::vector<int>(static_cast<std::size_t>(k), 0));
  int lower_total = 0;
  for (int j = 0; j < k; ++j) {
    const int bound = p == 1 ? 1 : rng.uniform(1, p - 1);
    req[0][static_cast<std::size_t>(j)] = bound;
    lower_total += bound;
  }
  const int d = std::min(extra, k * p - lower_total);
  std::vector<Colour> multiset(static_cast<std::size_t>(lower_total + d), 1);
  while (static_cast<int>(multiset.size()) < k * p) multiset.push_back(rng.uniform(2, q));
  auto inst = assemble(Problem::P2Restricted, k, p, q, std::move(req), std::move(multiset), &rng);
  inst.generator = provenance({GenKind::RandomP2, k, p, q, seed, 1, extra});
  return inst;
}

Instance gen_homogeneous(int k, int p, int m, std::uint64_t seed) {
  require_ring(k, p);
  if (m < 1 || m > p - 1)
    throw std::invalid_argument("homogeneous requirement m=" + std::to_string(m) + " not in [1, p-1]");
  Rng rng(seed);
  std::vector<std::vector<int>> req{std::vector<int>(static_cast<std::size_t>(k), m),
                                    std::vector<int>(static_cast<std::size_t>(k), p - m)};
  std::vector<Colour> multiset(static_cast<std::size_t>(k * m), 1);
  multiset.resize(static_cast<std::size_t>(k * p), 2);
  auto inst = assemble(Problem::P1, k, p, 2, std::move(req), std::move(multiset), &rng);
  inst.generator = provenance({GenKind::Homogeneous, k, p, 2, seed, m});
  return inst;
}

Instance gen_adversarial_half(int k, int p) {
  require_ring(k, p);
  if (k % 2 != 0 || p % 2 != 0)
    throw std::invalid_argument("adversarial family needs even k and even p");
  std::vector<std::vector<int>> req{std::vector<int>(static_cast<std::size_t>(k), p / 2),
                                    std::vector<int>(static_cast<std::size_t>(k), p / 2)};
  std::vector<Colour> multiset(static_cast<std::size_t>(k * p / 2), 2);
  multiset.resize(static_cast<std::size_t>(k * p), 1);
  auto inst = assemble(Problem::P1, k, p, 2, std::move(req), std::move(multiset), nullptr);
  inst.generator = provenance({GenKind::AdversarialHalf, k, p, 2});
  return inst;
}

Instance gen_p3_random(int k, int p, int q, std::uint64_t seed) {
  require_ring(k, p);
  if (q < 2 || q > kMaxColours) throw std::invalid_argument("q must be in [2, 35]");
  if (p < q) throw std::invalid_argument("infeasible: a pattern of length p=" + std::to_string(p) +
                                         " cannot hold all " + std::to_string(q) + " colours");
  Rng rng(seed);
  Instance inst;
  inst.q = q;
  inst.spec.kind = Problem::P3;
  inst.spec.required.assign(static_cast<std::size_t>(q), std::vector<int>(static_cast<std::size_t>(k), 0));
  std::vector<Colour> multiset;
  for (int j = 0; j < k; ++j) {
    std::vector<Colour> pattern;
    for (int c = 1; c <= q; ++c) pattern.push_back(c);
    while (static_cast<int>(pattern.size()) < p) pattern.push_back(rng.uniform(1, q));
    rng.shuffle(pattern);
    for (Colour c : pattern) ++inst.spec.required[static_cast<std::size_t>(c - 1)][static_cast<std::size_t>(j)];
    multiset.insert(multiset.end(), pattern.begin(), pattern.end());
    inst.spec.patterns.push_back(std::move(pattern));
  }
  rng.shuffle(multiset);
  inst.initial = Configuration::from_colours(k, p, multiset);
  inst.generator = provenance({GenKind::P3Random, k, p, q, seed});
  return inst;
}

Instance generate(const GenSpec& spec) {
  switch (spec.kind) {
    case GenKind::Random: return gen_random(spec.k, spec.p, spec.q, spec.seed);
    case GenKind::RandomP2: return gen_random_p2(spec.k, spec.p, spec.q, spec.extra, spec.seed);
    case GenKind::Homogeneous: return gen_homogeneous(spec.k, spec.p, spec.m, spec.seed);
    case GenKind::AdversarialHalf: return gen_adversarial_half(spec.k, spec.p);
    case GenKind::P3Random: return gen_p3_random(spec.k, spec.p, spec.q, spec.seed);
  }
  throw std::invalid_argument("unknown generator kind");
}

}  // namespace ringform
