// core.hpp -- ring geometry, agents, requirement specs and the instance document.

#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ringform {

/// Colours are 1-based. With q = 2, colour 1 is blue and colour 2 is red.
using Colour = int;

/// Stable identity of an agent. Only the verification layer looks at it.
using AgentId = int;

struct Agent {
  AgentId id = 0;
  Colour colour = 1;

  friend bool operator==(const Agent&, const Agent&) = default;
};

enum class Problem { P1, P2Restricted, P3 };

std::string_view to_string(Problem kind);

/// The ring: n = k*p agents, one per node. Positions are 0-based, blocks are
/// 1-based (S_1..S_k); position x lies in block x/p + 1.
class Configuration {
 public:
  Configuration() = default;
  Configuration(int k, int p, std::vector<Agent> agents);

  /// Builds a ring whose agent ids equal their initial positions.
  static Configuration from_colours(int k, int p, std::span<const Colour> colours);

  int k() const { return k_; }
  int p() const { return p_; }
  int n() const { return k_ * p_; }

  std::span<const Agent> agents() const { return agents_; }
  const Agent& operator[](int pos) const { return agents_[static_cast<std::size_t>(pos)]; }

  /// Agents of block j, left to right. Throws std::out_of_range if j is not in [1, k].
  std::span<const Agent> block(int j) const;

  int block_of(int pos) const { return pos / p_ + 1; }
  int block_start(int j) const { return (j - 1) * p_; }

  std::vector<Colour> colours() const;

  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  int k_ = 0;
  int p_ = 0;
  std::vector<Agent> agents_;
};

/// Per-colour counts; entry c-1 holds colour c.
using CountVector = std::vector<int>;

/// n_i(S_j) for every colour i. Throws std::out_of_range for a bad block index.
CountVector counts(const Configuration& cfg, int block, int q);
CountVector counts(std::span<const Agent> agents, int q);
/// Global per-colour totals n_i(C).
CountVector totals(const Configuration& cfg, int q);

struct RequirementSpec {
  Problem kind = Problem::P1;
  /// required[i-1][j-1] = n_i(j). For P3 this is derived from the patterns.
  std::vector<std::vector<int>> required;
  /// P3 only: target pattern of each block.
  std::vector<std::vector<Colour>> patterns;

  int operator()(Colour c, int block) const {
    return required[static_cast<std::size_t>(c - 1)][static_cast<std::size_t>(block - 1)];
  }
  /// min_j n_c(j)
  int min_required(Colour c) const;
  /// sum_j n_c(j)
  int total_required(Colour c) const;

  friend bool operator==(const RequirementSpec&, const RequirementSpec&) = default;
};

struct Instance {
  RequirementSpec spec;
  Configuration initial;
  int q = 2;
  /// Provenance line written by the generators; empty for hand-written instances.
  std::string generator;

  int k() const { return initial.k(); }
  int p() const { return initial.p(); }
  int n() const { return initial.n(); }

  friend bool operator==(const Instance&, const Instance&) = default;
};

/// Raised by parse_instance. Carries the 1-based line and the field name.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, std::string field, const std::string& message);

  int line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  int line_;
  std::string field_;
};

// Colour rendering: B/R for q = 2, "1".."9" then "a".."z" above that.
constexpr int kMaxColours = 35;
char colour_symbol(Colour c, int q);
/// Throws std::invalid_argument for a symbol outside the q-colour alphabet.
Colour parse_colour(char symbol, int q);
std::vector<Colour> parse_colours(std::string_view text, int q);
std::string render(std::span<const Agent> agents, int q);
std::string render(std::span<const Colour> colours, int q);
std::string render(const Configuration& cfg, int q);

Instance parse_instance(std::string_view text);
std::string serialize_instance(const Instance& inst);

/// Convenience constructors used by generators and tests. Structural problems
/// (lengths, dimensions, symbols) throw std::invalid_argument.
Instance make_instance(Problem kind, int k, int p, int q, std::string_view config,
                       std::vector<std::vector<int>> required);
Instance make_p3_instance(int k, int p, int q, std::string_view config,
                          const std::vector<std::string>& patterns);

struct ColourCheck {
  Colour colour = 1;
  int present = 0;
  int required = 0;
  bool ok = true;
};

struct ValidityReport {
  bool valid = true;
  std::vector<ColourCheck> colours;
  std::vector<std::string> problems;
  /// P2Restricted: number of colour-1 agents beyond the lower bounds.
  int extra = 0;

  std::string describe() const;
};

ValidityReport validate(const Instance& inst);

/// P1: exact counts per block; P2Restricted: n_1(S_j) >= n_1(j); P3: exact patterns.
bool target_reached(const Configuration& cfg, const Instance& inst);

}  // namespace ringform
