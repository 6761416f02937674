// core.cpp -- ring geometry, instance document parsing and validity checking.

#include "ringform/core.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <optional>
#include <sstream>

namespace ringform {

std::string_view to_string(Problem kind) {
  switch (kind) {
    case Problem::P1: return "P1";
    case Problem::P2Restricted: return "P2";
    case Problem::P3: return "P3";
  }
  return "?";
}

Configuration::Configuration(int k, int p, std::vector<Agent> agents)
    : k_(k), p_(p), agents_(std::move(agents)) {
  if (k < 1 || p < 1) throw std::invalid_argument("ring needs k >= 1 and p >= 1");
  if (static_cast<int>(agents_.size()) != k * p)
    throw std::invalid_argument("n != k*p: " + std::to_string(agents_.size()) + " agents for k=" +
                                std::to_string(k) + ", p=" + std::to_string(p));
}

Configuration Configuration::from_colours(int k, int p, std::span<const Colour> colours) {
  std::vector<Agent> agents;
  agents.reserve(colours.size());
  for (std::size_t x = 0; x < colours.size(); ++x)
    agents.push_back({static_cast<AgentId>(x), colours[x]});
  return Configuration(k, p, std::move(agents));
}

std::span<const Agent> Configuration::block(int j) const {
  if (j < 1 || j > k_) throw std::out_of_range("block index " + std::to_string(j) + " not in [1, " + std::to_string(k_) + "]");
  return std::span<const Agent>(agents_).subspan(static_cast<std::size_t>(block_start(j)),
                                                  static_cast<std::size_t>(p_));
}

std::vector<Colour> Configuration::colours() const {
  std::vector<Colour> out;
  out.reserve(agents_.size());
  for (const auto& a : agents_) out.push_back(a.colour);
  return out;
}

CountVector counts(std::span<const Agent> agents, int q) {
  CountVector out(static_cast<std::size_t>(q), 0);
  for (const auto& a : agents) ++out[static_cast<std::size_t>(a.colour - 1)];
  return out;
}

CountVector counts(const Configuration& cfg, int block, int q) { return counts(cfg.block(block), q); }

CountVector totals(const Configuration& cfg, int q) { return counts(cfg.agents(), q); }

int RequirementSpec::min_required(Colour c) const {
  const auto& row = required[static_cast<std::size_t>(c - 1)];
  return *std::min_element(row.begin(), row.end());
}

int RequirementSpec::total_required(Colour c) const {
  const auto& row = required[static_cast<std::size_t>(c - 1)];
  return std::accumulate(row.begin(), row.end(), 0);
}

ParseError::ParseError(int line, std::string field, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + (field.empty() ? "" : " (" + field + ")") + ": " +
                         message),
      line_(line),
      field_(std::move(field)) {}

// ---------------------------------------------------------------------------
// Colour alphabet

namespace {
constexpr std::string_view kWideAlphabet = "123456789abcdefghijklmnopqrstuvwxyz";
}

char colour_symbol(Colour c, int q) {
  if (c < 1 || c > q) throw std::invalid_argument("colour " + std::to_string(c) + " out of range");
  if (q == 2) return c == 1 ? 'B' : 'R';
  return kWideAlphabet[static_cast<std::size_t>(c - 1)];
}

Colour parse_colour(char symbol, int q) {
  if (q < 2 || q > kMaxColours) throw std::invalid_argument("q must be in [2, 35]");
  if (q == 2) {
    if (symbol == 'B') return 1;
    if (symbol == 'R') return 2;
  } else {
    auto pos = kWideAlphabet.find(symbol);
    if (pos != std::string_view::npos && static_cast<int>(pos) < q) return static_cast<Colour>(pos) + 1;
  }
  throw std::invalid_argument(std::string("colour symbol '") + symbol + "' out of range for q=" + std::to_string(q));
}

std::vector<Colour> parse_colours(std::string_view text, int q) {
  std::vector<Colour> out;
  out.reserve(text.size());
  for (char ch : text) out.push_back(parse_colour(ch, q));
  return out;
}

std::string render(std::span<const Agent> agents, int q) {
  std::string out;
  out.reserve(agents.size());
  for (const auto& a : agents) out.push_back(colour_symbol(a.colour, q));
  return out;
}

std::string render(std::span<const Colour> colours, int q) {
  std::string out;
  out.reserve(colours.size());
  for (Colour c : colours) out.push_back(colour_symbol(c, q));
  return out;
}

std::string render(const Configuration& cfg, int q) { return render(cfg.agents(), q); }

// ---------------------------------------------------------------------------
// Instance document
//
//   kind: P1|P2|P3
//   k: <int>
//   p: <int>
//   q: <int>
//   generator: <free text>        (optional)
//   config: <k*p colour symbols>
//   requirements:                 (P1, P2: q rows of k integers)
//   patterns:                     (P3: k rows of p colour symbols)
//
// Blank lines and lines starting with '#' are ignored.

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

struct Field {
  int line = 0;
  std::string value;
};

struct Block {
  int line = 0;
  std::vector<std::pair<int, std::string>> rows;
};

int parse_int(const Field& f, std::string_view name) {
  int value = 0;
  auto v = std::string_view(f.value);
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), value);
  if (ec != std::errc{} || ptr != v.data() + v.size())
    throw ParseError(f.line, std::string(name), "expected an integer, got '" + f.value + "'");
  return value;
}

std::vector<std::vector<int>> derive_requirements(const std::vector<std::vector<Colour>>& patterns, int q) {
  const auto k = patterns.size();
  std::vector<std::vector<int>> req(static_cast<std::size_t>(q), std::vector<int>(k, 0));
  for (std::size_t j = 0; j < k; ++j)
    for (Colour c : patterns[j]) ++req[static_cast<std::size_t>(c - 1)][j];
  return req;
}

}  // namespace

Instance parse_instance(std::string_view text) {
  std::optional<Field> kind, k_field, p_field, q_field, config, generator;
  std::optional<Block> requirements, patterns;
  Block* open_block = nullptr;

  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = trim(text.substr(start, end - start));
    ++line_no;
    start = end + 1;
    if (line.empty() || line.front() == '#') {
      if (end == text.size()) break;
      continue;
    }

    auto colon = line.find(':');
    if (colon == std::string_view::npos) {
      if (open_block == nullptr) throw ParseError(line_no, "", "expected 'key: value', got '" + std::string(line) + "'");
      open_block->rows.emplace_back(line_no, std::string(line));
    } else {
      auto key = std::string(trim(line.substr(0, colon)));
      auto value = std::string(trim(line.substr(colon + 1)));
      open_block = nullptr;
      auto set = [&](std::optional<Field>& slot) {
        if (slot) throw ParseError(line_no, key, "duplicate field");
        slot = Field{line_no, value};
      };
      auto open = [&](std::optional<Block>& slot) {
        if (slot) throw ParseError(line_no, key, "duplicate field");
        if (!value.empty()) throw ParseError(line_no, key, "rows must follow on separate lines");
        slot = Block{line_no, {}};
        open_block = &*slot;
      };
      if (key == "kind") set(kind);
      else if (key == "k") set(k_field);
      else if (key == "p") set(p_field);
      else if (key == "q") set(q_field);
      else if (key == "config") set(config);
      else if (key == "generator") set(generator);
      else if (key == "requirements") open(requirements);
      else if (key == "patterns") open(patterns);
      else throw ParseError(line_no, key, "unknown field");
    }
    if (end == text.size()) break;
  }

  auto need = [&](const std::optional<Field>& f, const char* name) -> const Field& {
    if (!f) throw ParseError(line_no, name, "missing field");
    return *f;
  };

  Problem problem;
  const auto& kind_f = need(kind, "kind");
  if (kind_f.value == "P1") problem = Problem::P1;
  else if (kind_f.value == "P2") problem = Problem::P2Restricted;
  else if (kind_f.value == "P3") problem = Problem::P3;
  else throw ParseError(kind_f.line, "kind", "expected P1, P2 or P3, got '" + kind_f.value + "'");

  const auto& kf = need(k_field, "k");
  const auto& pf = need(p_field, "p");
  const auto& qf = need(q_field, "q");
  const int k = parse_int(kf, "k");
  const int p = parse_int(pf, "p");
  const int q = parse_int(qf, "q");
  if (k < 2) throw ParseError(kf.line, "k", "need at least 2 blocks");
  if (p < 1) throw ParseError(pf.line, "p", "block length must be positive");
  if (q < 2 || q > kMaxColours) throw ParseError(qf.line, "q", "q must be in [2, 35]");

  const auto& cf = need(config, "config");
  if (static_cast<long long>(cf.value.size()) != static_cast<long long>(k) * p)
    throw ParseError(cf.line, "config",
                     "n != k*p: config has " + std::to_string(cf.value.size()) + " agents, k*p = " +
                         std::to_string(k * p));
  std::vector<Colour> colours;
  try {
    colours = parse_colours(cf.value, q);
  } catch (const std::invalid_argument& e) {
    throw ParseError(cf.line, "config", e.what());
  }

  Instance inst;
  inst.q = q;
  inst.spec.kind = problem;
  inst.initial = Configuration::from_colours(k, p, colours);
  if (generator) inst.generator = generator->value;

  if (problem == Problem::P3) {
    if (requirements) throw ParseError(requirements->line, "requirements", "P3 instances take patterns, not requirements");
    if (!patterns) throw ParseError(line_no, "patterns", "missing field");
    if (static_cast<int>(patterns->rows.size()) != k)
      throw ParseError(patterns->line, "patterns",
                       "expected " + std::to_string(k) + " patterns, got " + std::to_string(patterns->rows.size()));
    for (const auto& [row_line, row] : patterns->rows) {
      if (static_cast<int>(row.size()) != p)
        throw ParseError(row_line, "patterns", "pattern '" + row + "' does not have length p=" + std::to_string(p));
      try {
        inst.spec.patterns.push_back(parse_colours(row, q));
      } catch (const std::invalid_argument& e) {
        throw ParseError(row_line, "patterns", e.what());
      }
    }
    inst.spec.required = derive_requirements(inst.spec.patterns, q);
  } else {
    if (patterns) throw ParseError(patterns->line, "patterns", "only P3 instances take patterns");
    if (!requirements) throw ParseError(line_no, "requirements", "missing field");
    if (static_cast<int>(requirements->rows.size()) != q)
      throw ParseError(requirements->line, "requirements",
                       "expected " + std::to_string(q) + " rows (one per colour), got " +
                           std::to_string(requirements->rows.size()));
    for (const auto& [row_line, row] : requirements->rows) {
      std::vector<int> values;
      std::istringstream in(row);
      std::string token;
      while (in >> token) {
        Field f{row_line, token};
        values.push_back(parse_int(f, "requirements"));
      }
      if (static_cast<int>(values.size()) != k)
        throw ParseError(row_line, "requirements",
                         "expected " + std::to_string(k) + " entries, got " + std::to_string(values.size()));
      inst.spec.required.push_back(std::move(values));
    }
  }
  return inst;
}

std::string serialize_instance(const Instance& inst) {
  std::ostringstream out;
  out << "kind: " << to_string(inst.spec.kind) << '\n';
  out << "k: " << inst.k() << '\n';
  out << "p: " << inst.p() << '\n';
  out << "q: " << inst.q << '\n';
  if (!inst.generator.empty()) out << "generator: " << inst.generator << '\n';
  out << "config: " << render(inst.initial, inst.q) << '\n';
  if (inst.spec.kind == Problem::P3) {
    out << "patterns:\n";
    for (const auto& pat : inst.spec.patterns) out << render(pat, inst.q) << '\n';
  } else {
    out << "requirements:\n";
    for (const auto& row : inst.spec.required) {
      for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
      out << '\n';
    }
  }
  return out.str();
}

Instance make_instance(Problem kind, int k, int p, int q, std::string_view config,
                       std::vector<std::vector<int>> required) {
  if (kind == Problem::P3) throw std::invalid_argument("use make_p3_instance for P3");
  if (static_cast<int>(required.size()) != q) throw std::invalid_argument("requirement matrix needs q rows");
  for (const auto& row : required)
    if (static_cast<int>(row.size()) != k) throw std::invalid_argument("requirement rows need k entries");
  Instance inst;
  inst.q = q;
  inst.spec.kind = kind;
  inst.spec.required = std::move(required);
  auto colours = parse_colours(config, q);
  inst.initial = Configuration::from_colours(k, p, colours);
  return inst;
}

Instance make_p3_instance(int k, int p, int q, std::string_view config, const std::vector<std::string>& patterns) {
  if (static_cast<int>(patterns.size()) != k) throw std::invalid_argument("need k patterns");
  Instance inst;
  inst.q = q;
  inst.spec.kind = Problem::P3;
  for (const auto& pat : patterns) {
    if (static_cast<int>(pat.size()) != p) throw std::invalid_argument("pattern length must equal p");
    inst.spec.patterns.push_back(parse_colours(pat, q));
  }
  inst.spec.required = derive_requirements(inst.spec.patterns, q);
  auto colours = parse_colours(config, q);
  inst.initial = Configuration::from_colours(k, p, colours);
  return inst;
}

// ---------------------------------------------------------------------------
// Validity

std::string ValidityReport::describe() const {
  std::ostringstream out;
  out << (valid ? "valid" : "invalid");
  for (const auto& c : colours)
    if (!c.ok) out << "\n  colour " << c.colour << ": present " << c.present << ", required " << c.required;
  for (const auto& p : problems) out << "\n  " << p;
  return out.str();
}

ValidityReport validate(const Instance& inst) {
  ValidityReport report;
  const int k = inst.k();
  const int p = inst.p();
  const int q = inst.q;
  const auto& spec = inst.spec;
  auto fail = [&](std::string msg) {
    report.valid = false;
    report.problems.push_back(std::move(msg));
  };

  for (int c = 1; c <= q; ++c)
    for (int j = 1; j <= k; ++j)
      if (spec(c, j) < 0)
        fail("negative requirement n_" + std::to_string(c) + "(" + std::to_string(j) + ")");

  const auto have = totals(inst.initial, q);
  for (int c = 1; c <= q; ++c) {
    ColourCheck check{c, have[static_cast<std::size_t>(c - 1)], spec.total_required(c), true};
    check.ok = spec.kind == Problem::P2Restricted ? check.present >= check.required : check.present == check.required;
    if (!check.ok) report.valid = false;
    report.colours.push_back(check);
  }

  for (int j = 1; j <= k; ++j) {
    int sum = 0;
    for (int c = 1; c <= q; ++c) sum += spec(c, j);
    const bool fits = spec.kind == Problem::P2Restricted ? sum <= p : sum == p;
    if (!fits)
      fail("block " + std::to_string(j) + ": requirements sum to " + std::to_string(sum) + " for p=" +
           std::to_string(p));
  }

  switch (spec.kind) {
    case Problem::P1:
      for (int c = 1; c < q; ++c)
        for (int j = 1; j <= k; ++j)
          if (spec(c, j) <= 0)
            fail("n_" + std::to_string(c) + "(" + std::to_string(j) + ") must be positive");
      break;
    case Problem::P2Restricted:
      for (int j = 1; j <= k; ++j) {
        if (spec(1, j) <= 0) fail("n_1(" + std::to_string(j) + ") must be positive");
        for (int c = 2; c <= q; ++c)
          if (spec(c, j) != 0)
            fail("restricted P2 allows no lower bound on colour " + std::to_string(c));
      }
      report.extra = have[0] - spec.total_required(1);
      break;
    case Problem::P3:
      for (int j = 1; j <= k; ++j)
        for (int c = 1; c <= q; ++c)
          if (spec(c, j) <= 0)
            fail("pattern " + std::to_string(j) + " lacks colour " + std::to_string(c));
      break;
  }
  return report;
}

bool target_reached(const Configuration& cfg, const Instance& inst) {
  const auto& spec = inst.spec;
  for (int j = 1; j <= cfg.k(); ++j) {
    auto block = cfg.block(j);
    switch (spec.kind) {
      case Problem::P1: {
        auto have = counts(block, inst.q);
        for (int c = 1; c <= inst.q; ++c)
          if (have[static_cast<std::size_t>(c - 1)] != spec(c, j)) return false;
        break;
      }
      case Problem::P2Restricted: {
        auto blues = std::count_if(block.begin(), block.end(), [](const Agent& a) { return a.colour == 1; });
        if (blues < spec(1, j)) return false;
        break;
      }
      case Problem::P3: {
        const auto& pattern = spec.patterns[static_cast<std::size_t>(j - 1)];
        for (std::size_t x = 0; x < block.size(); ++x)
          if (block[x].colour != pattern[x]) return false;
        break;
      }
    }
  }
  return true;
}

}  // namespace ringform
