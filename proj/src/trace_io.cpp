// trace_io.cpp

#include "ringform/trace_io.hpp"

#include <istream>
#include <ostream>

#include "json.hpp"

namespace ringform {

using nlohmann::json;

void write_trace(std::ostream& out, const Instance& inst, const EngineOptions& opts, const RunResult& result) {
  json header = {{"type", "header"},
                 {"format", kTraceFormat},
                 {"instance", serialize_instance(inst)},
                 {"max_rounds", opts.max_rounds < 0 ? default_max_rounds(inst) : opts.max_rounds},
                 {"q_colour_cap", opts.q_colour_cap}};
  header["initial_distance"] = result.initial_distance ? json(*result.initial_distance) : json(nullptr);
  out << header.dump() << '\n';

  for (const auto& round : result.trace) {
    json moves = json::array();
    for (const auto& m : round.moves) moves.push_back({m.agent, m.from, m.to});
    json rec = {{"type", "round"},     {"round", round.round},   {"offset", round.offset},
                {"moves", moves},      {"counts", round.counts}, {"ok", round.violations.empty()},
                {"violations", round.violations}};
    rec["d"] = round.distance ? json(*round.distance) : json(nullptr);
    out << rec.dump() << '\n';
  }

  json summary = {{"type", "summary"},
                  {"terminated", result.terminated},
                  {"rounds_used", result.rounds_used},
                  {"bound", result.bound.value},
                  {"bound_tight", result.bound.tight},
                  {"bound_satisfied", result.rounds_used <= result.bound.value},
                  {"final", render(result.final, inst.q)}};
  out << summary.dump() << '\n';
}

TraceFile read_trace(std::istream& in) {
  TraceFile file;
  std::string line;
  int line_no = 0;
  bool have_header = false, have_summary = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    auto where = [&](const std::string& msg) { return TraceFormatError("trace line " + std::to_string(line_no) + ": " + msg); };
    json rec;
    try {
      rec = json::parse(line);
      const auto type = rec.at("type").get<std::string>();
      if (have_summary) throw where("record after the summary");
      if (type == "header") {
        if (have_header) throw where("duplicate header");
        if (rec.at("format").get<std::string>() != kTraceFormat) throw where("unsupported trace format");
        file.instance = parse_instance(rec.at("instance").get<std::string>());
        file.options.max_rounds = rec.at("max_rounds").get<long long>();
        file.options.q_colour_cap = rec.value("q_colour_cap", false);
        if (!rec.at("initial_distance").is_null())
          file.result.initial_distance = rec.at("initial_distance").get<long long>();
        have_header = true;
      } else if (type == "round") {
        if (!have_header) throw where("round before header");
        RoundTrace round;
        round.round = rec.at("round").get<int>();
        round.offset = rec.at("offset").get<int>();
        for (const auto& m : rec.at("moves")) round.moves.push_back({m.at(0).get<int>(), m.at(1).get<int>(), m.at(2).get<int>()});
        round.counts = rec.at("counts").get<std::vector<CountVector>>();
        if (!rec.at("d").is_null()) round.distance = rec.at("d").get<long long>();
        round.violations = rec.value("violations", std::vector<std::string>{});
        file.result.trace.push_back(std::move(round));
      } else if (type == "summary") {
        if (!have_header) throw where("summary before header");
        file.result.terminated = rec.at("terminated").get<bool>();
        file.result.rounds_used = rec.at("rounds_used").get<long long>();
        file.result.bound = {rec.at("bound").get<long long>(), rec.at("bound_tight").get<bool>()};
        const auto final_text = rec.at("final").get<std::string>();
        // The final ring with identities is rebuilt from the moves and must
        // agree with the recorded string. Moves that do not replay are kept
        // as-is for the safety checker to report.
        try {
          Configuration replayed = file.instance.initial;
          for (const auto& r : file.result.trace) replayed = apply_moves(replayed, r.moves);
          if (render(replayed, file.instance.q) != final_text) throw where("final ring does not match the recorded moves");
          file.result.final = std::move(replayed);
        } catch (const CollisionError&) {
          file.result.final = Configuration::from_colours(file.instance.k(), file.instance.p(),
                                                          parse_colours(final_text, file.instance.q));
        }
        have_summary = true;
      } else {
        throw where("unknown record type '" + type + "'");
      }
    } catch (const TraceFormatError&) {
      throw;
    } catch (const std::exception& e) {
      throw where(e.what());
    }
  }
  if (!have_header) throw TraceFormatError("trace has no header");
  if (!have_summary) throw TraceFormatError("trace has no summary");
  return file;
}

}  // namespace ringform
