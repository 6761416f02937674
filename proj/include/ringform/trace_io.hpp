// trace_io.hpp -- JSON-lines run traces.
//
// Line 1 is a header carrying the instance document; then one record per
// round; the last line is the summary:
//
//   {"type":"header","format":"ringform-trace/1","instance":"kind: P1\n...","max_rounds":80,
//    "q_colour_cap":false,"initial_distance":1}
//   {"type":"round","round":1,"offset":1,"moves":[[3,2,1],...],"counts":[[1,1],[1,1]],"d":0,"ok":true,
//    "violations":[]}
//   {"type":"summary","terminated":true,"rounds_used":1,"bound":10,"bound_tight":true,
//    "bound_satisfied":true,"final":"BRRB"}

#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "ringform/engine.hpp"

namespace ringform {

inline constexpr const char* kTraceFormat = "ringform-trace/1";

struct TraceFile {
  Instance instance;
  EngineOptions options;
  RunResult result;
};

class TraceFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void write_trace(std::ostream& out, const Instance& inst, const EngineOptions& opts, const RunResult& result);

/// Throws TraceFormatError (with the line number) on malformed input.
TraceFile read_trace(std::istream& in);

}  // namespace ringform
