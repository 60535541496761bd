#pragma once

#include <cstdint>

namespace gvd {

// Work counters behind the query-cost budget assertions. Thread-local so
// parallel scans do not contend; callers aggregate explicitly.
struct Counters {
  std::uint64_t dijkstra_runs = 0;
  std::uint64_t tri_queries = 0;
  std::uint64_t tri_probes = 0;        // structure accesses inside tri searches
  std::uint64_t vd_constructions = 0;
  std::uint64_t vd_tri_calls = 0;      // tri queries issued by the running construct_vd
  std::uint64_t max_queries = 0;
  std::uint64_t max_probes = 0;        // structure accesses inside farthest_in_cell
  std::uint64_t family_builds = 0;

  void add(const Counters& o) {
    dijkstra_runs += o.dijkstra_runs;
    tri_queries += o.tri_queries;
    tri_probes += o.tri_probes;
    vd_constructions += o.vd_constructions;
    vd_tri_calls += o.vd_tri_calls;
    max_queries += o.max_queries;
    max_probes += o.max_probes;
    family_builds += o.family_builds;
  }
  void reset() { *this = Counters{}; }
};

Counters& counters();  // this thread's counters

}  // namespace gvd
