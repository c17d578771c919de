#ifndef SNC_GUARD_SNC_REPORT_HH
#define SNC_GUARD_SNC_REPORT_HH 1

#include <snc/criminal_filter.hh>
#include <snc/digraph.hh>
#include <snc/search.hh>

#include <string>

namespace snc
{
    auto tool_version() -> std::string;

    /// Plain table: one "vertex n1 n2 anti_satisfaction satisfactory" row per
    /// vertex and a closing summary line.
    auto render_profile_table(const Digraph & g) -> std::string;
    auto render_profile_json(const Digraph & g) -> std::string;

    auto render_filter_report(const FilterReport & report) -> std::string;

    /// JSON search report. The "runtime" block (worker count, elapsed time) is
    /// the only part that may differ between repeated runs of one spec; leave
    /// it out to get output that compares byte-for-byte.
    auto render_search_report(const SearchReport & report, bool include_runtime = true) -> std::string;
}

#endif
