#ifndef GPENG_GRAPH_IO_HPP
#define GPENG_GRAPH_IO_HPP

#include <string>

#include "gpeng/graph.hpp"

namespace gpeng {

/// Reads the line-oriented graph format:
///
///     node <id> <label>
///     edge <id> <source> <target> <label>
///
/// A label is `empty` or a colon-separated list of integers and quoted
/// strings, optionally followed by `#<mark>`. Blank lines and `//`
/// comments are skipped. Declaration order is free; endpoints are
/// checked once the whole file is read.
HostGraph parse_host_graph(const std::string& text,
                           const std::string& filename = "<string>");

/// Canonical text form: nodes sorted by id, then edges sorted by id,
/// one per line, single-space separated. parse(print(g)) == g, and
/// print(parse(t)) == t for any t already in canonical form.
std::string print_host_graph(const HostGraph& g);

HostGraph load_host_graph(const std::string& path);
void save_host_graph(const HostGraph& g, const std::string& path);

} // namespace gpeng

#endif // GPENG_GRAPH_IO_HPP
