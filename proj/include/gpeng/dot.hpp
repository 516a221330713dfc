#ifndef GPENG_DOT_HPP
#define GPENG_DOT_HPP

#include <string>

#include "gpeng/graph.hpp"

namespace gpeng {

/// Graphviz rendering of a host graph. Grey becomes a filled node, red,
/// green and blue become border respectively edge colours, and dashed
/// becomes the dashed edge style.
std::string to_dot(const HostGraph& g);

} // namespace gpeng

#endif // GPENG_DOT_HPP
