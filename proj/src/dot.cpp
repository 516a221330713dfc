#include "gpeng/dot.hpp"

namespace gpeng {

namespace {

std::string escape(const std::string& text) {
    std::string out;
    for (char c : text) {
        if (c == '"' || c == '\\') {
            out += '\\';
        }
        out += c;
    }
    return out;
}

std::string colour_attrs(Mark mark, bool node) {
    switch (mark) {
    case Mark::none:
        return "";
    case Mark::red:
        return ", color=red";
    case Mark::green:
        return ", color=green";
    case Mark::blue:
        return ", color=blue";
    case Mark::grey:
        return ", style=filled, fillcolor=gray";
    case Mark::dashed:
        return node ? "" : ", style=dashed";
    }
    return "";
}

} // namespace

std::string to_dot(const HostGraph& g) {
    std::string out = "digraph host {\n";
    for (const auto& [id, label] : g.nodes()) {
        out += "  \"" + escape(id) + "\" [label=\"" + escape(id) + "\\n" +
               escape(value_to_string(label.list)) + "\"" +
               colour_attrs(label.mark, true) + "];\n";
    }
    for (const auto& [id, e] : g.edges()) {
        out += "  \"" + escape(e.source) + "\" -> \"" + escape(e.target) +
               "\" [label=\"" + escape(value_to_string(e.label.list)) + "\"" +
               colour_attrs(e.label.mark, false) + "];\n";
    }
    out += "}\n";
    return out;
}

} // namespace gpeng
