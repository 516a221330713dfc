#include "gpeng/label.hpp"

#include <sstream>

namespace gpeng {

bool valid_atom_string(const std::string& s) {
    for (unsigned char c : s) {
        if (c < 0x20 || c > 0x7e) return false;
        if (c == '"') return false;
    }
    return true;
}

const char* mark_name(Mark m) {
    switch (m) {
        case Mark::none: return "none";
        case Mark::red: return "red";
        case Mark::green: return "green";
        case Mark::blue: return "blue";
        case Mark::grey: return "grey";
        case Mark::dashed: return "dashed";
    }
    return "none";
}

bool mark_from_name(const std::string& name, Mark& out) {
    if (name == "none") { out = Mark::none; return true; }
    if (name == "red") { out = Mark::red; return true; }
    if (name == "green") { out = Mark::green; return true; }
    if (name == "blue") { out = Mark::blue; return true; }
    if (name == "grey") { out = Mark::grey; return true; }
    if (name == "dashed") { out = Mark::dashed; return true; }
    return false;
}

bool mark_allowed_on_node(Mark m) { return m != Mark::dashed; }
bool mark_allowed_on_edge(Mark m) { return m != Mark::grey; }

std::string atom_to_string(const Atom& a) {
    if (is_int(a)) return std::to_string(as_int(a));
    return "\"" + as_string(a) + "\"";
}

std::string value_to_string(const Value& v) {
    if (v.empty()) return "empty";
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) out << ':';
        out << atom_to_string(v[i]);
    }
    return out.str();
}

std::string label_to_string(const Label& l) {
    std::string s = value_to_string(l.list);
    if (l.mark != Mark::none) {
        s += " #";
        s += mark_name(l.mark);
    }
    return s;
}

} // namespace gpeng
