#ifndef GPENG_LABEL_HPP
#define GPENG_LABEL_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "gpeng/errors.hpp"

namespace gpeng {

/// A list entry: a 64-bit signed integer or a printable string.
/// Strings may not contain double quotes or newlines.
using Atom = std::variant<std::int64_t, std::string>;

/// Host labels and evaluated expressions are lists of atoms; the empty
/// list is the label of "unlabelled" items.
using Value = std::vector<Atom>;

enum class Mark {
    none,
    red,
    green,
    blue,
    grey,   // nodes only
    dashed, // edges only
};

inline bool is_int(const Atom& a) { return std::holds_alternative<std::int64_t>(a); }
inline bool is_string(const Atom& a) { return std::holds_alternative<std::string>(a); }
inline std::int64_t as_int(const Atom& a) { return std::get<std::int64_t>(a); }
inline const std::string& as_string(const Atom& a) { return std::get<std::string>(a); }

bool valid_atom_string(const std::string& s);

const char* mark_name(Mark m);
bool mark_from_name(const std::string& name, Mark& out);
bool mark_allowed_on_node(Mark m);
bool mark_allowed_on_edge(Mark m);

struct Label {
    Value list;
    Mark mark = Mark::none;

    bool operator==(const Label&) const = default;
    auto operator<=>(const Label&) const = default;
};

std::string atom_to_string(const Atom& a);

/// Prints "empty" for the empty list, otherwise colon-joined atoms.
std::string value_to_string(const Value& v);

/// Label text as it appears in graph files, e.g. `5:3 #grey`.
std::string label_to_string(const Label& l);

} // namespace gpeng

#endif // GPENG_LABEL_HPP
