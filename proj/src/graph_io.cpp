#include "gpeng/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace gpeng {

namespace {

bool word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

struct LineScanner {
    const std::string& file;
    int line;
    const std::string& text;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg,
                           std::vector<std::string> expected = {}) const {
        throw ParseError(file, line, static_cast<int>(pos) + 1, msg,
                         std::move(expected));
    }

    void skip_space() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) {
            ++pos;
        }
    }

    /// True at end of line or at the start of a // comment.
    bool at_end() {
        skip_space();
        if (pos + 1 < text.size() && text[pos] == '/' && text[pos + 1] == '/') {
            return true;
        }
        return pos >= text.size();
    }

    char peek() {
        skip_space();
        return pos < text.size() ? text[pos] : '\0';
    }

    std::string word(const std::string& what) {
        skip_space();
        std::size_t start = pos;
        while (pos < text.size() && word_char(text[pos])) ++pos;
        if (pos == start) fail("expected " + what);
        return text.substr(start, pos - start);
    }

    std::int64_t integer() {
        skip_space();
        std::size_t start = pos;
        if (pos < text.size() && text[pos] == '-') ++pos;
        while (pos < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[pos]))) {
            ++pos;
        }
        std::int64_t value = 0;
        auto [end, ec] = std::from_chars(text.data() + start, text.data() + pos,
                                         value);
        if (ec == std::errc::result_out_of_range) {
            pos = start;
            fail("integer literal out of range");
        }
        if (ec != std::errc() || end != text.data() + pos) {
            pos = start;
            fail("expected integer");
        }
        return value;
    }

    std::string quoted_string() {
        skip_space();
        if (pos >= text.size() || text[pos] != '"') fail("expected '\"'");
        std::size_t start = ++pos;
        while (pos < text.size() && text[pos] != '"') ++pos;
        if (pos >= text.size()) {
            pos = start - 1;
            fail("unterminated string literal");
        }
        std::string s = text.substr(start, pos - start);
        ++pos;
        if (!valid_atom_string(s)) {
            pos = start - 1;
            fail("string literal contains non-printable characters");
        }
        return s;
    }
};

Atom parse_atom(LineScanner& s) {
    char c = s.peek();
    if (c == '"') return s.quoted_string();
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
        return s.integer();
    }
    s.fail("expected an integer, a quoted string or 'empty'");
}

Label parse_label(LineScanner& s) {
    Label label;
    if (s.at_end()) s.fail("expected a label");
    bool empty_keyword = false;
    if (word_char(s.peek()) &&
        !std::isdigit(static_cast<unsigned char>(s.peek()))) {
        std::string w = s.word("label");
        if (w != "empty") {
            s.fail("expected 'empty' or an atom list, got '" + w + "'");
        }
        empty_keyword = true;
    }
    if (!empty_keyword) {
        label.list.push_back(parse_atom(s));
        while (s.peek() == ':') {
            ++s.pos;
            label.list.push_back(parse_atom(s));
        }
    }
    if (s.peek() == '#') {
        ++s.pos;
        std::string name = s.word("mark name");
        Mark mark = Mark::none;
        if (name == "none" || !mark_from_name(name, mark)) {
            s.fail("unknown mark '" + name + "'",
                   {"red", "green", "blue", "grey", "dashed"});
        }
        label.mark = mark;
    }
    return label;
}

} // namespace

HostGraph parse_host_graph(const std::string& text,
                           const std::string& filename) {
    struct PendingNode { NodeSpec spec; int line; };
    struct PendingEdge { EdgeSpec spec; int line; };
    std::vector<PendingNode> nodes;
    std::vector<PendingEdge> edges;

    std::istringstream in(text);
    std::string linetext;
    int lineno = 0;
    while (std::getline(in, linetext)) {
        ++lineno;
        if (!linetext.empty() && linetext.back() == '\r') linetext.pop_back();
        LineScanner s{filename, lineno, linetext};
        if (s.at_end()) continue;
        std::string kind = s.word("'node' or 'edge'");
        if (kind == "node") {
            std::string id = s.word("node id");
            Label label = parse_label(s);
            if (!s.at_end()) s.fail("unexpected trailing input");
            nodes.push_back({{id, label}, lineno});
        } else if (kind == "edge") {
            std::string id = s.word("edge id");
            std::string src = s.word("source node id");
            std::string tgt = s.word("target node id");
            Label label = parse_label(s);
            if (!s.at_end()) s.fail("unexpected trailing input");
            edges.push_back({{id, src, tgt, label}, lineno});
        } else {
            s.pos = 0;
            s.fail("expected 'node' or 'edge', got '" + kind + "'",
                   {"node", "edge"});
        }
    }

    HostGraph g;
    for (const auto& [spec, line] : nodes) {
        try {
            g.add_node(spec.id, spec.label);
        } catch (const GraphError& e) {
            throw ParseError(filename, line, 1, e.what());
        }
    }
    for (const auto& [spec, line] : edges) {
        try {
            g.add_edge(spec.id, spec.source, spec.target, spec.label);
        } catch (const GraphError& e) {
            throw ParseError(filename, line, 1, e.what());
        }
    }
    return g;
}

std::string print_host_graph(const HostGraph& g) {
    std::ostringstream out;
    for (const auto& [id, label] : g.nodes()) {
        out << "node " << id << ' ' << label_to_string(label) << '\n';
    }
    for (const auto& [id, e] : g.edges()) {
        out << "edge " << id << ' ' << e.source << ' ' << e.target << ' '
            << label_to_string(e.label) << '\n';
    }
    return out.str();
}

HostGraph load_host_graph(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(Errc::io_error, "cannot open '" + path + "' for reading");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_host_graph(buf.str(), path);
}

void save_host_graph(const HostGraph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(Errc::io_error, "cannot open '" + path + "' for writing");
    }
    out << print_host_graph(g);
    if (!out) {
        throw Error(Errc::io_error, "failed writing '" + path + "'");
    }
}

} // namespace gpeng
