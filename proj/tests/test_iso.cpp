#include "doctest.h"

#include "gpeng/iso.hpp"

#include <string>
#include <vector>

#include "gpeng/rng.hpp"
#include "gpeng/verify.hpp"

using namespace gpeng;

namespace {

Label lab(Value v, Mark m = Mark::none) { return Label{std::move(v), m}; }

HostGraph cycle(int n, const std::string& prefix) {
    HostGraph g;
    for (int i = 0; i < n; ++i) {
        g.add_node(prefix + std::to_string(i), lab({}));
    }
    for (int i = 0; i < n; ++i) {
        g.add_edge(prefix + "e" + std::to_string(i),
                   prefix + std::to_string(i),
                   prefix + std::to_string((i + 1) % n), lab({}));
    }
    return g;
}

/// Same graph under a different naming, with edge ids scrambled too.
HostGraph renamed(const HostGraph& g, const std::string& prefix) {
    HostGraph out;
    std::map<NodeId, NodeId> name;
    int i = 0;
    for (const auto& [id, label] : g.nodes()) {
        name[id] = prefix + std::to_string(997 - i);
        out.add_node(name[id], label);
        ++i;
    }
    int j = 0;
    for (const auto& [id, e] : g.edges()) {
        out.add_edge(prefix + "x" + std::to_string(499 - j), name[e.source],
                     name[e.target], e.label);
        ++j;
    }
    return out;
}

} // namespace

TEST_CASE("renaming preserves isomorphism") {
    HostGraph g = cycle(5, "a");
    HostGraph h = renamed(g, "b");
    CHECK(isomorphic(g, h));
    CHECK(canonical_key(g) == canonical_key(h));
}

TEST_CASE("direction matters") {
    HostGraph path;
    path.add_node("a", lab({}));
    path.add_node("b", lab({}));
    path.add_node("c", lab({}));
    path.add_edge("e1", "a", "b", lab({}));
    path.add_edge("e2", "b", "c", lab({}));

    HostGraph fork = path;
    fork.remove_edge("e2");
    fork.add_edge("e2", "c", "b", lab({}));

    CHECK_FALSE(isomorphic(path, fork));
    CHECK(canonical_key(path) != canonical_key(fork));
}

TEST_CASE("labels and marks matter") {
    HostGraph g;
    g.add_node("a", lab({std::int64_t{1}}));
    HostGraph h;
    h.add_node("z", lab({std::int64_t{2}}));
    CHECK_FALSE(isomorphic(g, h));

    HostGraph m;
    m.add_node("z", lab({std::int64_t{1}}, Mark::red));
    CHECK_FALSE(isomorphic(g, m));
    CHECK(canonical_key(g) != canonical_key(m));

    h.set_node_label("z", lab({std::int64_t{1}}));
    CHECK(isomorphic(g, h));
}

TEST_CASE("parallel edge multiplicity matters") {
    HostGraph one;
    one.add_node("a", lab({}));
    one.add_node("b", lab({}));
    one.add_edge("e1", "a", "b", lab({}));

    HostGraph two = one;
    two.add_edge("e2", "a", "b", lab({}));

    CHECK_FALSE(isomorphic(one, two));
    CHECK(canonical_key(one) != canonical_key(two));

    HostGraph two2;
    two2.add_node("p", lab({}));
    two2.add_node("q", lab({}));
    two2.add_edge("u", "q", "p", lab({}));
    two2.add_edge("v", "q", "p", lab({}));
    CHECK(isomorphic(two, two2));
    CHECK(canonical_key(two) == canonical_key(two2));
}

TEST_CASE("size mismatches are cheap rejections") {
    HostGraph g = cycle(4, "a");
    HostGraph h = cycle(5, "b");
    CHECK_FALSE(isomorphic(g, h));
    CHECK_FALSE(isomorphic(HostGraph{}, g));
    CHECK(isomorphic(HostGraph{}, HostGraph{}));
    CHECK(canonical_key(HostGraph{}) == canonical_key(HostGraph{}));
}

TEST_CASE("two cycles of equal total size differ from one") {
    HostGraph two = cycle(3, "a");
    HostGraph other = cycle(3, "b");
    for (const auto& [id, label] : other.nodes()) {
        two.add_node(id, label);
    }
    for (const auto& [id, e] : other.edges()) {
        two.add_edge(id, e.source, e.target, e.label);
    }
    HostGraph one = cycle(6, "c");
    CHECK(two.node_count() == one.node_count());
    CHECK(two.edge_count() == one.edge_count());
    CHECK_FALSE(isomorphic(two, one));
    CHECK(canonical_key(two) != canonical_key(one));
}

TEST_CASE("canonical_key enforces its node cap") {
    HostGraph g;
    for (int i = 0; i < 5; ++i) {
        g.add_node("n" + std::to_string(i), lab({}));
    }
    CanonicalOptions opts;
    opts.max_nodes = 4;
    CHECK_THROWS_AS(canonical_key(g, opts), LimitError);
    opts.max_nodes = 5;
    CHECK_NOTHROW(canonical_key(g, opts));
}

TEST_CASE("the two deciders agree on random graph pairs") {
    // isomorphic() and canonical_key() are written independently; random
    // pairs, some equal up to renaming and some freshly drawn, must get
    // the same verdict from both.
    Rng rng(42);
    int agreed_equal = 0;
    for (int trial = 0; trial < 60; ++trial) {
        HostGraph a = random_digraph(rng, 6, true);
        HostGraph b = rng.below(2) == 0 ? renamed(a, "r")
                                        : random_digraph(rng, 6, true);
        bool iso = isomorphic(a, b);
        bool keys = canonical_key(a) == canonical_key(b);
        CHECK(iso == keys);
        if (iso) ++agreed_equal;
    }
    // the renamed half guarantees plenty of positive cases
    CHECK(agreed_equal >= 20);
}
