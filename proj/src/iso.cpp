#include "gpeng/iso.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <utility>

namespace gpeng {

namespace {

// ---------------------------------------------------------------------------
// isomorphic(): backtracking over node bijections.

struct FlatGraph {
    std::vector<std::string> labels;
    // Sorted edge-label lists per ordered node pair (loops included).
    std::map<std::pair<int, int>, std::vector<std::string>> pair_labels;
    std::vector<int> indeg, outdeg;
    std::vector<std::vector<int>> out_nbrs, in_nbrs;
};

FlatGraph flatten(const HostGraph& g) {
    FlatGraph f;
    std::map<NodeId, int> index;
    for (const auto& [id, label] : g.nodes()) {
        index.emplace(id, static_cast<int>(f.labels.size()));
        f.labels.push_back(label_to_string(label));
    }
    int n = static_cast<int>(f.labels.size());
    f.indeg.assign(n, 0);
    f.outdeg.assign(n, 0);
    f.out_nbrs.assign(n, {});
    f.in_nbrs.assign(n, {});
    for (const auto& [id, e] : g.edges()) {
        int s = index.at(e.source);
        int t = index.at(e.target);
        f.pair_labels[{s, t}].push_back(label_to_string(e.label));
        ++f.outdeg[s];
        ++f.indeg[t];
        f.out_nbrs[s].push_back(t);
        f.in_nbrs[t].push_back(s);
    }
    for (auto& [pair, labels] : f.pair_labels) {
        std::sort(labels.begin(), labels.end());
    }
    return f;
}

/// Per-node invariant that any isomorphism must preserve.
std::string node_signature(const FlatGraph& f, int v) {
    std::ostringstream sig;
    sig << f.labels[v] << '\x1f' << f.indeg[v] << '\x1f' << f.outdeg[v];
    auto it = f.pair_labels.find({v, v});
    if (it != f.pair_labels.end()) {
        for (const std::string& l : it->second) sig << '\x1f' << l;
    }
    return sig.str();
}

const std::vector<std::string>* labels_between(const FlatGraph& f, int u, int v) {
    auto it = f.pair_labels.find({u, v});
    return it == f.pair_labels.end() ? nullptr : &it->second;
}

bool same_labels_between(const FlatGraph& a, int au, int av,
                         const FlatGraph& b, int bu, int bv) {
    const auto* la = labels_between(a, au, av);
    const auto* lb = labels_between(b, bu, bv);
    if (la == nullptr || lb == nullptr) return la == lb;
    return *la == *lb;
}

struct IsoSearch {
    const FlatGraph& a;
    const FlatGraph& b;
    std::vector<int> order;        // a-nodes, most constrained first
    std::vector<int> a_to_b;       // -1 while unassigned
    std::vector<bool> b_used;

    bool compatible(int u, int v) const {
        for (int w = 0; w < static_cast<int>(a_to_b.size()); ++w) {
            int x = (w == u) ? v : a_to_b[w];
            if (x < 0) continue;
            if (!same_labels_between(a, u, w, b, v, x)) return false;
            if (w != u && !same_labels_between(a, w, u, b, x, v)) return false;
        }
        return true;
    }

    bool extend(std::size_t depth, const std::vector<std::vector<int>>& cand) {
        if (depth == order.size()) return true;
        int u = order[depth];
        for (int v : cand[u]) {
            if (b_used[v] || !compatible(u, v)) continue;
            a_to_b[u] = v;
            b_used[v] = true;
            if (extend(depth + 1, cand)) return true;
            a_to_b[u] = -1;
            b_used[v] = false;
        }
        return false;
    }
};

// ---------------------------------------------------------------------------
// canonical_key(): refinement and individualization.

struct CanonGraph {
    int n = 0;
    std::vector<int> node_label;                       // index into label_names
    std::vector<std::vector<std::pair<int, int>>> out; // v -> (target, edge label)
    std::vector<std::vector<std::pair<int, int>>> in;  // v -> (source, edge label)
    std::vector<std::tuple<int, int, int>> edges;      // (source, target, edge label)
    std::vector<std::string> node_label_names;
    std::vector<std::string> edge_label_names;
};

/// Label ids must not leak naming order into the certificate, so they
/// are assigned by sorting the distinct label texts: the numbering then
/// depends only on which labels occur, which isomorphic graphs share.
CanonGraph canon_flatten(const HostGraph& g) {
    CanonGraph c;
    std::set<std::string> node_texts, edge_texts;
    for (const auto& [id, label] : g.nodes()) {
        node_texts.insert(label_to_string(label));
    }
    for (const auto& [id, e] : g.edges()) {
        edge_texts.insert(label_to_string(e.label));
    }
    std::map<std::string, int> node_ids, edge_ids;
    for (const std::string& text : node_texts) {
        node_ids.emplace(text, static_cast<int>(c.node_label_names.size()));
        c.node_label_names.push_back(text);
    }
    for (const std::string& text : edge_texts) {
        edge_ids.emplace(text, static_cast<int>(c.edge_label_names.size()));
        c.edge_label_names.push_back(text);
    }

    std::map<NodeId, int> index;
    for (const auto& [id, label] : g.nodes()) {
        index.emplace(id, c.n++);
        c.node_label.push_back(node_ids.at(label_to_string(label)));
    }
    c.out.assign(c.n, {});
    c.in.assign(c.n, {});
    for (const auto& [id, e] : g.edges()) {
        int s = index.at(e.source);
        int t = index.at(e.target);
        int l = edge_ids.at(label_to_string(e.label));
        c.out[s].push_back({t, l});
        c.in[t].push_back({s, l});
        c.edges.push_back({s, t, l});
    }
    return c;
}

/// Splits colour classes by label and neighbourhood structure until the
/// partition is stable. Class numbering is derived from a sort of the
/// signatures, so it depends only on the isomorphism class.
void refine(const CanonGraph& g, std::vector<int>& colour) {
    int n = g.n;
    for (;;) {
        std::vector<std::vector<int>> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int>& s = sig[v];
            s.push_back(colour[v]);
            s.push_back(g.node_label[v]);
            std::vector<std::pair<int, int>> out, in;
            for (auto [t, l] : g.out[v]) out.push_back({l, colour[t]});
            for (auto [u, l] : g.in[v]) in.push_back({l, colour[u]});
            std::sort(out.begin(), out.end());
            std::sort(in.begin(), in.end());
            s.push_back(-1);
            for (auto [l, cl] : out) { s.push_back(l); s.push_back(cl); }
            s.push_back(-2);
            for (auto [l, cl] : in) { s.push_back(l); s.push_back(cl); }
        }
        std::map<std::vector<int>, int> rank;
        for (const auto& s : sig) rank.emplace(s, 0);
        int next = 0;
        for (auto& [key, r] : rank) r = next++;
        bool changed = false;
        for (int v = 0; v < n; ++v) {
            int c = rank.at(sig[v]);
            if (c != colour[v]) changed = true;
            colour[v] = c;
        }
        if (!changed) return;
    }
}

bool discrete(const std::vector<int>& colour) {
    std::vector<bool> seen(colour.size(), false);
    for (int c : colour) {
        if (c < 0 || c >= static_cast<int>(colour.size()) || seen[c]) return false;
        seen[c] = true;
    }
    return true;
}

std::string leaf_certificate(const CanonGraph& g, const std::vector<int>& colour) {
    std::ostringstream cert;
    cert << "n " << g.n << '\n';
    std::vector<int> at(g.n);
    for (int v = 0; v < g.n; ++v) at[colour[v]] = v;
    for (int p = 0; p < g.n; ++p) {
        cert << "v " << p << ' ' << g.node_label_names[g.node_label[at[p]]] << '\n';
    }
    std::vector<std::tuple<int, int, std::string>> lines;
    for (auto [s, t, l] : g.edges) {
        lines.push_back({colour[s], colour[t], g.edge_label_names[l]});
    }
    std::sort(lines.begin(), lines.end());
    for (auto& [s, t, l] : lines) {
        cert << "e " << s << ' ' << t << ' ' << l << '\n';
    }
    return cert.str();
}

struct CanonSearch {
    const CanonGraph& g;
    const CanonicalOptions& opts;
    std::string best;
    bool have_best = false;
    std::size_t leaves = 0;

    void run(std::vector<int> colour) {
        refine(g, colour);
        if (discrete(colour)) {
            if (++leaves > opts.max_leaves) {
                throw LimitError(Errc::size_limit,
                                 "canonical key search exceeded " +
                                     std::to_string(opts.max_leaves) +
                                     " colourings");
            }
            std::string cert = leaf_certificate(g, colour);
            if (!have_best || cert < best) {
                best = std::move(cert);
                have_best = true;
            }
            return;
        }
        // First smallest non-singleton class; its members are mutually
        // indistinguishable so far, so each gets a branch.
        std::vector<int> count(g.n, 0);
        for (int c : colour) ++count[c];
        int target = -1;
        for (int c = 0; c < g.n; ++c) {
            if (count[c] > 1 && (target < 0 || count[c] < count[target])) {
                target = c;
            }
        }
        for (int v = 0; v < g.n; ++v) {
            if (colour[v] != target) continue;
            std::vector<int> branch(colour);
            for (int& c : branch) c *= 2;
            branch[v] = 2 * target - 1;
            run(std::move(branch));
        }
    }
};

} // namespace

bool isomorphic(const HostGraph& a, const HostGraph& b) {
    if (a.node_count() != b.node_count()) return false;
    if (a.edge_count() != b.edge_count()) return false;

    FlatGraph fa = flatten(a);
    FlatGraph fb = flatten(b);
    int n = static_cast<int>(fa.labels.size());

    std::vector<std::string> sig_a(n), sig_b(n);
    std::map<std::string, std::vector<int>> by_sig;
    for (int v = 0; v < n; ++v) {
        sig_a[v] = node_signature(fa, v);
        sig_b[v] = node_signature(fb, v);
        by_sig[sig_b[v]].push_back(v);
    }
    {
        std::map<std::string, int> counts;
        for (int v = 0; v < n; ++v) {
            ++counts[sig_a[v]];
            --counts[sig_b[v]];
        }
        for (const auto& [sig, d] : counts) {
            if (d != 0) return false;
        }
    }

    std::vector<std::vector<int>> cand(n);
    for (int v = 0; v < n; ++v) cand[v] = by_sig.at(sig_a[v]);

    IsoSearch search{fa, fb, {}, std::vector<int>(n, -1),
                     std::vector<bool>(n, false)};
    search.order.resize(n);
    for (int v = 0; v < n; ++v) search.order[v] = v;
    std::stable_sort(search.order.begin(), search.order.end(),
                     [&](int u, int v) { return cand[u].size() < cand[v].size(); });
    return search.extend(0, cand);
}

std::string canonical_key(const HostGraph& g, const CanonicalOptions& opts) {
    if (g.node_count() > opts.max_nodes) {
        throw LimitError(Errc::size_limit,
                         "canonical key limited to " +
                             std::to_string(opts.max_nodes) + " nodes, got " +
                             std::to_string(g.node_count()));
    }
    CanonGraph cg = canon_flatten(g);
    CanonSearch search{cg, opts, {}, false, 0};
    search.run(std::vector<int>(cg.n, 0));
    if (!search.have_best) return "n 0\n";
    return search.best;
}

} // namespace gpeng
