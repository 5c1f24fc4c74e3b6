#include "hosoya/families.hpp"

#include "hosoya/error.hpp"
#include "hosoya/fibonacci.hpp"

#include <algorithm>

namespace hosoya {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) raise(Errc::invalid_parameters, what);
}

std::vector<Edge> cycle_edges(int k) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(0, k - 1);
    return edges;
}

// Append a pendant path of `len` vertices hanging at `at`; returns the label
// of the far end of the path (or `at` itself for len == 0).
int append_path(std::vector<Edge>& edges, int& next_vertex, int at, int len) {
    int prev = at;
    for (int i = 0; i < len; ++i) {
        edges.emplace_back(prev, next_vertex);
        prev = next_vertex++;
    }
    return prev;
}

Graph build_l1(int n, int k, int s, int t) {
    require(k >= 3 && s >= 1 && t >= 1 && s + t + k == n, "l1 requires k>=3, s,t>=1, s+t+k=n");
    auto edges = cycle_edges(k);
    int next = k;
    append_path(edges, next, 0, t);
    append_path(edges, next, 1, s);
    return Graph::from_edge_list(n, edges);
}

Graph build_l2(int n, int k, int s, int t) {
    require(k >= 3 && s >= 1 && t >= 1 && s + t + k == n, "l2 requires k>=3, s,t>=1, s+t+k=n");
    auto edges = cycle_edges(k);
    int next = k;
    append_path(edges, next, 0, t);
    append_path(edges, next, 0, s);
    return Graph::from_edge_list(n, edges);
}

Graph build_l3(int n, int k, int s, int t, int l) {
    require(k >= 3 && s >= 1 && t >= 1 && l >= 1 && l <= t && s + t + k == n,
            "l3 requires k>=3, s,t>=1, 1<=l<=t, s+t+k=n");
    auto edges = cycle_edges(k);
    int next = k;
    append_path(edges, next, 0, t);
    int fork = k + l - 1; // stem vertex u_l
    append_path(edges, next, fork, s);
    return Graph::from_edge_list(n, edges);
}

struct Builder {
    Graph operator()(const Path& p) const {
        require(p.n >= 1, "path requires n>=1");
        std::vector<Edge> edges;
        for (int i = 0; i + 1 < p.n; ++i) edges.emplace_back(i, i + 1);
        return Graph::from_edge_list(p.n, edges);
    }
    Graph operator()(const Star& s) const {
        require(s.n >= 1, "star requires n>=1");
        std::vector<Edge> edges;
        for (int i = 1; i < s.n; ++i) edges.emplace_back(0, i);
        return Graph::from_edge_list(s.n, edges);
    }
    Graph operator()(const Cycle& c) const {
        require(c.n >= 3, "cycle requires n>=3");
        return Graph::from_edge_list(c.n, cycle_edges(c.n));
    }
    Graph operator()(const Lollipop& l) const {
        require(l.k >= 3 && l.k <= l.n, "lollipop requires 3<=k<=n");
        auto edges = cycle_edges(l.k);
        int next = l.k;
        append_path(edges, next, 0, l.n - l.k);
        return Graph::from_edge_list(l.n, edges);
    }
    Graph operator()(const L1& g) const { return build_l1(g.n, g.k, g.s, g.t); }
    Graph operator()(const L2& g) const { return build_l2(g.n, g.k, g.s, g.t); }
    Graph operator()(const L3& g) const { return build_l3(g.n, g.k, g.s, g.t, g.l); }
    Graph operator()(const L1Max& g) const {
        require(g.k >= 3 && g.n - g.k - 2 >= 1, "l1max requires 3<=k<=n-3");
        return build_l1(g.n, g.k, 2, g.n - g.k - 2);
    }
    Graph operator()(const L2Max& g) const {
        require(g.k >= 3 && g.n - g.k - 2 >= 1, "l2max requires 3<=k<=n-3");
        return build_l2(g.n, g.k, 2, g.n - g.k - 2);
    }
    Graph operator()(const L3Max& g) const {
        require(g.k >= 3 && g.n - g.k - 2 >= 1, "l3max requires 3<=k<=n-3");
        return build_l3(g.n, g.k, 2, g.n - g.k - 2, 1);
    }
    Graph operator()(const UPrime& g) const {
        require(g.n >= 5, "uprime requires n>=5");
        return build_l1(g.n, g.n - 2, 1, 1);
    }
    Graph operator()(const UDoublePrime& g) const {
        require(g.n >= 6, "udoubleprime requires n>=6");
        return build_l1(g.n, g.n - 3, 2, 1);
    }
    Graph operator()(const PathAttach& g) const {
        return attach_path(g.base, g.v, g.n, g.k);
    }
};

} // namespace

Graph build(const FamilySpec& spec) {
    return std::visit(Builder{}, spec);
}

Graph attach_path(const Graph& g, int v, int n, int k) {
    require(n >= 1 && k >= 1 && k <= n, "attach_path requires 1<=k<=n");
    require(v >= 0 && v < g.vertex_count(), "attach_path vertex out of range");
    const int base = g.vertex_count();
    auto position_id = [&](int p) {
        if (p == k) return v;
        return p < k ? base + p - 1 : base + p - 2;
    };
    std::vector<Edge> edges = g.edges();
    for (int p = 1; p < n; ++p) edges.emplace_back(position_id(p), position_id(p + 1));
    return Graph::from_edge_list(base + n - 1, edges);
}

bool has_closed_form(const FamilySpec& spec) {
    return std::visit(
        [](const auto& g) {
            using T = std::decay_t<decltype(g)>;
            return std::is_same_v<T, Path> || std::is_same_v<T, Star> || std::is_same_v<T, Cycle> ||
                   std::is_same_v<T, Lollipop> || std::is_same_v<T, L1> || std::is_same_v<T, L1Max> ||
                   std::is_same_v<T, L3Max> || std::is_same_v<T, UPrime> ||
                   std::is_same_v<T, UDoublePrime>;
        },
        spec);
}

namespace {

BigNat fibp(int i) { return fib_nat(i); }

struct ClosedForm {
    BigNat operator()(const Path& p) const {
        require(p.n >= 1, "path requires n>=1");
        return fibp(p.n + 1);
    }
    BigNat operator()(const Star& s) const {
        require(s.n >= 1, "star requires n>=1");
        return BigNat((std::uint64_t)s.n);
    }
    BigNat operator()(const Cycle& c) const {
        require(c.n >= 3, "cycle requires n>=3");
        return fibp(c.n - 1) + fibp(c.n + 1);
    }
    BigNat operator()(const Lollipop& l) const {
        require(l.k >= 3 && l.k <= l.n, "lollipop requires 3<=k<=n");
        return fibp(l.n + 1) + fibp(l.k - 1) * fibp(l.n - l.k + 1);
    }
    BigNat operator()(const L1& g) const {
        require(g.k >= 3 && g.s >= 1 && g.t >= 1 && g.s + g.t + g.k == g.n, "l1 side conditions");
        return fibp(g.n + 1) + fibp(g.k - 1) * fibp(g.s + 1) * fibp(g.t + 1);
    }
    BigNat operator()(const L1Max& g) const {
        require(g.k >= 3 && g.n - g.k - 2 >= 1, "l1max requires 3<=k<=n-3");
        return fibp(g.n + 1) + fibp(3) * fibp(g.k - 1) * fibp(g.n - g.k - 1);
    }
    BigNat operator()(const L3Max& g) const {
        require(g.k >= 3 && g.n - g.k - 2 >= 1, "l3max requires 3<=k<=n-3");
        return fibp(g.n - 1) + fibp(g.n - 1) + fibp(g.k - 1) * fibp(g.n - g.k + 1) +
               fibp(g.k + 1) * fibp(g.n - g.k - 2);
    }
    BigNat operator()(const UPrime& g) const {
        require(g.n >= 5, "uprime requires n>=5");
        return fibp(g.n + 1) + fibp(g.n - 3);
    }
    BigNat operator()(const UDoublePrime& g) const {
        require(g.n >= 6, "udoubleprime requires n>=6");
        return fibp(g.n + 1) + fibp(g.n - 4) + fibp(g.n - 4);
    }
    template <typename T>
    BigNat operator()(const T&) const {
        raise(Errc::no_closed_form, "use hosoya_index() on the built graph");
    }
};

} // namespace

BigNat closed_form_z(const FamilySpec& spec) {
    return std::visit(ClosedForm{}, spec);
}

std::string family_tag(const FamilySpec& spec) {
    struct Tag {
        std::string operator()(const Path&) const { return "path"; }
        std::string operator()(const Star&) const { return "star"; }
        std::string operator()(const Cycle&) const { return "cycle"; }
        std::string operator()(const Lollipop&) const { return "lollipop"; }
        std::string operator()(const L1&) const { return "l1"; }
        std::string operator()(const L2&) const { return "l2"; }
        std::string operator()(const L3&) const { return "l3"; }
        std::string operator()(const L1Max&) const { return "l1max"; }
        std::string operator()(const L2Max&) const { return "l2max"; }
        std::string operator()(const L3Max&) const { return "l3max"; }
        std::string operator()(const UPrime&) const { return "uprime"; }
        std::string operator()(const UDoublePrime&) const { return "udoubleprime"; }
        std::string operator()(const PathAttach&) const { return "pathattach"; }
    };
    return std::visit(Tag{}, spec);
}

std::string family_name(const FamilySpec& spec) {
    struct Name {
        std::string operator()(const Path& g) const { return "path(" + std::to_string(g.n) + ")"; }
        std::string operator()(const Star& g) const { return "star(" + std::to_string(g.n) + ")"; }
        std::string operator()(const Cycle& g) const { return "cycle(" + std::to_string(g.n) + ")"; }
        std::string operator()(const Lollipop& g) const {
            return "lollipop(" + std::to_string(g.n) + "," + std::to_string(g.k) + ")";
        }
        std::string operator()(const L1& g) const {
            return "l1(" + std::to_string(g.n) + "," + std::to_string(g.k) + ",s=" +
                   std::to_string(g.s) + ",t=" + std::to_string(g.t) + ")";
        }
        std::string operator()(const L2& g) const {
            return "l2(" + std::to_string(g.n) + "," + std::to_string(g.k) + ",s=" +
                   std::to_string(g.s) + ",t=" + std::to_string(g.t) + ")";
        }
        std::string operator()(const L3& g) const {
            return "l3(" + std::to_string(g.n) + "," + std::to_string(g.k) + ",s=" +
                   std::to_string(g.s) + ",t=" + std::to_string(g.t) + ",l=" + std::to_string(g.l) +
                   ")";
        }
        std::string operator()(const L1Max& g) const {
            return "l1max(" + std::to_string(g.n) + "," + std::to_string(g.k) + ")";
        }
        std::string operator()(const L2Max& g) const {
            return "l2max(" + std::to_string(g.n) + "," + std::to_string(g.k) + ")";
        }
        std::string operator()(const L3Max& g) const {
            return "l3max(" + std::to_string(g.n) + "," + std::to_string(g.k) + ")";
        }
        std::string operator()(const UPrime& g) const { return "uprime(" + std::to_string(g.n) + ")"; }
        std::string operator()(const UDoublePrime& g) const {
            return "udoubleprime(" + std::to_string(g.n) + ")";
        }
        std::string operator()(const PathAttach& g) const {
            return "pathattach(base_n=" + std::to_string(g.base.vertex_count()) + ",v=" +
                   std::to_string(g.v) + ",n=" + std::to_string(g.n) + ",k=" + std::to_string(g.k) +
                   ")";
        }
    };
    return std::visit(Name{}, spec);
}

std::vector<FamilySpec> family_catalog(int n) {
    if (n < 5) raise(Errc::invalid_parameters, "family catalog requires n>=5");
    std::vector<FamilySpec> out;
    out.push_back(Cycle{n});
    for (int k = 3; k <= n - 1; ++k) out.push_back(Lollipop{n, k});
    for (int k = 3; k <= n - 3; ++k) out.push_back(L1Max{n, k});
    for (int k = 3; k <= n - 3; ++k) out.push_back(L2Max{n, k});
    for (int k = 3; k <= n - 3; ++k) out.push_back(L3Max{n, k});
    out.push_back(UPrime{n});
    if (n >= 6) out.push_back(UDoublePrime{n});
    // girth-3 tie partner of L3Max(n,3): the fork sits two stem vertices
    // short of the far end (coincides with the stem middle at n = 10)
    if (n >= 8) out.push_back(L3{n, 3, 2, n - 5, n - 7});
    return out;
}

FamilySpec make_spec(const std::string& tag, const std::map<std::string, int>& params,
                     const std::optional<Graph>& base) {
    auto get = [&](const char* key) {
        auto it = params.find(key);
        if (it == params.end())
            raise(Errc::invalid_parameters, std::string("missing parameter --") + key + " for " + tag);
        return it->second;
    };
    if (tag == "path") return Path{get("n")};
    if (tag == "star") return Star{get("n")};
    if (tag == "cycle") return Cycle{get("n")};
    if (tag == "lollipop") return Lollipop{get("n"), get("k")};
    if (tag == "l1") return L1{get("n"), get("k"), get("s"), get("t")};
    if (tag == "l2") return L2{get("n"), get("k"), get("s"), get("t")};
    if (tag == "l3") return L3{get("n"), get("k"), get("s"), get("t"), get("l")};
    if (tag == "l1max") return L1Max{get("n"), get("k")};
    if (tag == "l2max") return L2Max{get("n"), get("k")};
    if (tag == "l3max") return L3Max{get("n"), get("k")};
    if (tag == "uprime") return UPrime{get("n")};
    if (tag == "udoubleprime") return UDoublePrime{get("n")};
    if (tag == "pathattach") {
        if (!base) raise(Errc::invalid_parameters, "pathattach requires a base graph");
        return PathAttach{*base, get("v"), get("n"), get("k")};
    }
    raise(Errc::invalid_parameters, "unknown family '" + tag + "'");
}

} // namespace hosoya
