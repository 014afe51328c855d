#include "enptkit/io.hpp"

#include <fstream>
#include <sstream>

namespace enptkit {

namespace {

std::string id_of(const Json& v)
{
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    throw Error(ErrorKind::SchemaError, "vertex id must be a string or an integer, got " + v.dump());
}

Json id_json(const std::string& s, bool numeric)
{
    if (numeric) return std::stoll(s);
    return s;
}

bool plain_numbering(const std::vector<std::string>& ids)
{
    for (size_t k = 0; k < ids.size(); ++k)
        if (ids[k] != std::to_string(k)) return false;
    return true;
}

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::SchemaError, std::string("missing field '") + key + "'");
    return j.at(key);
}

std::vector<std::pair<std::string, std::string>> edge_list(const Json& j, const char* what)
{
    if (!j.is_array()) throw Error(ErrorKind::SchemaError, std::string(what) + " must be an array");
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2) throw Error(ErrorKind::SchemaError, std::string(what) + " entries must be pairs");
        out.emplace_back(id_of(e[0]), id_of(e[1]));
    }
    return out;
}

std::vector<std::string> id_list(const Json& j, const char* what)
{
    if (!j.is_array()) throw Error(ErrorKind::SchemaError, std::string(what) + " must be an array");
    std::vector<std::string> out;
    for (const auto& v : j) out.push_back(id_of(v));
    return out;
}

Json edges_json(const std::vector<std::pair<std::string, std::string>>& es, bool numeric)
{
    Json a = Json::array();
    for (const auto& [u, v] : es) a.push_back(Json::array({id_json(u, numeric), id_json(v, numeric)}));
    return a;
}

// vertex list from either "vertices" or "n"
std::vector<std::string> vertex_ids(const Json& j)
{
    if (j.contains("vertices")) return id_list(j.at("vertices"), "vertices");
    const Json& n = field(j, "n");
    if (!n.is_number_integer() || n.get<long long>() < 0) throw Error(ErrorKind::SchemaError, "n must be a non-negative integer");
    std::vector<std::string> ids;
    for (long long k = 0; k < n.get<long long>(); ++k) ids.push_back(std::to_string(k));
    return ids;
}

template <typename F>
auto schema_guard(F&& f) -> decltype(f())
{
    try {
        return f();
    } catch (const Json::exception& e) {
        throw Error(ErrorKind::SchemaError, e.what());
    }
}

std::string quote(const std::string& s)
{
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

} // namespace

Json parse_json(const std::string& text)
{
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
}

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ParseError, "cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json(ss.str());
}

Json to_json(const HostTree& t)
{
    return Json{{"vertices", t.labels()}, {"edges", edges_json(t.label_edges(), false)}};
}

HostTree tree_from_json(const Json& j)
{
    return schema_guard([&] { return HostTree(id_list(field(j, "vertices"), "vertices"), edge_list(field(j, "edges"), "edges")); });
}

Json to_json(const Representation& rep)
{
    Json paths = Json::object();
    for (const auto& [id, p] : rep.paths) paths[id] = p.labels(rep.tree);
    return Json{{"tree", to_json(rep.tree)}, {"paths", paths}};
}

Representation rep_from_json(const Json& j)
{
    return schema_guard([&] {
        HostTree t = tree_from_json(field(j, "tree"));
        const Json& ps = field(j, "paths");
        if (!ps.is_object()) throw Error(ErrorKind::SchemaError, "paths must be an object");
        LabelPathMap lp;
        for (auto it = ps.begin(); it != ps.end(); ++it) lp.emplace(it.key(), id_list(it.value(), "path"));
        return rebuild(t.labels(), t.label_edges(), lp);
    });
}

Json to_json(const GraphPair& pair)
{
    bool numeric = plain_numbering(pair.ids());
    Json j;
    if (numeric) j["n"] = pair.size();
    else j["vertices"] = pair.ids();
    j["edges"] = edges_json(pair.edges(), numeric);
    j["blue"] = edges_json(pair.blue_edges(), numeric);
    return j;
}

GraphPair pair_from_json(const Json& j)
{
    return schema_guard([&] {
        return GraphPair(vertex_ids(j), edge_list(field(j, "edges"), "edges"), edge_list(field(j, "blue"), "blue"));
    });
}

Json to_json(const SimpleGraph& g)
{
    bool numeric = plain_numbering(g.ids);
    std::vector<std::pair<std::string, std::string>> es;
    for (auto [a, b] : g.edges) es.emplace_back(g.ids[a], g.ids[b]);
    Json j;
    if (numeric) j["n"] = g.size();
    else j["vertices"] = g.ids;
    j["edges"] = edges_json(es, numeric);
    return j;
}

SimpleGraph graph_from_json(const Json& j)
{
    return schema_guard([&] {
        SimpleGraph g(vertex_ids(j));
        std::map<std::string, int> index;
        for (int k = 0; k < g.size(); ++k)
            if (!index.emplace(g.ids[k], k).second) throw Error(ErrorKind::SchemaError, "duplicate vertex " + g.ids[k]);
        for (const auto& [a, b] : edge_list(field(j, "edges"), "edges")) {
            auto ia = index.find(a), ib = index.find(b);
            if (ia == index.end() || ib == index.end()) throw Error(ErrorKind::UnknownVertex, a + "-" + b);
            if (ia->second == ib->second) throw Error(ErrorKind::SchemaError, "self-loop at " + a);
            g.add_edge(ia->second, ib->second);
        }
        return g;
    });
}

Json to_json(const DerivedGraphs& g)
{
    bool numeric = plain_numbering(g.ids);
    return Json{{"vertices", g.ids}, {"vpt", edges_json(g.vpt, numeric)}, {"ept", edges_json(g.ept, numeric)}, {"enpt", edges_json(g.enpt, numeric)}};
}

Json to_json(const SolveOutcome& out, const GraphPair& pair)
{
    Json j;
    if (out.kind == SolveOutcome::No) {
        j["outcome"] = "no";
        j["reason"] = out.reason;
        if (!out.detail.empty()) j["detail"] = out.detail;
        return j;
    }
    auto c = run_checks(*out.rep, pair);
    j["outcome"] = "rep";
    j["representation"] = to_json(*out.rep);
    j["checks"] = {{"minimal", c.minimal}, {"p3", c.p3}, {"structure", c.structure}};
    return j;
}

Json to_json(const ReductionInstance& inst)
{
    Json segs = Json::array();
    for (const auto& s : inst.segments) segs.push_back(std::vector<std::string>(s.begin(), s.end()));
    return Json{{"H", to_json(inst.H)}, {"pair", to_json(inst.pair)}, {"K", inst.K}, {"segments", segs}, {"Q", inst.Q}};
}

Json to_json(const std::vector<MinifyOp>& trace)
{
    Json a = Json::array();
    for (const auto& op : trace) {
        Json o{{"op", op.kind == MinifyOp::Contract ? "contract" : "trim"}, {"edge", {op.edge.first, op.edge.second}}};
        if (op.kind == MinifyOp::TrimTail) o["path"] = op.path_id;
        a.push_back(o);
    }
    return a;
}

Coloring coloring_from_json(const Json& j)
{
    if (!j.is_object()) throw Error(ErrorKind::SchemaError, "coloring must be an object");
    Coloring c;
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (!it.value().is_number_integer()) throw Error(ErrorKind::SchemaError, "color of " + it.key() + " must be an integer");
        c[it.key()] = it.value().get<int>();
    }
    return c;
}

std::string to_dot(const GraphPair& pair)
{
    std::ostringstream os;
    os << "graph pair {\n  node [shape=circle];\n";
    for (const auto& id : pair.ids()) os << "  " << quote(id) << ";\n";
    for (const auto& [u, v] : pair.edges()) {
        bool blue = pair.is_blue(u, v);
        os << "  " << quote(u) << " -- " << quote(v) << " [color=" << (blue ? "blue" : "red")
           << (blue ? "" : ", style=dashed") << "];\n";
    }
    os << "}\n";
    return os.str();
}

std::string to_dot(const Representation& rep)
{
    const auto& t = rep.tree;
    std::vector<std::string> through(t.num_edges());
    for (const auto& [id, p] : rep.paths)
        for (int e : p.edges()) through[e] += (through[e].empty() ? "" : ",") + id;
    std::ostringstream os;
    os << "graph tree {\n  node [shape=point];\n";
    for (const auto& l : t.labels()) os << "  " << quote(l) << " [xlabel=" << quote(l) << "];\n";
    for (int e = 0; e < t.num_edges(); ++e) {
        auto [u, v] = t.edge(e);
        os << "  " << quote(t.label(u)) << " -- " << quote(t.label(v)) << " [label=" << quote(through[e]) << "];\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace enptkit
