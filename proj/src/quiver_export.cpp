#include "arcalc/quiver.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "json_common.hpp"

namespace arcalc {

namespace {

using nlohmann::json;

std::string fnv_hash16(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << h;
    return out.str();
}

std::string display_label(const SObject& x) {
    std::ostringstream out;
    out << x.sub().dim() << "⊆" << x.amb().dim() << ':'
        << partition_to_string(decompose_module(x.amb()).parts, x.amb().alg().graded()) << '/'
        << fnv_hash16(canonical_label(x));
    return out.str();
}

std::string export_dot(const ARQuiver& q) {
    std::ostringstream out;
    out << "digraph ar_quiver {\n  rankdir=BT;\n  node [shape=box];\n";
    for (const QuiverVertex& v : q.vertices) {
        out << "  \"" << v.name << "\" [label=\"" << display_label(v.object) << "\"";
        if (v.projective) out << ", peripheries=2";
        out << "];\n";
    }
    for (const QuiverArrow& a : q.arrows) {
        out << "  \"" << q.vertices[a.source].name << "\" -> \"" << q.vertices[a.target].name
            << "\"";
        if (a.multiplicity > 1) out << " [label=\"" << a.multiplicity << "\"]";
        out << ";\n";
    }
    for (std::size_t c = 0; c < q.vertices.size(); ++c) {
        if (!q.translation[c]) continue;
        out << "  \"" << q.vertices[c].name << "\" -> \"" << q.vertices[*q.translation[c]].name
            << "\" [style=dashed, constraint=false];\n";
    }
    out << "}\n";
    return out.str();
}

json export_json(const ARQuiver& q) {
    json root;
    root["algebra"] = {{"backend", q.alg.graded() ? "graded-line" : "nakayama"},
                       {"n", q.alg.n},
                       {"p", q.alg.field.modulus()}};
    json verts = json::array();
    for (const QuiverVertex& v : q.vertices) {
        verts.push_back({{"amb", parts_to_json(decompose_module(v.object.amb()).parts)},
                         {"label", display_label(v.object)},
                         {"matrix", matrix_to_json(v.object.f().m())},
                         {"name", v.name},
                         {"projective", v.projective},
                         {"sub", parts_to_json(decompose_module(v.object.sub()).parts)}});
    }
    root["vertices"] = verts;
    json arrows = json::array();
    for (const QuiverArrow& a : q.arrows)
        arrows.push_back({{"multiplicity", a.multiplicity},
                          {"source", q.vertices[a.source].name},
                          {"target", q.vertices[a.target].name}});
    root["arrows"] = arrows;
    json tr = json::object();
    for (std::size_t c = 0; c < q.vertices.size(); ++c)
        if (q.translation[c]) tr[q.vertices[c].name] = q.vertices[*q.translation[c]].name;
    root["translation"] = tr;
    return root;
}

} // namespace

std::string export_quiver(const ARQuiver& q, QuiverFormat format) {
    if (format == QuiverFormat::dot) return export_dot(q);
    return export_json(q).dump(2) + "\n";
}

ARQuiver import_quiver(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("quiver JSON does not parse: ") + e.what());
    }
    try {
        const json& a = root.at("algebra");
        std::string backend = a.at("backend").get<std::string>();
        if (backend != "nakayama" && backend != "graded-line")
            throw InvalidInput("unknown backend '" + backend + "'");
        AlgebraSpec alg(backend == "nakayama" ? Backend::nakayama : Backend::graded_line,
                        a.at("n").get<std::size_t>(), Field(a.at("p").get<std::uint32_t>()));
        ARQuiver q{alg, {}, {}, {}};
        std::map<std::string, std::size_t> index;
        for (const json& v : root.at("vertices")) {
            LambdaModule sub = module_from_partition(alg, parts_from_json(v.at("sub")));
            LambdaModule amb = module_from_partition(alg, parts_from_json(v.at("amb")));
            PrimeMatrix m = matrix_from_json(v.at("matrix"), amb.dim(), sub.dim(), alg.field);
            std::string name = v.at("name").get<std::string>();
            index[name] = q.vertices.size();
            q.vertices.push_back(
                {SObject(LambdaMap(sub, amb, m)), name, v.at("projective").get<bool>()});
            q.translation.emplace_back();
        }
        auto lookup = [&](const std::string& name) {
            auto it = index.find(name);
            if (it == index.end()) throw InvalidInput("unknown vertex name '" + name + "'");
            return it->second;
        };
        for (const json& ar : root.at("arrows"))
            q.arrows.push_back({lookup(ar.at("source").get<std::string>()),
                                lookup(ar.at("target").get<std::string>()),
                                ar.at("multiplicity").get<std::size_t>()});
        for (auto it = root.at("translation").begin(); it != root.at("translation").end(); ++it)
            q.translation[lookup(it.key())] = lookup(it.value().get<std::string>());
        return q;
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("quiver JSON is missing fields: ") + e.what());
    }
}

} // namespace arcalc
