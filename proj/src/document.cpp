#include "arcalc/document.hpp"

#include <optional>
#include <utility>
#include <vector>

#include <json.hpp>

#include "arcalc/linalg.hpp"
#include "json_common.hpp"

namespace arcalc {

namespace {

using nlohmann::json;

constexpr const char* kSchemaName = "arcalc/object-v1";

AlgebraSpec algebra_from_json(const json& a) {
    std::string backend = a.at("backend").get<std::string>();
    if (backend != "nakayama" && backend != "graded-line")
        throw InvalidInput("unknown backend '" + backend + "'");
    return AlgebraSpec(backend == "nakayama" ? Backend::nakayama : Backend::graded_line,
                       a.at("n").get<std::size_t>(), Field(a.at("p").get<std::uint32_t>()));
}

json algebra_to_json(const AlgebraSpec& alg) {
    return {{"backend", alg.graded() ? "graded-line" : "nakayama"},
            {"n", alg.n},
            {"p", alg.field.modulus()}};
}

LambdaModule module_from_json(const AlgebraSpec& alg, const json& spec) {
    bool has_partition = spec.contains("partition");
    bool has_matrix = spec.contains("matrix");
    if (has_partition == has_matrix)
        throw InvalidInput("module spec needs exactly one of 'partition' or 'matrix'");
    if (has_partition) return module_from_partition(alg, parts_from_json(spec.at("partition")));
    const json& rows = spec.at("matrix");
    std::size_t d = rows.size();
    PrimeMatrix t = matrix_from_json(rows, d, d, alg.field);
    std::vector<int> degrees;
    if (spec.contains("degrees")) degrees = spec.at("degrees").get<std::vector<int>>();
    return LambdaModule(alg, std::move(t), std::move(degrees));
}

json module_to_json(const LambdaModule& m) {
    ModuleDecomposition d = decompose_module(m);
    if (module_from_partition(m.alg(), d.parts) == m)
        return json{{"partition", parts_to_json(d.parts)}};
    json spec = {{"matrix", matrix_to_json(m.t())}};
    if (m.alg().graded()) spec["degrees"] = m.degrees();
    return spec;
}

SObject zero_sub(const AlgebraSpec& alg, const LambdaModule& amb) {
    LambdaModule z = LambdaModule::zero(alg);
    return SObject(LambdaMap(z, amb, PrimeMatrix(amb.dim(), 0, alg.field)));
}

SObject sub_object_from_json(const AlgebraSpec& alg, const LambdaModule& amb, const json& sub) {
    if (sub.is_string()) {
        std::string kind = sub.get<std::string>();
        if (kind == "zero") return zero_sub(alg, amb);
        if (kind == "full") return SObject(LambdaMap::identity(amb));
        throw InvalidInput("sub must be basis rows, \"zero\", or \"full\"");
    }
    if (!sub.is_array()) throw InvalidInput("sub must be basis rows, \"zero\", or \"full\"");
    std::size_t k = sub.size();
    if (k == 0) return zero_sub(alg, amb);
    PrimeMatrix rows = matrix_from_json(sub, k, amb.dim(), alg.field);
    PrimeMatrix s(amb.dim(), k, alg.field);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < amb.dim(); ++i) s.set(i, j, rows.at(j, i));
    if (rank(s) != k) throw InvalidInput("sub basis rows are linearly dependent");
    std::optional<PrimeMatrix> induced = solve_linear(s, amb.t() * s);
    if (!induced) throw InvalidInput("sub rows do not span a T-invariant subspace");
    std::vector<int> degrees;
    if (alg.graded()) {
        for (std::size_t j = 0; j < k; ++j) {
            std::optional<int> deg;
            for (std::size_t i = 0; i < amb.dim(); ++i) {
                if (s.at(i, j) == 0) continue;
                if (deg && *deg != amb.degrees()[i])
                    throw InvalidInput("graded sub basis rows must be homogeneous");
                deg = amb.degrees()[i];
            }
            degrees.push_back(*deg);
        }
    }
    LambdaModule submod(alg, std::move(*induced), std::move(degrees));
    return SObject(LambdaMap(std::move(submod), amb, std::move(s)));
}

} // namespace

ParsedObject parse_object_document(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("object JSON does not parse: ") + e.what());
    }
    try {
        if (!root.contains("schema") || root.at("schema") != kSchemaName)
            throw InvalidInput(std::string("object document schema must be \"") + kSchemaName +
                               "\"");
        AlgebraSpec alg = algebra_from_json(root.at("algebra"));
        bool has_map = root.contains("map");
        bool has_ambient = root.contains("ambient");
        if (has_map == has_ambient)
            throw InvalidInput("object document needs exactly one of 'ambient' or 'map'");
        if (has_map) {
            const json& m = root.at("map");
            LambdaModule source = module_from_json(alg, m.at("source"));
            LambdaModule target = module_from_json(alg, m.at("target"));
            PrimeMatrix mat =
                matrix_from_json(m.at("matrix"), target.dim(), source.dim(), alg.field);
            return HObject(LambdaMap(std::move(source), std::move(target), std::move(mat)));
        }
        LambdaModule amb = module_from_json(alg, root.at("ambient"));
        if (!root.contains("sub")) throw InvalidInput("object document is missing 'sub'");
        return sub_object_from_json(alg, amb, root.at("sub"));
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("object document is missing fields: ") + e.what());
    }
}

std::string write_object_document(const SObject& x) {
    json root;
    root["schema"] = kSchemaName;
    root["algebra"] = algebra_to_json(x.amb().alg());
    root["ambient"] = module_to_json(x.amb());
    if (x.sub().dim() == 0) {
        root["sub"] = "zero";
    } else if (x.f() == LambdaMap::identity(x.amb())) {
        root["sub"] = "full";
    } else {
        json rows = json::array();
        const PrimeMatrix& s = x.f().m();
        for (std::size_t j = 0; j < s.cols(); ++j) {
            json row = json::array();
            for (std::size_t i = 0; i < s.rows(); ++i) row.push_back(s.at(i, j));
            rows.push_back(row);
        }
        root["sub"] = rows;
    }
    return root.dump(2) + "\n";
}

std::string write_object_document(const HObject& f) {
    json root;
    root["schema"] = kSchemaName;
    root["algebra"] = algebra_to_json(f.amb().alg());
    root["map"] = {{"matrix", matrix_to_json(f.f.m())},
                   {"source", module_to_json(f.sub())},
                   {"target", module_to_json(f.amb())}};
    return root.dump(2) + "\n";
}

} // namespace arcalc
