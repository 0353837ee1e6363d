#include "padl/instance_io.hpp"

#include <fstream>

namespace padl {

namespace {

using nlohmann::json;

std::vector<unsigned> exps_from(const json& j, const char* name) {
    if (!j.is_array()) throw schema_error(std::string("groups.") + name + " must be an array of exponents");
    std::vector<unsigned> out;
    for (const auto& x : j) {
        if (!x.is_number_unsigned() || x.get<u64>() < 1)
            throw schema_error(std::string("groups.") + name + ": exponents must be integers >= 1");
        out.push_back(x.get<unsigned>());
    }
    return out;
}

std::vector<std::vector<i64>> matrix_from(const json& j, size_t rows, size_t cols, const char* name) {
    if (!j.is_array() || j.size() != rows)
        throw schema_error(std::string(name) + ": expected " + std::to_string(rows) + " rows");
    std::vector<std::vector<i64>> out;
    for (const auto& row : j) {
        if (!row.is_array() || row.size() != cols)
            throw schema_error(std::string(name) + ": expected " + std::to_string(cols) + " columns");
        std::vector<i64> r;
        for (const auto& x : row) {
            if (!x.is_number_integer()) throw schema_error(std::string(name) + ": entries must be integers");
            r.push_back(x.get<i64>());
        }
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace

BFInstance instance_from_json(const nlohmann::json& j) {
    try {
        if (!j.contains("p") || !j.contains("m") || !j.contains("groups") || !j.contains("d") ||
            !j.contains("pairing"))
            throw schema_error("instance requires fields p, m, groups, d, pairing");
        BFInstance inst;
        inst.p = j.at("p").get<u64>();
        inst.m = j.at("m").get<unsigned>();
        const auto& g = j.at("groups");
        inst.A = FiniteAbelianPGroup{inst.p, exps_from(g.at("A"), "A")};
        inst.B = FiniteAbelianPGroup{inst.p, exps_from(g.at("B"), "B")};
        inst.C = FiniteAbelianPGroup{inst.p, exps_from(g.at("C"), "C")};
        inst.d.domain = inst.A;
        inst.d.codomain = inst.C;
        inst.d.matrix = matrix_from(j.at("d"), inst.C.rank(), inst.A.rank(), "d");
        inst.pairing.left = inst.C;
        inst.pairing.right = inst.B;
        inst.pairing.m = inst.m;
        inst.pairing.matrix = matrix_from(j.at("pairing"), inst.C.rank(), inst.B.rank(), "pairing");
        if (j.contains("grading")) {
            const auto& gr = j.at("grading");
            auto levels = [&](const char* name, size_t want) {
                const auto& arr = gr.at(name);
                if (!arr.is_array() || arr.size() != want)
                    throw schema_error(std::string("grading.") + name + " length mismatch");
                std::vector<unsigned> out;
                for (const auto& x : arr) out.push_back(x.get<unsigned>());
                return out;
            };
            inst.grading_A = levels("A", inst.A.rank());
            inst.grading_B = levels("B", inst.B.rank());
            inst.grading_C = levels("C", inst.C.rank());
        }
        inst.validate();
        return inst;
    } catch (const nlohmann::json::exception& e) {
        throw schema_error(std::string("instance document: ") + e.what());
    }
}

nlohmann::ordered_json instance_to_json(const BFInstance& inst) {
    nlohmann::ordered_json j;
    j["p"] = inst.p;
    j["m"] = inst.m;
    j["groups"] = {{"A", inst.A.exps}, {"B", inst.B.exps}, {"C", inst.C.exps}};
    j["d"] = inst.d.matrix;
    j["pairing"] = inst.pairing.matrix;
    if (inst.graded())
        j["grading"] = {{"A", *inst.grading_A}, {"B", *inst.grading_B}, {"C", *inst.grading_C}};
    return j;
}

BFInstance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw schema_error("cannot open instance file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw schema_error("instance file " + path + ": " + e.what());
    }
    return instance_from_json(j);
}

Fixture fixture_from_json(const nlohmann::json& j) {
    try {
        Fixture f;
        f.p = j.at("p").get<u64>();
        f.k = j.at("k").get<unsigned>();
        for (const auto& row : j.at("orders")) {
            unsigned n = row.at("n").get<unsigned>();
            unsigned e = row.at("e").get<unsigned>();
            f.e_by_level[n] = e;
        }
        return f;
    } catch (const nlohmann::json::exception& e) {
        throw schema_error(std::string("fixture document: ") + e.what());
    }
}

Fixture load_fixture(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw schema_error("cannot open fixture file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw schema_error("fixture file " + path + ": " + e.what());
    }
    return fixture_from_json(j);
}

}  // namespace padl
