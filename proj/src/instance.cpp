#include "gradalg/instance.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gradalg/errors.hpp"

namespace gradalg {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw InvalidInput("malformed JSON");
    return j;
}

std::vector<std::vector<long long>> entry_list(const json& j, const char* key, size_t arity) {
    std::vector<std::vector<long long>> out;
    if (!j.contains(key)) return out;
    if (!j.at(key).is_array()) throw InvalidInput(std::string(key) + " must be an array");
    for (const auto& e : j.at(key)) {
        if (!e.is_array() || e.size() != arity)
            throw InvalidInput(std::string(key) + " entries must be arrays of length " +
                               std::to_string(arity));
        std::vector<long long> row;
        for (const auto& v : e) {
            if (!v.is_number_integer()) throw InvalidInput("non-integer entry");
            row.push_back(v.get<long long>());
        }
        out.push_back(std::move(row));
    }
    return out;
}

} // namespace

RawInstance parse_instance_text(const std::string& text) {
    json j = parse_json(text);
    RawInstance raw;
    try {
        raw.format = j.value("format", "");
        if (raw.format != "gradalg-1")
            throw InvalidInput("unsupported format field: '" + raw.format + "'");
        raw.name = j.value("name", "");
        raw.comment = j.value("comment", "");

        const auto& grp = j.at("group");
        int order = grp.at("order").get<int>();
        raw.table = grp.at("table").get<std::vector<std::vector<int>>>();
        if (int(raw.table.size()) != order) throw InvalidInput("group table size != order");

        raw.p = j.at("field").at("p").get<u32>();

        const auto& alg = j.at("algebra");
        raw.deg = alg.at("deg").get<std::vector<int>>();
        raw.sc = entry_list(alg, "sc", 4);
        raw.unit = alg.at("unit").get<std::vector<u32>>();

        if (j.contains("modules")) {
            for (const auto& m : j.at("modules")) {
                RawModule rm;
                rm.name = m.at("name").get<std::string>();
                rm.kind = m.at("kind").get<std::string>();
                if (rm.kind == "graded") {
                    rm.deg_dims = m.at("deg_dims").get<std::vector<int>>();
                    rm.entries = entry_list(m, "action", 5);
                } else if (rm.kind == "ae") {
                    rm.dim = m.at("dim").get<int>();
                    rm.entries = entry_list(m, "action", 4);
                } else {
                    throw InvalidInput("unknown module kind '" + rm.kind + "'");
                }
                raw.modules.push_back(std::move(rm));
            }
        }
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("instance file structure: ") + e.what());
    }
    return raw;
}

RawInstance parse_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_instance_text(ss.str());
}

namespace {

// Dense structure constants from sparse quadruples; throws on bad indices.
std::vector<std::vector<std::vector<u32>>> dense_sc(const RawInstance& raw) {
    const int dim = int(raw.deg.size());
    std::vector<std::vector<std::vector<u32>>> sc(
        size_t(dim), std::vector<std::vector<u32>>(size_t(dim), std::vector<u32>(size_t(dim), 0)));
    for (const auto& q : raw.sc) {
        long long i = q[0], j = q[1], k = q[2], v = q[3];
        if (i < 0 || i >= dim || j < 0 || j >= dim || k < 0 || k >= dim)
            throw InvalidInput("sc index out of range");
        if (v < 0) throw InvalidInput("sc value must be nonnegative");
        sc[size_t(i)][size_t(j)][size_t(k)] = u32(v % raw.p);
    }
    return sc;
}

GradedModule dense_graded_module(const RawInstance& raw,
                                 std::shared_ptr<const GradedAlgebra> ga, const RawModule& rm) {
    const int n = ga->group().order();
    if (int(rm.deg_dims.size()) != n) throw InvalidInput("deg_dims length != group order");
    for (int d : rm.deg_dims)
        if (d < 0) throw InvalidInput("negative component dimension");
    std::vector<std::vector<Mat>> act(size_t(ga->dim()), std::vector<Mat>(size_t(n)));
    for (int i = 0; i < ga->dim(); ++i)
        for (int y = 0; y < n; ++y) {
            int ty = ga->group().mul(y, ga->degree_of(i));
            act[size_t(i)][size_t(y)] =
                Mat(rm.deg_dims[size_t(y)], rm.deg_dims[size_t(ty)], raw.p);
        }
    for (const auto& e : rm.entries) {
        long long i = e[0], y = e[1], r = e[2], c = e[3], v = e[4];
        if (i < 0 || i >= ga->dim() || y < 0 || y >= n) throw InvalidInput("action index out of range");
        Mat& blk = act[size_t(i)][size_t(y)];
        if (r < 0 || r >= blk.rows() || c < 0 || c >= blk.cols())
            throw InvalidInput("action entry out of range");
        blk.at(int(r), int(c)) = u32(v % raw.p);
    }
    return GradedModule{std::move(ga), rm.deg_dims, std::move(act)};
}

AeModule dense_ae_module(const RawInstance& raw, const std::shared_ptr<const GradedAlgebra>& ga,
                         const RawModule& rm) {
    const int ae_dim = ga->ae()->dim;
    if (rm.dim < 0) throw InvalidInput("negative module dimension");
    std::vector<Mat> act(size_t(ae_dim), Mat(rm.dim, rm.dim, raw.p));
    for (const auto& e : rm.entries) {
        long long k = e[0], r = e[1], c = e[2], v = e[3];
        if (k < 0 || k >= ae_dim || r < 0 || r >= rm.dim || c < 0 || c >= rm.dim)
            throw InvalidInput("action entry out of range");
        act[size_t(k)].at(int(r), int(c)) = u32(v % raw.p);
    }
    return AeModule{ga->ae(), rm.dim, std::move(act)};
}

} // namespace

Report validate_raw(const RawInstance& raw) {
    Report rep;
    Report grp = validate_group_table(raw.table);
    rep.merge(grp);
    if (!grp.ok()) return rep;
    FiniteGroup g = make_group(raw.table);

    if (int(raw.deg.size()) != int(raw.unit.size())) {
        rep.add("unit_length", false, "unit length != basis size");
        return rep;
    }
    std::vector<std::vector<std::vector<u32>>> sc;
    try {
        sc = dense_sc(raw);
    } catch (const InvalidInput& e) {
        rep.add("sc_entries", false, e.what());
        return rep;
    }
    Report alg = validate_graded_algebra(g, raw.p, raw.deg, sc, raw.unit);
    rep.merge(alg);
    if (!alg.ok()) return rep;

    auto ga = GradedAlgebra::create(std::make_shared<FiniteGroup>(g), raw.p, raw.deg, sc, raw.unit);
    for (const auto& rm : raw.modules) {
        try {
            if (rm.kind == "graded") {
                Report mrep = validate_graded_module(dense_graded_module(raw, ga, rm));
                for (const auto& item : mrep.items())
                    rep.add("module '" + rm.name + "' " + item.name, item.pass, item.witness);
            } else {
                Report mrep = validate_ae_module(dense_ae_module(raw, ga, rm));
                for (const auto& item : mrep.items())
                    rep.add("module '" + rm.name + "' " + item.name, item.pass, item.witness);
            }
        } catch (const InvalidInput& e) {
            rep.add("module '" + rm.name + "' structure", false, e.what());
        }
    }
    return rep;
}

Instance build_instance(const RawInstance& raw) {
    FiniteGroup g = make_group(raw.table);
    auto sc = dense_sc(raw);
    auto ga = GradedAlgebra::create(std::make_shared<FiniteGroup>(g), raw.p, raw.deg, sc, raw.unit);
    Instance inst;
    inst.name = raw.name;
    inst.algebra = ga;
    for (const auto& rm : raw.modules) {
        if (rm.kind == "graded") {
            auto m = dense_graded_module(raw, ga, rm);
            Report rep = validate_graded_module(m);
            if (!rep.ok())
                throw CheckFailure("module '" + rm.name + "': " + rep.first_failure()->name +
                                   (rep.first_failure()->witness.empty()
                                        ? ""
                                        : " " + rep.first_failure()->witness));
            inst.graded_modules.push_back({rm.name, std::move(m)});
        } else {
            auto m = dense_ae_module(raw, ga, rm);
            Report rep = validate_ae_module(m);
            if (!rep.ok())
                throw CheckFailure("module '" + rm.name + "': " + rep.first_failure()->name);
            inst.ae_modules.push_back({rm.name, std::move(m)});
        }
    }
    return inst;
}

Instance load_instance(const std::string& path) { return build_instance(parse_instance_file(path)); }

const GradedModule* Instance::find_graded(const std::string& module_name) const {
    for (const auto& [n, m] : graded_modules)
        if (n == module_name) return &m;
    return nullptr;
}

const AeModule* Instance::find_ae(const std::string& module_name) const {
    for (const auto& [n, m] : ae_modules)
        if (n == module_name) return &m;
    return nullptr;
}

std::string instance_to_json_text(const Instance& inst, const std::string& comment) {
    const auto& ga = *inst.algebra;
    const FiniteGroup& g = ga.group();
    json j;
    j["format"] = "gradalg-1";
    j["name"] = inst.name;
    if (!comment.empty()) j["comment"] = comment;

    std::vector<std::vector<int>> table(size_t(g.order()), std::vector<int>(size_t(g.order())));
    for (int x = 0; x < g.order(); ++x)
        for (int y = 0; y < g.order(); ++y) table[size_t(x)][size_t(y)] = g.mul(x, y);
    j["group"] = {{"order", g.order()}, {"table", table}};
    j["field"] = {{"p", ga.modulus()}};

    std::vector<int> deg;
    for (int i = 0; i < ga.dim(); ++i) deg.push_back(ga.degree_of(i));
    std::vector<std::vector<long long>> sc;
    for (int i = 0; i < ga.dim(); ++i)
        for (int k = 0; k < ga.dim(); ++k)
            for (int l = 0; l < ga.dim(); ++l)
                if (ga.algebra().sc[size_t(i)][size_t(k)][size_t(l)] != 0)
                    sc.push_back({i, k, l, ga.algebra().sc[size_t(i)][size_t(k)][size_t(l)]});
    j["algebra"] = {{"deg", deg}, {"sc", sc}, {"unit", ga.algebra().unit}};

    json mods = json::array();
    for (const auto& [name, m] : inst.graded_modules) {
        std::vector<std::vector<long long>> entries;
        for (int i = 0; i < ga.dim(); ++i)
            for (int y = 0; y < g.order(); ++y) {
                const Mat& blk = m.act[size_t(i)][size_t(y)];
                for (int r = 0; r < blk.rows(); ++r)
                    for (int c = 0; c < blk.cols(); ++c)
                        if (blk.at(r, c) != 0) entries.push_back({i, y, r, c, blk.at(r, c)});
            }
        mods.push_back(
            {{"name", name}, {"kind", "graded"}, {"deg_dims", m.dims}, {"action", entries}});
    }
    for (const auto& [name, m] : inst.ae_modules) {
        std::vector<std::vector<long long>> entries;
        for (int k = 0; k < int(m.act.size()); ++k)
            for (int r = 0; r < m.dim; ++r)
                for (int c = 0; c < m.dim; ++c)
                    if (m.act[size_t(k)].at(r, c) != 0)
                        entries.push_back({k, r, c, m.act[size_t(k)].at(r, c)});
        mods.push_back({{"name", name}, {"kind", "ae"}, {"dim", m.dim}, {"action", entries}});
    }
    if (!mods.empty()) j["modules"] = mods;
    return j.dump(2) + "\n";
}

void save_instance(const Instance& inst, const std::string& path, const std::string& comment) {
    std::ofstream out(path);
    if (!out) throw InvalidInput("cannot write file: " + path);
    out << instance_to_json_text(inst, comment);
}

Instance instance_of_fixture(const Fixture& fx) {
    Instance inst;
    inst.name = fx.name;
    inst.algebra = fx.algebra;
    inst.graded_modules.push_back({"shift_e", make_shift(fx.algebra, fx.algebra->group().neutral())});
    inst.ae_modules.push_back({"ae_regular", regular_module(fx.algebra->ae())});
    return inst;
}

} // namespace gradalg
