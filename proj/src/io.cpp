#include "ainfty/io.hpp"

#include <json.hpp>

#include <fstream>

namespace ainfty {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& origin, const std::string& what) {
    throw std::runtime_error(origin + ": " + what);
}

template <class M>
const typename M::mapped_type& sole(const M& m, const std::string& name, const char* kind,
                                    const std::string& ctx) {
    if (m.empty()) fail(ctx, std::string("no ") + kind + " in file");
    if (!name.empty()) {
        auto it = m.find(name);
        if (it == m.end()) fail(ctx, std::string(kind) + " '" + name + "' not found");
        return it->second;
    }
    return m.begin()->second;
}

std::pair<int, int> parse_bislot(const std::string& key, char prefix, const std::string& ctx) {
    // "<prefix>_<k>_<l>"
    if (key.size() < 5 || key[0] != prefix || key[1] != '_')
        fail(ctx, "bad component key '" + key + "'");
    auto second = key.find('_', 2);
    if (second == std::string::npos) fail(ctx, "bad component key '" + key + "'");
    try {
        int k = std::stoi(key.substr(2, second - 2));
        int l = std::stoi(key.substr(second + 1));
        if (k < 0 || l < 0) fail(ctx, "bad component key '" + key + "'");
        return {k, l};
    } catch (const std::logic_error&) {
        fail(ctx, "bad component key '" + key + "'");
    }
}

MultiMap load_plain_component(const json& entries, const BasisPtr& in, const BasisPtr& out,
                              int arity, int degree, Field field, const std::string& ctx) {
    MultiMap m = MultiMap::plain_map(in, out, arity, degree, field);
    for (const auto& e : entries) {
        std::vector<std::string> inputs = e.at("inputs").get<std::vector<std::string>>();
        SparseVec v(out, field);
        for (const auto& term : e.at("output"))
            v.add(term.at("label").get<std::string>(),
                  Scalar::parse(field, term.at("coeff").get<std::string>()));
        try {
            m.set(inputs, v);
        } catch (const std::invalid_argument& err) {
            fail(ctx, err.what());
        }
    }
    return m;
}

MultiMap load_marked_component(const json& entries, const BasisPtr& v_basis, const BasisPtr& w,
                               const BasisPtr& out, int k, int l, int degree, Field field,
                               const std::string& ctx) {
    MultiMap m = MultiMap::marked_map(v_basis, w, out, k, l, degree, field);
    for (const auto& e : entries) {
        std::vector<std::string> inputs = e.at("inputs").get<std::vector<std::string>>();
        SparseVec v(out, field);
        for (const auto& term : e.at("output"))
            v.add(term.at("label").get<std::string>(),
                  Scalar::parse(field, term.at("coeff").get<std::string>()));
        try {
            m.set(inputs, v);
        } catch (const std::invalid_argument& err) {
            fail(ctx, err.what());
        }
    }
    return m;
}

json dump_table(const std::map<std::vector<std::string>, SparseVec>& table) {
    json rows = json::array();
    for (const auto& [inputs, out] : table) {
        json terms = json::array();
        for (const auto& [label, c] : out.terms())
            terms.push_back({{"coeff", c.str()}, {"label", label}});
        rows.push_back({{"inputs", inputs}, {"output", terms}});
    }
    return rows;
}

std::string find_algebra_name(const Bundles& b, const AlgebraPtr& alg) {
    for (const auto& [name, a] : b.algebras)
        if (a == alg || a->content_key() == alg->content_key()) return name;
    throw std::runtime_error("algebra is not declared in this file");
}

std::string find_bimodule_name(const Bundles& b, const BimodulePtr& bim) {
    for (const auto& [name, m] : b.bimodules)
        if (m == bim || m->content_key() == bim->content_key()) return name;
    throw std::runtime_error("bimodule is not declared in this file");
}

}  // namespace

const AInfinityAlgebra& Bundles::sole_algebra(const std::string& name) const {
    return *sole(algebras, name, "algebra", "structures");
}
const AInfinityBimodule& Bundles::sole_bimodule(const std::string& name) const {
    return *sole(bimodules, name, "bimodule", "structures");
}
const BimoduleMorphism& Bundles::sole_morphism(const std::string& name) const {
    return sole(morphisms, name, "morphism", "structures");
}
const InfinityInnerProduct& Bundles::sole_inner_product(const std::string& name) const {
    return sole(inner_products, name, "inner product", "structures");
}

Bundles parse_structures(const std::string& json_text, const std::string& origin) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        fail(origin, e.what());  // includes byte position
    }
    Bundles b;
    try {
        if (doc.at("schema").get<int>() != 1) fail(origin, "unsupported schema version");
        b.field = field_from_string(doc.at("field").get<std::string>());
        for (const auto& [name, elems] : doc.at("bases").items()) {
            std::vector<BasisElement> es;
            for (const auto& e : elems)
                es.push_back({e.at("label").get<std::string>(), e.at("degree").get<int>()});
            b.bases.emplace(name, make_basis(name, std::move(es)));
        }
        for (const auto& s : doc.at("structures")) {
            std::string type = s.at("type").get<std::string>();
            std::string name = s.at("name").get<std::string>();
            std::string ctx = origin + ": " + type + " '" + name + "'";
            if (type == "algebra") {
                BasisPtr basis = b.bases.at(s.at("basis").get<std::string>());
                PlainFamily ops;
                if (s.contains("components")) {
                    for (const auto& [key, entries] : s.at("components").items()) {
                        if (key.size() < 2 || key[0] != 'm')
                            fail(ctx, "bad component key '" + key + "'");
                        int n = std::stoi(key.substr(1));
                        ops.emplace(n, load_plain_component(entries, basis, basis, n, n - 2,
                                                            b.field, ctx + " " + key));
                    }
                }
                try {
                    b.algebras.emplace(
                        name, std::make_shared<AInfinityAlgebra>(
                                  make_algebra(basis, b.field, std::move(ops))));
                } catch (const std::invalid_argument& err) {
                    fail(ctx, err.what());
                }
            } else if (type == "bimodule") {
                AlgebraPtr alg = b.algebras.at(s.at("algebra").get<std::string>());
                if (s.contains("canonical")) {
                    std::string which = s.at("canonical").get<std::string>();
                    if (which == "self")
                        b.bimodules.emplace(
                            name, std::make_shared<AInfinityBimodule>(self_bimodule(alg)));
                    else if (which == "dual-self")
                        b.bimodules.emplace(
                            name, std::make_shared<AInfinityBimodule>(dual_self_bimodule(alg)));
                    else
                        fail(ctx, "unknown canonical form '" + which + "'");
                    b.canonical_bimodules.emplace(name,
                                                  std::make_pair(which, s.at("algebra")));
                } else {
                    BasisPtr module = b.bases.at(s.at("basis").get<std::string>());
                    MarkedFamily ops;
                    for (const auto& [key, entries] : s.at("components").items()) {
                        auto [k, l] = parse_bislot(key, 'b', ctx);
                        ops.emplace(std::make_pair(k, l),
                                    load_marked_component(entries, alg->basis, module, module, k,
                                                          l, k + l - 1, b.field, ctx + " " + key));
                    }
                    try {
                        b.bimodules.emplace(name, std::make_shared<AInfinityBimodule>(
                                                      make_bimodule(alg, module, std::move(ops))));
                    } catch (const std::invalid_argument& err) {
                        fail(ctx, err.what());
                    }
                }
            } else if (type == "morphism") {
                BimodulePtr src = b.bimodules.at(s.at("source").get<std::string>());
                BimodulePtr tgt = b.bimodules.at(s.at("target").get<std::string>());
                MarkedFamily comps;
                for (const auto& [key, entries] : s.at("components").items()) {
                    auto [k, l] = parse_bislot(key, 'f', ctx);
                    comps.emplace(std::make_pair(k, l),
                                  load_marked_component(entries, src->algebra->basis, src->module,
                                                        tgt->module, k, l, k + l, b.field,
                                                        ctx + " " + key));
                }
                try {
                    b.morphisms.emplace(name, make_morphism(src, tgt, std::move(comps)));
                } catch (const std::invalid_argument& err) {
                    fail(ctx, err.what());
                }
            } else if (type == "inner_product") {
                AlgebraPtr alg = b.algebras.at(s.at("algebra").get<std::string>());
                std::map<std::pair<int, int>, PairingTable> pairings;
                for (const auto& [key, entries] : s.at("pairings").items()) {
                    auto [k, l] = parse_bislot(key, 'p', ctx);
                    PairingTable table{k, l, {}};
                    for (const auto& e : entries) {
                        std::vector<std::string> inputs =
                            e.at("inputs").get<std::vector<std::string>>();
                        Scalar v = Scalar::parse(b.field, e.at("value").get<std::string>());
                        table.values.emplace(std::move(inputs), v);
                    }
                    pairings.emplace(std::make_pair(k, l), std::move(table));
                }
                try {
                    b.inner_products.emplace(name,
                                             make_inner_product(alg, std::move(pairings)));
                } catch (const std::invalid_argument& err) {
                    fail(ctx, err.what());
                }
            } else {
                fail(ctx, "unknown structure type");
            }
            b.order.emplace_back(type, name);
        }
    } catch (const json::exception& e) {
        fail(origin, e.what());
    } catch (const std::invalid_argument& e) {
        fail(origin, e.what());
    }
    return b;
}

Bundles load_structures(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open file");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_structures(text, path);
}

std::string serialize_structures(const Bundles& b) {
    json doc;
    doc["schema"] = 1;
    doc["field"] = to_string(b.field);
    json bases = json::object();
    for (const auto& [name, basis] : b.bases) {
        json es = json::array();
        for (const auto& e : basis->elements())
            es.push_back({{"degree", e.degree}, {"label", e.label}});
        bases[name] = es;
    }
    doc["bases"] = bases;
    json structures = json::array();
    for (const auto& [type, name] : b.order) {
        json s;
        s["type"] = type;
        s["name"] = name;
        if (type == "algebra") {
            const auto& alg = *b.algebras.at(name);
            s["basis"] = alg.basis->name();
            json comps = json::object();
            for (const auto& [n, c] : alg.ops)
                if (!c.is_zero()) comps["m" + std::to_string(n)] = dump_table(c.table());
            s["components"] = comps;
        } else if (type == "bimodule") {
            const auto& bim = *b.bimodules.at(name);
            if (auto it = b.canonical_bimodules.find(name); it != b.canonical_bimodules.end()) {
                s["algebra"] = it->second.second;
                s["canonical"] = it->second.first;
            } else {
                s["algebra"] = find_algebra_name(b, bim.algebra);
                s["basis"] = bim.module->name();
                json comps = json::object();
                for (const auto& [kl, c] : bim.ops)
                    if (!c.is_zero())
                        comps["b_" + std::to_string(kl.first) + "_" + std::to_string(kl.second)] =
                            dump_table(c.table());
                s["components"] = comps;
            }
        } else if (type == "morphism") {
            const auto& mor = b.morphisms.at(name);
            s["source"] = find_bimodule_name(b, mor.source);
            s["target"] = find_bimodule_name(b, mor.target);
            json comps = json::object();
            for (const auto& [kl, c] : mor.comps)
                if (!c.is_zero())
                    comps["f_" + std::to_string(kl.first) + "_" + std::to_string(kl.second)] =
                        dump_table(c.table());
            s["components"] = comps;
        } else if (type == "inner_product") {
            const auto& ip = b.inner_products.at(name);
            s["algebra"] = find_algebra_name(b, ip.algebra);
            json pairings = json::object();
            for (const auto& [kl, table] : ip.pairings) {
                json rows = json::array();
                for (const auto& [inputs, v] : table.values)
                    rows.push_back({{"inputs", inputs}, {"value", v.str()}});
                pairings["p_" + std::to_string(kl.first) + "_" + std::to_string(kl.second)] = rows;
            }
            s["pairings"] = pairings;
        }
        structures.push_back(s);
    }
    doc["structures"] = structures;
    return doc.dump(2) + "\n";
}

void save_structures(const Bundles& b, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error(path + ": cannot open for writing");
    out << serialize_structures(b);
}

std::string report_json(const Report& r) {
    json doc;
    doc["verdict"] = r.pass ? "pass" : "fail";
    doc["seconds"] = r.seconds;
    json checks = json::array();
    for (const auto& c : r.checks) {
        json e;
        e["name"] = c.name;
        e["formulation"] = c.formulation;
        e["ok"] = c.ok;
        e["cases"] = c.cases;
        if (!c.notes.empty()) e["notes"] = c.notes;
        json ces = json::array();
        for (const auto& x : c.counterexamples)
            ces.push_back({{"tuple", x.inputs}, {"lhs", x.lhs}, {"rhs", x.rhs}});
        if (!ces.empty()) e["counterexamples"] = ces;
        checks.push_back(e);
    }
    doc["checks"] = checks;
    return doc.dump(2) + "\n";
}

}  // namespace ainfty
