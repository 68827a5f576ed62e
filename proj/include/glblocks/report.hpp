#pragma once

// JSON and CSV renderings of engine objects. Objects use std::map underneath,
// so keys come out sorted and identical inputs give identical bytes.

#include "glblocks/blockcalc.hpp"
#include "glblocks/charvalue.hpp"
#include "glblocks/glclass.hpp"
#include "glblocks/oracle/classes.hpp"
#include "glblocks/oracle/dixon.hpp"
#include "glblocks/partition.hpp"

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace glblocks::report {

using Json = nlohmann::json;

inline Json to_json(const Partition& p)
{
    Json out = Json::array();
    for (int part : p.parts()) out.push_back(part);
    return out;
}

/// Exact values travel as strings: "7", "-3/8".
inline Json to_json(const Rational& r) { return to_string(r); }
inline Json to_json(const BigInt& v) { return v.str(); }

inline Json to_json(const std::vector<Partition>& ps)
{
    Json out = Json::array();
    for (const auto& p : ps) out.push_back(to_json(p));
    return out;
}

inline Json to_json(const Context& ctx)
{
    return Json{{"n", ctx.n}, {"q", ctx.q}, {"d", ctx.d}, {"variant", to_string(ctx.variant)}};
}

inline Json to_json(const GLClassLabel& c)
{
    Json out = Json::array();
    for (const auto& [f, zeta] : c.assignment) out.push_back(Json{{"polynomial", to_string(f)}, {"partition", to_json(zeta)}});
    return out;
}

inline Json to_json(const DTypeDescriptor& t)
{
    Json pairs = Json::array();
    for (const auto& [k, m] : t.pairs) pairs.push_back(Json::array({k, m}));
    return Json{{"pairs", pairs}, {"weight", t.weight}};
}

inline Json class_record(const GLClassLabel& c, int d, Variant variant)
{
    auto xy = xy_decompose(c, d, variant);
    return Json{{"assignment", to_json(c)},
                {"size", to_json(class_size(c))},
                {"centralizer_order", to_json(centralizer_order(c))},
                {"d_type", to_json(d_type(c, d, variant))},
                {"section", to_json(xy.x_part)}};
}

inline Json classes_report(int n, int q, int d, Variant variant)
{
    Json records = Json::array();
    BigInt total = 0;
    for (const auto& c : all_classes(n, q)) {
        records.push_back(class_record(c, d, variant));
        total += class_size(c);
    }
    return Json{{"context", to_json(Context{n, q, d, variant})},
                {"classes", records},
                {"total_size", to_json(total)},
                {"group_order", to_json(gl_order(n, q))}};
}

inline Json to_json(const CharValueTable& t)
{
    Json labels = Json::array(), classes = Json::array(), rows = Json::array();
    for (const auto& nu : t.labels) labels.push_back(to_json(nu));
    for (const auto& c : t.classes) classes.push_back(to_string(c));
    for (const auto& row : t.value) {
        Json r = Json::array();
        for (const auto& v : row) r.push_back(to_json(v));
        rows.push_back(r);
    }
    return Json{{"n", t.n}, {"q", t.q}, {"characters", labels}, {"classes", classes}, {"values", rows}};
}

inline Json to_json(const BlockPartition& b)
{
    Json out = Json::array();
    for (const auto& block : b.blocks) out.push_back(to_json(block));
    return out;
}

/// d-regular inner-product matrix, rows and columns in label order.
inline Json inner_product_matrix(const Context& ctx, const Domain& dom)
{
    const auto& data = context_data(ctx);
    std::size_t k = data.table->labels.size();
    Json rows = Json::array();
    for (std::size_t a = 0; a < k; ++a) {
        Json r = Json::array();
        for (std::size_t b = 0; b < k; ++b) r.push_back(to_json(data.inner(a, b, dom)));
        rows.push_back(r);
    }
    return rows;
}

inline std::string inner_product_csv(const Context& ctx, const Domain& dom)
{
    const auto& data = context_data(ctx);
    const auto& labels = data.table->labels;
    std::ostringstream os;
    os << "\"\"";
    for (const auto& nu : labels) os << ",\"" << to_string(nu) << "\"";
    os << "\n";
    for (std::size_t a = 0; a < labels.size(); ++a) {
        os << "\"" << to_string(labels[a]) << "\"";
        for (std::size_t b = 0; b < labels.size(); ++b) os << "," << to_string(data.inner(a, b, dom));
        os << "\n";
    }
    return os.str();
}

inline Json blocks_report(const Context& ctx)
{
    auto computed = unipotent_blocks(ctx);
    auto combinatorial = combinatorial_blocks(ctx.n, ctx.d);
    std::string verdict = computed.same_as(combinatorial) ? "equal" : computed.refines(combinatorial) ? "refines" : "neither";
    Json cores = Json::array();
    for (const auto& block : combinatorial.blocks) cores.push_back(to_json(d_core(block.front(), ctx.d)));
    return Json{{"context", to_json(ctx)},
                {"F", to_json(ctx.F())},
                {"standing_hypothesis", ctx.standing_hypothesis()},
                {"computed_blocks", to_json(computed)},
                {"combinatorial_blocks", to_json(combinatorial)},
                {"combinatorial_cores", cores},
                {"verdict", verdict},
                {"characters", to_json(context_data(ctx).table->labels)},
                {"inner_products_d_regular", inner_product_matrix(ctx, Domain::d_regular())}};
}

inline Json to_json(const LinkChain& c)
{
    Json kinds = Json::array();
    for (auto k : c.kinds) kinds.push_back(to_string(k));
    return Json{{"chain", to_json(c.chain)}, {"links", kinds}, {"construction", c.construction}};
}

// ---------------------------------------------------------------------------
// Oracle dumps

inline Json oracle_classes_json(const oracle::OracleClassData& cd)
{
    Json out = Json::array();
    for (const auto& c : cd.classes)
        out.push_back(Json{{"label", to_json(c.label)},
                           {"size", c.members.size()},
                           {"centralizer_order", to_json(c.centralizer_order)},
                           {"element_order", c.element_order}});
    return out;
}

inline Json oracle_table_json(const oracle::CharacterTable& t)
{
    Json rows = Json::array();
    for (const auto& row : t.values) {
        Json r = Json::array();
        for (const auto& v : row) r.push_back(v.to_string());
        rows.push_back(r);
    }
    return Json{{"exponent", t.exponent}, {"prime", t.prime}, {"degrees", t.degrees}, {"values", rows}};
}

inline Json oracle_constituents_json(const oracle::BorelConstituents& b)
{
    Json labeled = Json::object();
    for (const auto& [lambda, row] : b.labeled) labeled[to_string(lambda)] = row;
    return Json{{"permutation_character", b.permutation_character},
                {"multiplicity", b.multiplicity},
                {"labeled", labeled},
                {"ties", b.ties}};
}

}  // namespace glblocks::report
